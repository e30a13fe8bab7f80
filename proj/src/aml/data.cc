// aml/data.cc

// Copyright 2026  AML Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "aml/data.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace aml {

namespace {

bool parse_double(const std::string &cell, double *out) {
  if (cell.empty()) return false;
  size_t pos = 0;
  try {
    *out = std::stod(cell, &pos);
  } catch (const std::exception &) {
    return false;
  }
  while (pos < cell.size() && std::isspace(static_cast<unsigned char>(cell[pos])))
    ++pos;
  return pos == cell.size();
}

std::string trim(const std::string &s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_line(const std::string &line, char delimiter) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, delimiter)) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == delimiter) cells.push_back("");
  return cells;
}

}  // namespace

LabeledExamples load_examples(const std::string &path,
                              const std::string &label_column,
                              char delimiter) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open data file: " + path);

  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!trim(line).empty()) lines.push_back(line);
  }
  if (lines.empty()) throw DataError("empty data file: " + path);

  // Label column by index or by header name.
  long label_idx = -1;
  bool by_name = true;
  try {
    size_t pos = 0;
    label_idx = std::stol(label_column, &pos);
    if (pos == label_column.size()) by_name = false;
  } catch (const std::exception &) {
  }

  std::vector<std::string> first = split_line(lines[0], delimiter);
  bool has_header = false;
  if (by_name) {
    has_header = true;
  } else {
    for (const auto &cell : first) {
      double v;
      if (!parse_double(cell, &v)) {
        has_header = true;
        break;
      }
    }
  }
  if (by_name) {
    auto it = std::find(first.begin(), first.end(), label_column);
    if (it == first.end())
      throw DataError("label column '" + label_column + "' not in header of " +
                      path);
    label_idx = it - first.begin();
  }

  size_t start = has_header ? 1 : 0;
  if (lines.size() <= start) throw DataError("no data rows in " + path);
  const size_t width = split_line(lines[start], delimiter).size();
  if (label_idx < 0 || static_cast<size_t>(label_idx) >= width)
    throw DataError("label column index " + std::to_string(label_idx) +
                    " out of range (row width " + std::to_string(width) + ")");

  const size_t n = lines.size() - start;
  Matrix features(n, width - 1);
  std::vector<std::string> raw_labels(n);
  for (size_t r = 0; r < n; ++r) {
    std::vector<std::string> cells = split_line(lines[start + r], delimiter);
    size_t file_row = start + r + 1;  // 1-based, counting the header
    if (cells.size() != width)
      throw DataError("ragged row " + std::to_string(file_row) + ": expected " +
                      std::to_string(width) + " cells, got " +
                      std::to_string(cells.size()));
    Index c_out = 0;
    for (size_t c = 0; c < width; ++c) {
      if (static_cast<long>(c) == label_idx) {
        if (cells[c].empty())
          throw DataError("empty label at row " + std::to_string(file_row));
        raw_labels[r] = cells[c];
        continue;
      }
      double v;
      if (!parse_double(cells[c], &v))
        throw DataError("non-numeric cell '" + cells[c] + "' at row " +
                        std::to_string(file_row) + ", column " +
                        std::to_string(c + 1));
      if (!std::isfinite(v))
        throw DataError("non-finite value at row " + std::to_string(file_row) +
                        ", column " + std::to_string(c + 1));
      features(r, c_out++) = v;
    }
  }
  if (n < 2) throw DataError("need at least 2 examples, got " +
                             std::to_string(n));

  // Dense ids in deterministic order: numeric when possible.
  std::vector<std::string> names(raw_labels);
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  bool all_numeric = true;
  for (const auto &s : names) {
    double v;
    if (!parse_double(s, &v)) {
      all_numeric = false;
      break;
    }
  }
  if (all_numeric) {
    std::sort(names.begin(), names.end(), [](const auto &a, const auto &b) {
      return std::stod(a) < std::stod(b);
    });
  }
  std::map<std::string, int> id;
  for (size_t i = 0; i < names.size(); ++i) id[names[i]] = static_cast<int>(i);

  LabeledExamples out;
  out.features = std::move(features);
  out.class_names = std::move(names);
  out.labels.resize(n);
  for (size_t r = 0; r < n; ++r) out.labels[r] = id[raw_labels[r]];
  return out;
}

std::pair<LabeledExamples, LabeledExamples> split(const LabeledExamples &e,
                                                  double train_fraction,
                                                  std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0))
    throw DataError("split: train fraction must be in (0, 1)");
  const Index n = e.count();
  const Index k = static_cast<Index>(std::llround(n * train_fraction));
  if (k <= 0 || k >= n)
    throw DataError("split: fraction " + std::to_string(train_fraction) +
                    " produces an empty side for n = " + std::to_string(n));
  std::vector<Index> idx(n);
  std::iota(idx.begin(), idx.end(), Index{0});
  std::mt19937_64 rng(seed);
  std::shuffle(idx.begin(), idx.end(), rng);

  auto take = [&](Index lo, Index hi) {
    LabeledExamples part;
    part.features.resize(hi - lo, e.dim());
    part.labels.resize(hi - lo);
    part.class_names = e.class_names;
    for (Index i = lo; i < hi; ++i) {
      part.features.row(i - lo) = e.features.row(idx[i]);
      part.labels[i - lo] = e.labels[idx[i]];
    }
    return part;
  };
  return {take(0, k), take(k, n)};
}

LabeledPairSet sample_pairs(const LabeledExamples &e, Index count,
                            bool balanced, std::uint64_t seed,
                            bool with_replacement) {
  const Index n = e.count();
  if (n < 2) throw DataError("sample_pairs: need at least 2 examples");
  if (count <= 0)
    count = 1000 * e.num_classes() * (e.num_classes() - 1);
  if (count <= 0) throw DataError("sample_pairs: nonpositive pair budget");

  // Enumerate unordered candidate pairs per kind; deterministic order.
  std::vector<std::pair<Index, Index>> sim, dis;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      (e.labels[i] == e.labels[j] ? sim : dis).emplace_back(i, j);

  if (balanced && (sim.empty() || dis.empty()))
    throw DataError("sample_pairs: balanced sampling needs both similar and "
                    "dissimilar pairs");

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::shuffle(sim.begin(), sim.end(), rng);
  std::shuffle(dis.begin(), dis.end(), rng);

  std::vector<std::pair<Index, Index>> chosen;
  std::vector<int> labels;
  auto draw = [&](std::vector<std::pair<Index, Index>> &pool, int label,
                  Index want) {
    for (Index t = 0; t < want; ++t) {
      if (with_replacement) {
        if (pool.empty()) break;
        std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
        chosen.push_back(pool[pick(rng)]);
      } else {
        if (static_cast<size_t>(t) >= pool.size()) break;
        chosen.push_back(pool[t]);
      }
      labels.push_back(label);
    }
  };

  if (balanced) {
    Index want_sim = (count + 1) / 2;
    Index want_dis = count - want_sim;
    draw(sim, 1, want_sim);
    Index got_sim = static_cast<Index>(chosen.size());
    draw(dis, -1, want_dis + (want_sim - got_sim));
    Index got = static_cast<Index>(chosen.size());
    if (got < count && !with_replacement)
      draw(sim, 1, std::min<Index>(count - got,
                                   static_cast<Index>(sim.size()) - got_sim));
  } else {
    // Uniform over all candidate pairs.
    std::vector<std::pair<std::pair<Index, Index>, int>> all;
    all.reserve(sim.size() + dis.size());
    for (auto &p : sim) all.push_back({p, 1});
    for (auto &p : dis) all.push_back({p, -1});
    std::shuffle(all.begin(), all.end(), rng);
    Index want = count;
    for (Index t = 0; t < want; ++t) {
      if (with_replacement) {
        std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
        auto &pr = all[pick(rng)];
        chosen.push_back(pr.first);
        labels.push_back(pr.second);
      } else {
        if (static_cast<size_t>(t) >= all.size()) break;
        chosen.push_back(all[t].first);
        labels.push_back(all[t].second);
      }
    }
  }
  if (chosen.empty()) throw DataError("sample_pairs: no pairs available");

  Matrix left(e.dim(), static_cast<Index>(chosen.size()));
  Matrix right(e.dim(), static_cast<Index>(chosen.size()));
  Eigen::VectorXi y(static_cast<Index>(chosen.size()));
  for (size_t t = 0; t < chosen.size(); ++t) {
    left.col(static_cast<Index>(t)) = e.features.row(chosen[t].first).transpose();
    right.col(static_cast<Index>(t)) =
        e.features.row(chosen[t].second).transpose();
    y(static_cast<Index>(t)) = labels[t];
  }
  return LabeledPairSet(std::move(left), std::move(right), std::move(y));
}

std::pair<LabeledExamples, LabeledExamples> synth_overlap(
    std::uint64_t seed, const SynthConfig &cfg) {
  if (cfg.dim < 2 || cfg.per_class < 1)
    throw ConfigError("synth_overlap: dim >= 2 and per_class >= 1 required");
  if (cfg.bias_separation >= cfg.train_separation)
    throw ConfigError(
        "synth_overlap: bias separation must stay below the train separation");

  const Index d = cfg.dim;
  Vector mean_train = Vector::Zero(d);
  mean_train(0) = cfg.bias_separation / 2.0;
  mean_train(1) = std::sqrt(cfg.train_separation * cfg.train_separation -
                            cfg.bias_separation * cfg.bias_separation) /
                  2.0;
  Vector mean_test = Vector::Zero(d);
  mean_test(1) = cfg.test_separation / 2.0;

  // Within-class covariance factor: unit axes except one low-variance
  // direction tilted inside the (0, 1) plane.
  const double th = cfg.covariance_tilt_degrees * M_PI / 180.0;
  Matrix factor = Matrix::Identity(d, d);
  factor(0, 0) = std::cos(th) * cfg.low_variance_std;
  factor(1, 0) = std::sin(th) * cfg.low_variance_std;
  factor(0, 1) = -std::sin(th);
  factor(1, 1) = std::cos(th);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  // Draw order: train class 0 rows, train class 1, test class 0, test
  // class 1; within a row, one normal per dimension.
  auto fill = [&](LabeledExamples &out, const Vector &mean) {
    out.features.resize(2 * cfg.per_class, d);
    out.labels.resize(2 * cfg.per_class);
    out.class_names = {"0", "1"};
    for (int cls = 0; cls < 2; ++cls) {
      double sign = cls == 0 ? -1.0 : 1.0;
      for (Index r = 0; r < cfg.per_class; ++r) {
        Vector z(d);
        for (Index c = 0; c < d; ++c) z(c) = normal(rng);
        out.features.row(cls * cfg.per_class + r) =
            (sign * mean + factor * z).transpose();
        out.labels[cls * cfg.per_class + r] = cls;
      }
    }
  };
  LabeledExamples train_set, test_set;
  fill(train_set, mean_train);
  fill(test_set, mean_test);
  return {std::move(train_set), std::move(test_set)};
}

Matrix pca2(const LabeledExamples &e) {
  if (e.count() < 2 || e.dim() < 2)
    throw DataError("pca2: need at least 2 examples and 2 dimensions");
  Matrix centered = e.features.rowwise() - e.features.colwise().mean();
  Matrix cov = centered.transpose() * centered /
               static_cast<double>(e.count() - 1);
  if (cov.trace() < 1e-12) throw DataError("pca2: zero-variance data");
  EigenDecomposition dec = sym_eigen(SymMatrix(cov));
  Matrix proj(e.dim(), 2);
  proj.col(0) = dec.eigenvectors.col(e.dim() - 1);
  proj.col(1) = dec.eigenvectors.col(e.dim() - 2);
  return centered * proj;
}

Standardizer Standardizer::Fit(const LabeledExamples &e) {
  Standardizer s;
  s.mean = e.features.colwise().mean();
  Matrix centered = e.features.rowwise() - s.mean.transpose();
  Vector var = centered.array().square().colwise().mean();
  s.scale.resize(var.size());
  for (Index j = 0; j < var.size(); ++j) {
    double sd = std::sqrt(var(j));
    s.scale(j) = sd < 1e-12 ? 1.0 : sd;
  }
  return s;
}

LabeledExamples Standardizer::Apply(const LabeledExamples &e) const {
  if (e.dim() != mean.size())
    throw InvalidInputError("Standardizer: dimension mismatch");
  LabeledExamples out = e;
  out.features = (e.features.rowwise() - mean.transpose()).array().rowwise() /
                 scale.transpose().array();
  return out;
}

}  // namespace aml
