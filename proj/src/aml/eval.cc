// aml/eval.cc

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

#include "aml/eval.h"

#include <algorithm>
#include <cmath>
#include <map>

namespace aml {

std::vector<int> knn_predict(const MetricMatrix &m,
                             const LabeledExamples &train,
                             const LabeledExamples &test, int k) {
  if (train.dim() != m.dim() || test.dim() != m.dim())
    throw InvalidInputError("knn_predict: dimension mismatch");
  if (k < 1 || k > train.count())
    throw InvalidInputError("knn_predict: k must be in [1, train count]");

  std::vector<int> out(test.count());
  std::vector<std::pair<double, Index>> dist(train.count());
  for (Index t = 0; t < test.count(); ++t) {
    Vector x = test.features.row(t).transpose();
    for (Index i = 0; i < train.count(); ++i) {
      Vector d = x - train.features.row(i).transpose();
      dist[i] = {d.dot(m.mat() * d), i};
    }
    std::partial_sort(dist.begin(), dist.begin() + k, dist.end());
    // votes and summed distance per class among the k nearest
    std::map<int, std::pair<int, double>> tally;
    for (int j = 0; j < k; ++j) {
      auto &entry = tally[train.labels[dist[j].second]];
      entry.first += 1;
      entry.second += dist[j].first;
    }
    int best = -1;
    std::pair<int, double> best_score{-1, 0.0};
    for (const auto &[cls, score] : tally) {
      bool wins = score.first > best_score.first ||
                  (score.first == best_score.first &&
                   score.second < best_score.second);
      // map iteration is ascending, so equal (votes, distance) keeps the
      // smallest class id
      if (wins) {
        best = cls;
        best_score = score;
      }
    }
    out[t] = best;
  }
  return out;
}

double knn_error_rate(const MetricMatrix &m, const LabeledExamples &train,
                      const LabeledExamples &test, int k) {
  std::vector<int> pred = knn_predict(m, train, test, k);
  Index wrong = 0;
  for (Index i = 0; i < test.count(); ++i)
    if (pred[i] != test.labels[i]) ++wrong;
  return static_cast<double>(wrong) / static_cast<double>(test.count());
}

RocCurve roc_from_scores(const std::vector<double> &distances,
                         const std::vector<int> &labels) {
  if (distances.size() != labels.size() || distances.empty())
    throw InvalidInputError("roc: distances and labels must align");
  long pos = 0, neg = 0;
  for (int y : labels) {
    if (y == 1)
      ++pos;
    else if (y == -1)
      ++neg;
    else
      throw InvalidInputError("roc: labels must be +1/-1");
  }
  if (pos == 0 || neg == 0)
    throw InvalidInputError("roc: both labels required");

  std::vector<double> thresholds(distances);
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());

  RocCurve curve;
  const double inf = std::numeric_limits<double>::infinity();
  curve.points.push_back({-inf, 0.0, 0.0});
  for (double th : thresholds) {
    long tp = 0, fp = 0;
    for (size_t i = 0; i < distances.size(); ++i) {
      if (distances[i] <= th) {
        if (labels[i] == 1)
          ++tp;
        else
          ++fp;
      }
    }
    curve.points.push_back({th, static_cast<double>(fp) / neg,
                            static_cast<double>(tp) / pos});
  }
  curve.points.push_back({inf, 1.0, 1.0});

  double auc = 0.0;
  for (size_t i = 1; i < curve.points.size(); ++i) {
    double dx = curve.points[i].fpr - curve.points[i - 1].fpr;
    auc += dx * 0.5 * (curve.points[i].tpr + curve.points[i - 1].tpr);
  }
  curve.auc = auc;
  return curve;
}

RocCurve roc_auc(const MetricMatrix &m, const LabeledPairSet &p) {
  std::vector<double> distances(p.count());
  std::vector<int> labels(p.count());
  for (Index i = 0; i < p.count(); ++i) {
    distances[i] = mahalanobis(m, p.left().col(i), p.right().col(i));
    labels[i] = p.labels()(i);
  }
  return roc_from_scores(distances, labels);
}

SweepResult sweep(const LabeledExamples &train, const LabeledExamples &test,
                  const LabeledPairSet &pairs, const std::string &parameter,
                  const std::vector<double> &grid, const SolverConfig &base,
                  int k) {
  if (grid.empty()) throw ConfigError("sweep: empty grid");
  if (parameter != "alpha" && parameter != "beta")
    throw ConfigError("sweep: parameter must be alpha or beta");
  SweepResult result;
  result.parameter = parameter;
  for (double v : grid) {
    SolverConfig cfg = base;
    if (parameter == "alpha")
      cfg.alpha = v;
    else
      cfg.beta = v;
    auto [m, report] = aml::train(pairs, cfg);
    result.points.push_back({v, knn_error_rate(m, train, train, k),
                             knn_error_rate(m, train, test, k)});
  }
  return result;
}

EvalReport summarize_trials(const std::string &task,
                            const std::vector<double> &per_trial) {
  EvalReport r;
  r.task = task;
  r.per_trial = per_trial;
  if (per_trial.empty()) return r;
  double sum = 0.0;
  for (double v : per_trial) sum += v;
  r.mean = sum / per_trial.size();
  double sq = 0.0;
  for (double v : per_trial) sq += (v - r.mean) * (v - r.mean);
  r.stddev = per_trial.size() > 1 ? std::sqrt(sq / (per_trial.size() - 1)) : 0.0;
  return r;
}

}  // namespace aml
