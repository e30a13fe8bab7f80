// aml/data.h

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

#ifndef AML_DATA_H_
#define AML_DATA_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "aml/metric.h"

namespace aml {

/// Feature vectors with dense class ids. `class_names[id]` is the label
/// string as it appeared in the source, ids assigned in sorted order
/// (numeric when all labels parse as numbers, lexicographic otherwise).
struct LabeledExamples {
  Matrix features;           // one row per example
  std::vector<int> labels;   // dense ids in [0, num_classes)
  std::vector<std::string> class_names;

  Index count() const { return features.rows(); }
  Index dim() const { return features.cols(); }
  int num_classes() const { return static_cast<int>(class_names.size()); }
};

/// Reads a delimited text file. `label_column` is a 0-based column index or
/// a header name; a header row is consumed when the first line has any
/// non-numeric cell or when the label column is given by name.
LabeledExamples load_examples(const std::string &path,
                              const std::string &label_column,
                              char delimiter = ',');

/// Deterministic shuffle split; the train side receives round(n * fraction)
/// examples.
std::pair<LabeledExamples, LabeledExamples> split(const LabeledExamples &e,
                                                  double train_fraction,
                                                  std::uint64_t seed);

/// Samples labeled pairs without self-pairs. count <= 0 selects the default
/// 1000 c (c - 1), capped at availability. Balanced mode targets a 50/50
/// similar/dissimilar mix, topping up from the other side when one is
/// exhausted. Without replacement each unordered pair appears at most once.
LabeledPairSet sample_pairs(const LabeledExamples &e, Index count,
                            bool balanced, std::uint64_t seed,
                            bool with_replacement = false);

/// Synthetic two-class generator. The training separation has a large
/// component along a biased low-variance axis plus a moderate component
/// along an informative axis; at test time the biased component vanishes
/// and the means are pulled to `test_separation`. The shared within-class
/// covariance has standard deviation `low_variance_std` along a direction
/// tilted `covariance_tilt_degrees` away from the biased axis.
struct SynthConfig {
  Index dim = 10;
  Index per_class = 100;
  double train_separation = 4.0;
  double test_separation = 1.5;
  double bias_separation = 3.2;
  double low_variance_std = 0.11;
  double covariance_tilt_degrees = 14.0;
};

std::pair<LabeledExamples, LabeledExamples> synth_overlap(
    std::uint64_t seed, const SynthConfig &cfg = SynthConfig());

/// Projection onto the top two principal components of the sample
/// covariance; n x 2, variance of column 0 >= variance of column 1.
Matrix pca2(const LabeledExamples &e);

/// Per-feature zero-mean unit-variance transform fitted on training data.
/// Features with standard deviation below 1e-12 are centered only.
struct Standardizer {
  Vector mean;
  Vector scale;

  static Standardizer Fit(const LabeledExamples &e);
  LabeledExamples Apply(const LabeledExamples &e) const;
};

}  // namespace aml

#endif  // AML_DATA_H_
