// aml/eval.h

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

#ifndef AML_EVAL_H_
#define AML_EVAL_H_

#include <string>
#include <vector>

#include "aml/data.h"
#include "aml/solver.h"

namespace aml {

/// k-NN votes under Dist_M with deterministic tie handling: neighbors are
/// ordered by (distance, index); vote ties break by smaller summed distance,
/// then by smaller class id.
std::vector<int> knn_predict(const MetricMatrix &m,
                             const LabeledExamples &train,
                             const LabeledExamples &test, int k);

double knn_error_rate(const MetricMatrix &m, const LabeledExamples &train,
                      const LabeledExamples &test, int k);

struct RocPoint {
  double threshold;
  double fpr;
  double tpr;
};

struct RocCurve {
  std::vector<RocPoint> points;  // sorted by threshold
  double auc = 0.0;
};

/// ROC over "similar when distance <= threshold", thresholds swept over
/// -inf, every distinct distance, +inf. AUC by trapezoidal integration,
/// which equals the Mann-Whitney statistic with ties counted half.
RocCurve roc_from_scores(const std::vector<double> &distances,
                         const std::vector<int> &labels);

RocCurve roc_auc(const MetricMatrix &m, const LabeledPairSet &p);

struct SweepPoint {
  double value;
  double train_error;
  double test_error;
};

struct SweepResult {
  std::string parameter;  // "alpha" or "beta"
  std::vector<SweepPoint> points;
};

/// Trains one model per grid value of `parameter` on the given pairs (shared
/// across grid points) and reports k-NN train/test error.
SweepResult sweep(const LabeledExamples &train, const LabeledExamples &test,
                  const LabeledPairSet &pairs, const std::string &parameter,
                  const std::vector<double> &grid, const SolverConfig &base,
                  int k);

struct EvalReport {
  std::string task;  // classification | verification | sweep
  std::vector<double> per_trial;
  double mean = 0.0;
  double stddev = 0.0;
  RocCurve roc;  // verification only
};

EvalReport summarize_trials(const std::string &task,
                            const std::vector<double> &per_trial);

}  // namespace aml

#endif  // AML_EVAL_H_
