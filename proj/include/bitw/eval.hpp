#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace bitw {

// Per-feature (min, max) pairs learned from training rows only.
struct MinMaxScaler {
    Eigen::VectorXd min;
    Eigen::VectorXd max;

    // x' = (x - min)/(max - min); constant features map to 0.
    // Test values outside the training range are not clamped.
    Eigen::MatrixXd transform(const Eigen::MatrixXd& rows) const;
};

MinMaxScaler fit_minmax(const Eigen::MatrixXd& train_rows);

enum class SplitMode { Holdout, Kfold };

struct SplitSpec {
    SplitMode mode = SplitMode::Kfold;
    double train_fraction = 0.7;  // holdout
    int k = 10;                   // kfold
};

// Stratified, seeded, deterministic assignments. Holdout: 0 = train,
// 1 = test. Kfold: fold index in [0, k).
struct SplitPlan {
    SplitSpec spec;
    std::vector<int> assignments;
};

SplitPlan make_splits(const std::vector<int>& label_ids, int num_classes,
                      const SplitSpec& spec, uint64_t seed);

// Pooled-covariance Gaussian discriminant with a small ridge on the
// covariance diagonal. Discriminant scores double as ranking scores
// for AUC.
struct LdaModel {
    Eigen::MatrixXd class_means;  // num_classes x dim
    Eigen::MatrixXd cov_inverse;  // dim x dim
    Eigen::VectorXd log_priors;
};

LdaModel lda_fit(const Eigen::MatrixXd& rows, const std::vector<int>& label_ids,
                 int num_classes, double ridge = 1e-6);

// Returns per-row class scores (num_rows x num_classes); predicted label
// is the argmax row-wise.
Eigen::MatrixXd lda_scores(const LdaModel& model, const Eigen::MatrixXd& rows);

std::vector<int> argmax_labels(const Eigen::MatrixXd& scores);

// Majority vote over the Euclidean k nearest training rows. Ties are
// broken by smallest mean neighbor distance, then by smallest label id
// (label ids are assigned lexicographically).
std::vector<int> knn_predict(const Eigen::MatrixXd& train_rows,
                             const std::vector<int>& train_labels, int k,
                             const Eigen::MatrixXd& query_rows);

// Neighbor-vote fractions per class, usable as AUC scores.
Eigen::MatrixXd knn_scores(const Eigen::MatrixXd& train_rows,
                           const std::vector<int>& train_labels, int k,
                           const Eigen::MatrixXd& query_rows);

struct EvalReport {
    double accuracy = 0.0;
    double accuracy_sd = 0.0;  // across folds; 0 for a single split
    double auc = 0.0;          // one-vs-rest macro AUC
    Eigen::MatrixXi confusion; // truth x predicted
};

// Area under the ROC curve for one binary problem via rank statistics
// (ties count half). Returns -1 when either class is absent.
double binary_auc(const std::vector<double>& scores,
                  const std::vector<int>& positives);

EvalReport evaluate(const std::vector<int>& predictions,
                    const Eigen::MatrixXd& scores,
                    const std::vector<int>& truth, int num_classes);

struct ClassifierConfig {
    enum class Kind { Lda, Knn } kind = Kind::Lda;
    int knn_k = 5;
};

// Full protocol for one train/test partition: fit scaler on the training
// rows, transform both sides, fit, score.
EvalReport evaluate_split(const Eigen::MatrixXd& features,
                          const std::vector<int>& label_ids, int num_classes,
                          const std::vector<int>& train_idx,
                          const std::vector<int>& test_idx,
                          const ClassifierConfig& clf);

// Stratified k-fold CV; per-fold reports are merged by fold index.
EvalReport cross_validate(const Eigen::MatrixXd& features,
                          const std::vector<int>& label_ids, int num_classes,
                          int k, uint64_t seed, const ClassifierConfig& clf);

EvalReport holdout_evaluate(const Eigen::MatrixXd& features,
                            const std::vector<int>& label_ids, int num_classes,
                            double train_fraction, uint64_t seed,
                            const ClassifierConfig& clf);

}  // namespace bitw
