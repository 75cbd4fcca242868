#include "bitw/eval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "bitw/errors.hpp"

namespace bitw {

MinMaxScaler fit_minmax(const Eigen::MatrixXd& train_rows) {
    if (train_rows.rows() < 1) {
        throw EmptyTrainingSetError("cannot fit scaler on zero rows");
    }
    MinMaxScaler scaler;
    scaler.min = train_rows.colwise().minCoeff();
    scaler.max = train_rows.colwise().maxCoeff();
    return scaler;
}

Eigen::MatrixXd MinMaxScaler::transform(const Eigen::MatrixXd& rows) const {
    if (rows.cols() != min.size()) {
        throw DimensionMismatchError("row width does not match fitted scaler");
    }
    Eigen::MatrixXd out(rows.rows(), rows.cols());
    for (Eigen::Index c = 0; c < rows.cols(); ++c) {
        const double range = max[c] - min[c];
        if (range == 0.0) {
            out.col(c).setZero();
        } else {
            out.col(c) = (rows.col(c).array() - min[c]) / range;
        }
    }
    return out;
}

SplitPlan make_splits(const std::vector<int>& label_ids, int num_classes,
                      const SplitSpec& spec, uint64_t seed) {
    std::vector<std::vector<int>> by_class(num_classes);
    for (size_t i = 0; i < label_ids.size(); ++i) {
        by_class.at(label_ids[i]).push_back(static_cast<int>(i));
    }

    std::mt19937_64 rng(seed);
    SplitPlan plan;
    plan.spec = spec;
    plan.assignments.assign(label_ids.size(), 0);

    int round_robin = 0;  // continues across classes so fold totals balance
    for (int cls = 0; cls < num_classes; ++cls) {
        auto& idx = by_class[cls];
        if (spec.mode == SplitMode::Kfold && static_cast<int>(idx.size()) < 2) {
            throw ClassTooSmallError("class " + std::to_string(cls) +
                                     " has fewer than 2 samples");
        }
        std::shuffle(idx.begin(), idx.end(), rng);
        if (spec.mode == SplitMode::Holdout) {
            const auto train_count = static_cast<size_t>(
                std::llround(spec.train_fraction * static_cast<double>(idx.size())));
            for (size_t i = 0; i < idx.size(); ++i) {
                plan.assignments[idx[i]] = i < train_count ? 0 : 1;
            }
        } else {
            for (int sample : idx) {
                plan.assignments[sample] = round_robin++ % spec.k;
            }
        }
    }
    return plan;
}

LdaModel lda_fit(const Eigen::MatrixXd& rows, const std::vector<int>& label_ids,
                 int num_classes, double ridge) {
    const Eigen::Index n = rows.rows();
    const Eigen::Index dim = rows.cols();
    if (num_classes < 2) {
        throw ClassTooSmallError("LDA needs at least 2 classes");
    }

    LdaModel model;
    model.class_means = Eigen::MatrixXd::Zero(num_classes, dim);
    Eigen::VectorXd counts = Eigen::VectorXd::Zero(num_classes);
    for (Eigen::Index i = 0; i < n; ++i) {
        model.class_means.row(label_ids[i]) += rows.row(i);
        counts[label_ids[i]] += 1.0;
    }
    for (int c = 0; c < num_classes; ++c) {
        if (counts[c] > 0.0) model.class_means.row(c) /= counts[c];
    }

    Eigen::MatrixXd pooled = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Eigen::RowVectorXd centered =
            rows.row(i) - model.class_means.row(label_ids[i]);
        pooled.noalias() += centered.transpose() * centered;
    }
    const double dof = std::max<double>(1.0, static_cast<double>(n - num_classes));
    pooled /= dof;
    pooled.diagonal().array() += ridge;

    Eigen::LLT<Eigen::MatrixXd> llt(pooled);
    if (llt.info() != Eigen::Success) {
        throw SingularCovarianceError("pooled covariance is not positive definite");
    }
    model.cov_inverse = llt.solve(Eigen::MatrixXd::Identity(dim, dim));

    model.log_priors.resize(num_classes);
    for (int c = 0; c < num_classes; ++c) {
        model.log_priors[c] =
            counts[c] > 0.0 ? std::log(counts[c] / static_cast<double>(n)) : -1e300;
    }
    return model;
}

Eigen::MatrixXd lda_scores(const LdaModel& model, const Eigen::MatrixXd& rows) {
    const Eigen::MatrixXd w = model.cov_inverse * model.class_means.transpose();
    // delta_c(x) = x' S^-1 mu_c - 0.5 mu_c' S^-1 mu_c + log pi_c
    Eigen::MatrixXd scores = rows * w;
    for (Eigen::Index c = 0; c < model.class_means.rows(); ++c) {
        const double offset =
            -0.5 * model.class_means.row(c).dot(w.col(c)) + model.log_priors[c];
        scores.col(c).array() += offset;
    }
    return scores;
}

std::vector<int> argmax_labels(const Eigen::MatrixXd& scores) {
    std::vector<int> labels(scores.rows());
    for (Eigen::Index i = 0; i < scores.rows(); ++i) {
        Eigen::Index best;
        scores.row(i).maxCoeff(&best);
        labels[i] = static_cast<int>(best);
    }
    return labels;
}

namespace {

struct NeighborVote {
    std::vector<double> votes;       // per-class neighbor counts
    std::vector<double> dist_sums;   // per-class summed neighbor distance
};

NeighborVote knn_vote(const Eigen::MatrixXd& train_rows,
                      const std::vector<int>& train_labels, int k,
                      const Eigen::RowVectorXd& query, int num_classes) {
    const Eigen::Index n = train_rows.rows();
    std::vector<std::pair<double, int>> dist(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        dist[i] = {(train_rows.row(i) - query).squaredNorm(),
                   static_cast<int>(i)};
    }
    std::partial_sort(dist.begin(), dist.begin() + k, dist.end());

    NeighborVote vote;
    vote.votes.assign(num_classes, 0.0);
    vote.dist_sums.assign(num_classes, 0.0);
    for (int i = 0; i < k; ++i) {
        const int cls = train_labels[dist[i].second];
        vote.votes[cls] += 1.0;
        vote.dist_sums[cls] += std::sqrt(dist[i].first);
    }
    return vote;
}

int num_classes_of(const std::vector<int>& labels) {
    int n = 0;
    for (int l : labels) n = std::max(n, l + 1);
    return n;
}

}  // namespace

std::vector<int> knn_predict(const Eigen::MatrixXd& train_rows,
                             const std::vector<int>& train_labels, int k,
                             const Eigen::MatrixXd& query_rows) {
    if (train_rows.rows() == 0) {
        throw EmptyTrainingSetError("knn needs at least one training row");
    }
    if (k < 1 || k > train_rows.rows()) {
        throw Error("knn k out of range");
    }
    const int num_classes = num_classes_of(train_labels);
    std::vector<int> out(query_rows.rows());
    for (Eigen::Index q = 0; q < query_rows.rows(); ++q) {
        const NeighborVote vote =
            knn_vote(train_rows, train_labels, k, query_rows.row(q), num_classes);
        // majority vote; ties by smallest mean neighbor distance, then
        // smallest label id
        int best = -1;
        for (int c = 0; c < num_classes; ++c) {
            if (vote.votes[c] == 0.0) continue;
            if (best < 0 || vote.votes[c] > vote.votes[best]) {
                best = c;
            } else if (vote.votes[c] == vote.votes[best]) {
                const double mean_c = vote.dist_sums[c] / vote.votes[c];
                const double mean_b = vote.dist_sums[best] / vote.votes[best];
                if (mean_c < mean_b) best = c;
            }
        }
        out[q] = best;
    }
    return out;
}

Eigen::MatrixXd knn_scores(const Eigen::MatrixXd& train_rows,
                           const std::vector<int>& train_labels, int k,
                           const Eigen::MatrixXd& query_rows) {
    if (train_rows.rows() == 0) {
        throw EmptyTrainingSetError("knn needs at least one training row");
    }
    const int num_classes = num_classes_of(train_labels);
    Eigen::MatrixXd scores(query_rows.rows(), num_classes);
    for (Eigen::Index q = 0; q < query_rows.rows(); ++q) {
        const NeighborVote vote =
            knn_vote(train_rows, train_labels, k, query_rows.row(q), num_classes);
        for (int c = 0; c < num_classes; ++c) {
            scores(q, c) = vote.votes[c] / static_cast<double>(k);
        }
    }
    return scores;
}

double binary_auc(const std::vector<double>& scores,
                  const std::vector<int>& positives) {
    if (scores.size() != positives.size()) {
        throw LengthMismatchError("scores and labels differ in length");
    }
    const size_t n = scores.size();
    size_t n_pos = 0;
    for (int p : positives) n_pos += p != 0;
    const size_t n_neg = n - n_pos;
    if (n_pos == 0 || n_neg == 0) return -1.0;

    // Mann-Whitney form with average ranks for ties; equals the
    // trapezoidal area under the ROC curve.
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return scores[a] < scores[b]; });

    double rank_sum_pos = 0.0;
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        while (j < n && scores[order[j]] == scores[order[i]]) ++j;
        const double avg_rank = 0.5 * static_cast<double>(i + j + 1);  // 1-based
        for (size_t t = i; t < j; ++t) {
            if (positives[order[t]]) rank_sum_pos += avg_rank;
        }
        i = j;
    }
    const double np = static_cast<double>(n_pos);
    const double nn = static_cast<double>(n_neg);
    return (rank_sum_pos - np * (np + 1.0) / 2.0) / (np * nn);
}

EvalReport evaluate(const std::vector<int>& predictions,
                    const Eigen::MatrixXd& scores,
                    const std::vector<int>& truth, int num_classes) {
    if (predictions.size() != truth.size() ||
        static_cast<size_t>(scores.rows()) != truth.size()) {
        throw LengthMismatchError("predictions, scores, truth must align");
    }
    EvalReport report;
    report.confusion = Eigen::MatrixXi::Zero(num_classes, num_classes);
    size_t correct = 0;
    for (size_t i = 0; i < truth.size(); ++i) {
        report.confusion(truth[i], predictions[i]) += 1;
        correct += predictions[i] == truth[i];
    }
    report.accuracy = static_cast<double>(correct) / static_cast<double>(truth.size());

    // Macro one-vs-rest AUC; classes absent from truth are excluded.
    double auc_sum = 0.0;
    int auc_classes = 0;
    std::vector<double> col(truth.size());
    std::vector<int> pos(truth.size());
    for (int c = 0; c < num_classes; ++c) {
        for (size_t i = 0; i < truth.size(); ++i) {
            col[i] = scores(static_cast<Eigen::Index>(i), c);
            pos[i] = truth[i] == c;
        }
        const double auc = binary_auc(col, pos);
        if (auc >= 0.0) {
            auc_sum += auc;
            ++auc_classes;
        }
    }
    report.auc = auc_classes > 0 ? auc_sum / auc_classes : 0.0;
    return report;
}

EvalReport evaluate_split(const Eigen::MatrixXd& features,
                          const std::vector<int>& label_ids, int num_classes,
                          const std::vector<int>& train_idx,
                          const std::vector<int>& test_idx,
                          const ClassifierConfig& clf) {
    const auto gather = [&](const std::vector<int>& idx) {
        Eigen::MatrixXd rows(idx.size(), features.cols());
        std::vector<int> labels(idx.size());
        for (size_t i = 0; i < idx.size(); ++i) {
            rows.row(static_cast<Eigen::Index>(i)) = features.row(idx[i]);
            labels[i] = label_ids[idx[i]];
        }
        return std::make_pair(std::move(rows), std::move(labels));
    };
    auto [train_rows, train_labels] = gather(train_idx);
    auto [test_rows, test_labels] = gather(test_idx);

    const MinMaxScaler scaler = fit_minmax(train_rows);
    train_rows = scaler.transform(train_rows);
    test_rows = scaler.transform(test_rows);

    Eigen::MatrixXd scores;
    std::vector<int> predictions;
    if (clf.kind == ClassifierConfig::Kind::Lda) {
        const LdaModel model = lda_fit(train_rows, train_labels, num_classes);
        scores = lda_scores(model, test_rows);
        predictions = argmax_labels(scores);
        // Softmax the discriminants into class posteriors. Raw
        // discriminant magnitude ranks poorly one-vs-rest even when the
        // argmax is right, which wrecks the macro AUC; the posterior
        // keeps the argmax and ranks by class membership.
        for (Eigen::Index i = 0; i < scores.rows(); ++i) {
            const double peak = scores.row(i).maxCoeff();
            scores.row(i) = (scores.row(i).array() - peak).exp();
            scores.row(i) /= scores.row(i).sum();
        }
    } else {
        const int k = std::min<int>(clf.knn_k, static_cast<int>(train_rows.rows()));
        scores = knn_scores(train_rows, train_labels, k, test_rows);
        if (scores.cols() < num_classes) {
            scores.conservativeResize(Eigen::NoChange, num_classes);
            scores.rightCols(num_classes - scores.cols()).setZero();
        }
        predictions = knn_predict(train_rows, train_labels, k, test_rows);
    }
    return evaluate(predictions, scores, test_labels, num_classes);
}

EvalReport cross_validate(const Eigen::MatrixXd& features,
                          const std::vector<int>& label_ids, int num_classes,
                          int k, uint64_t seed, const ClassifierConfig& clf) {
    SplitSpec spec;
    spec.mode = SplitMode::Kfold;
    spec.k = k;
    const SplitPlan plan = make_splits(label_ids, num_classes, spec, seed);

    std::vector<double> fold_acc;
    std::vector<double> fold_auc;
    EvalReport merged;
    merged.confusion = Eigen::MatrixXi::Zero(num_classes, num_classes);
    for (int fold = 0; fold < k; ++fold) {
        std::vector<int> train_idx, test_idx;
        for (size_t i = 0; i < plan.assignments.size(); ++i) {
            (plan.assignments[i] == fold ? test_idx : train_idx)
                .push_back(static_cast<int>(i));
        }
        const EvalReport r = evaluate_split(features, label_ids, num_classes,
                                            train_idx, test_idx, clf);
        fold_acc.push_back(r.accuracy);
        fold_auc.push_back(r.auc);
        merged.confusion += r.confusion;
    }

    const double mean =
        std::accumulate(fold_acc.begin(), fold_acc.end(), 0.0) / k;
    double var = 0.0;
    for (double a : fold_acc) var += (a - mean) * (a - mean);
    merged.accuracy = mean;
    merged.accuracy_sd = k > 1 ? std::sqrt(var / (k - 1)) : 0.0;
    merged.auc = std::accumulate(fold_auc.begin(), fold_auc.end(), 0.0) / k;
    return merged;
}

EvalReport holdout_evaluate(const Eigen::MatrixXd& features,
                            const std::vector<int>& label_ids, int num_classes,
                            double train_fraction, uint64_t seed,
                            const ClassifierConfig& clf) {
    SplitSpec spec;
    spec.mode = SplitMode::Holdout;
    spec.train_fraction = train_fraction;
    const SplitPlan plan = make_splits(label_ids, num_classes, spec, seed);
    std::vector<int> train_idx, test_idx;
    for (size_t i = 0; i < plan.assignments.size(); ++i) {
        (plan.assignments[i] == 0 ? train_idx : test_idx)
            .push_back(static_cast<int>(i));
    }
    return evaluate_split(features, label_ids, num_classes, train_idx, test_idx,
                          clf);
}

}  // namespace bitw
