#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "aacbr/io.hpp"
#include "aacbr/model.hpp"

// Evaluation harness: confusion-matrix metrics, a hamming-distance kNN
// baseline, a deterministic synthetic-casebase generator and a scaling
// benchmark over the number of orders.

namespace aacbr {

struct EvaluationReport {
    std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
    double accuracy = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::string positive_class;
    // Degenerate denominators: the metric is reported as 0 and flagged.
    bool precision_defined = true;
    bool recall_defined = true;
    bool f1_defined = true;
};

// Throws std::invalid_argument when all four counts are zero.
EvaluationReport metrics_from_confusion(std::size_t tp, std::size_t fp, std::size_t fn,
                                        std::size_t tn, const std::string& positive_class);

using Predictor = std::function<Outcome(const Characterisation&)>;

// Runs the predictor over the labelled cases and tallies the confusion
// matrix. With jobs > 1 the predictions run concurrently; the tally is
// independent of scheduling.
EvaluationReport evaluate(const Predictor& predictor, const std::vector<Case>& test,
                          const std::string& positive_class, std::size_t jobs = 1);

std::string format_report_table(const EvaluationReport& report);
std::string format_report_kv(const EvaluationReport& report);

// k-nearest-neighbour baseline over the casebase (default argument
// excluded). Characterisations vectorise as one-hot feature columns (the
// training vocabulary per component) plus one-hot stage and integer slots;
// distance is hamming. Ties at the k-th slot admit the lower case id; a
// split vote falls to the closest case, then the lower id.
Outcome knn_predict(const Casebase& train, const Characterisation& query, std::size_t k = 3);

struct SyntheticSpec {
    std::size_t n_cases = 60;
    std::size_t n_holdout = 50;
    int max_stage = 3;
    bool with_stages = true;
    double noise_rate = 0.0;
    std::uint64_t seed = 1;
};

struct SyntheticData {
    CasebaseDocument document;
    std::vector<Case> holdout;  // labelled by the clean planted rule
    std::vector<std::pair<std::string, std::string>> clashes;  // noise-induced
};

// Two ten-feature tiers (activity-style and questionnaire-style vocabularies)
// plus an optional stage component. The planted rule is monotone: the
// non-default outcome fires exactly when the high tier intersects a hidden
// signal subset. Noise flips training labels; holdout labels stay clean.
// Same seed, same bytes.
SyntheticData generate_synthetic(const SyntheticSpec& spec);

struct BenchRow {
    std::size_t orders = 0;
    double median_millis = 0.0;
    std::size_t edges = 0;
};

// Replicates the base casebase's feature tiers out to each requested order
// count (features renamed per replica), then times framework construction
// for a fixed new case, single-threaded, reporting the median over
// `repeats` runs.
std::vector<BenchRow> bench_scaling(const CasebaseDocument& base,
                                    const std::vector<std::size_t>& order_counts,
                                    std::size_t repeats);

// The tier-replicated document used by bench_scaling, exposed for tests.
CasebaseDocument replicate_orders(const CasebaseDocument& base, std::size_t order_count);

}  // namespace aacbr
