/**
 * Missing-citation imputation: the damage protocol (random missing entries
 * filled with the median of the known ones), accuracy and absolute-error
 * metrics, the global and neighbor baselines, and the experiment matrix
 * including transfer between complexes.
 */
#ifndef SNN_IMPUTATION_HPP
#define SNN_IMPUTATION_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "snn/ingest.hpp"
#include "snn/linalg.hpp"
#include "snn/train.hpp"

namespace snn {

struct DamageSpec {
    int dimension = 1;
    double rate = 0.3;  // fraction of entries made missing, in (0, 1)
    std::uint64_t seed = 0;
};

struct ImputationTask {
    int dimension = 0;
    Vector<double> truth;
    Vector<double> damaged;  // equals truth where known, median of known elsewhere
    Mask known;

    Index missing_count() const noexcept { return known.size() - known.cast<Index>().sum(); }
};

/// Marks round(rate * n) entries (at least one, never all) as missing,
/// uniformly without replacement, and fills them with the median of the
/// remaining known values. Deterministic per seed.
ImputationTask damage(const Vector<double>& cochain, const DamageSpec& spec);

/// Percentage of missing entries whose imputed value differs from the truth
/// by at most 10% of the true value (boundary inclusive; a true value of 0
/// admits only an exact imputation).
double accuracy(const Vector<double>& imputed, const Vector<double>& truth, const Mask& known);

/// |imputed - truth| over the missing entries, in simplex index order.
Vector<double> abs_error_distribution(const Vector<double>& imputed, const Vector<double>& truth,
                                      const Mask& known);

struct HistogramBin {
    double low = 0, high = 0;
    std::size_t count = 0;
};

/// Fixed-width binning of an error distribution, starting at 0.
std::vector<HistogramBin> histogram(const Vector<double>& values, double bin_width = 1.0);

enum class GlobalStatistic { mean, median };

/// Every missing entry imputed as the chosen statistic of the known entries.
Vector<double> baseline_global(const ImputationTask& task, GlobalStatistic statistic);

/// Every missing k-simplex imputed as the mean of the cochain values on its
/// faces and cofaces. Neighbors in dimensions the complex does not carry, or
/// marked missing in the optional masks, are excluded; with no usable
/// neighbor the global median of the known k-entries is used (logged).
Vector<double> baseline_neighbors_mean(const ImputationTask& task, const CitationComplex& cc,
                                       const Mask* known_below = nullptr,
                                       const Mask* known_above = nullptr,
                                       std::ostream* log = nullptr);

struct MetricsRow {
    std::string method;  // "snn", "global_mean", "global_median", "neighbors_mean"
    int dimension = 0;
    double rate = 0;
    int sample = 0;
    double accuracy = 0;
    double mean_abs_error = 0;
};

struct MetricsReport {
    std::vector<MetricsRow> rows;
};

struct RateSummary {
    std::string method;
    double rate = 0;
    double mean_accuracy = 0;
    double std_accuracy = 0;  // sample standard deviation over samples
    int samples = 0;
};

/// Per-(method, rate) mean and sample standard deviation of accuracy.
std::vector<RateSummary> aggregate(const MetricsReport& report);

struct ExperimentConfig {
    int dimension = 1;
    std::vector<double> rates = {0.1, 0.2, 0.3, 0.4, 0.5};
    int samples = 5;
    TrainConfig train;
    std::uint64_t master_seed = 0;
    bool baselines_only = false;
};

/// Everything produced by one (rate, sample) cell, offered to an optional
/// sink for persistence.
struct CellArtifacts {
    int rate_index = 0;
    int sample = 0;
    double rate = 0;
    ImputationTask task;
    const TrainResult<double>* trained = nullptr;  // null when baselines_only
    Vector<double> snn_imputed;                    // empty when baselines_only
};

using CellSink = std::function<void(const CellArtifacts&)>;

/// The full matrix: for every rate and sample, damage the cochain, train an
/// SNN on the known entries, impute, and score SNN plus the three baselines.
/// Each cell draws its seeds from (master seed, rate index, sample index),
/// so cells are independent and the whole matrix is reproducible.
MetricsReport run_experiment(const CitationComplex& cc, const ExperimentConfig& config,
                             const CellSink& sink = nullptr, std::ostream* log = nullptr);

/// Trains on the damaged cochain of train_cc and applies the frozen model to
/// the damaged cochain of eval_cc; metrics are reported on eval_cc. With
/// identical complexes and seeds this reduces to run_experiment exactly.
MetricsReport transfer_experiment(const CitationComplex& train_cc, const CitationComplex& eval_cc,
                                  const ExperimentConfig& config, const CellSink& sink = nullptr,
                                  std::ostream* log = nullptr);

}  // namespace snn

#endif
