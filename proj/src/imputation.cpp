#include "snn/imputation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>

#include "snn/errors.hpp"
#include "snn/rng.hpp"
#include "snn/spectral.hpp"

namespace snn {

namespace {

double median_of(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("median of an empty set");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

double mean_of(const std::vector<double>& values) {
    double sum = 0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

std::vector<double> known_values(const Vector<double>& truth, const Mask& known) {
    std::vector<double> out;
    for (Index i = 0; i < truth.size(); ++i)
        if (known(i)) out.push_back(truth(i));
    return out;
}

}  // namespace

ImputationTask damage(const Vector<double>& cochain, const DamageSpec& spec) {
    const Index n = cochain.size();
    if (n < 2) throw std::invalid_argument("damage: need at least two entries");
    if (!(spec.rate > 0.0 && spec.rate < 1.0))
        throw std::invalid_argument("damage: rate must lie in (0, 1)");

    Index missing = static_cast<Index>(std::llround(spec.rate * static_cast<double>(n)));
    missing = std::max<Index>(missing, 1);
    if (missing >= n)
        throw std::invalid_argument("damage: rate " + std::to_string(spec.rate) +
                                    " would leave no known entries");

    Rng rng(spec.seed);
    const auto picks = rng.sample_without_replacement(n, missing);

    ImputationTask task;
    task.dimension = spec.dimension;
    task.truth = cochain;
    task.known = Mask::Constant(n, true);
    for (Index i : picks) task.known(i) = false;

    const double fill = median_of(known_values(task.truth, task.known));
    task.damaged = task.truth;
    for (Index i : picks) task.damaged(i) = fill;
    return task;
}

double accuracy(const Vector<double>& imputed, const Vector<double>& truth, const Mask& known) {
    if (imputed.size() != truth.size() || imputed.size() != known.size())
        throw std::invalid_argument("accuracy: length mismatch");
    Index missing = 0, correct = 0;
    for (Index i = 0; i < truth.size(); ++i) {
        if (known(i)) continue;
        ++missing;
        if (std::abs(imputed(i) - truth(i)) <= 0.10 * std::abs(truth(i))) ++correct;
    }
    if (missing == 0) throw std::invalid_argument("accuracy: no missing entries to score");
    return 100.0 * static_cast<double>(correct) / static_cast<double>(missing);
}

Vector<double> abs_error_distribution(const Vector<double>& imputed, const Vector<double>& truth,
                                      const Mask& known) {
    if (imputed.size() != truth.size() || imputed.size() != known.size())
        throw std::invalid_argument("abs_error_distribution: length mismatch");
    std::vector<double> errors;
    for (Index i = 0; i < truth.size(); ++i)
        if (!known(i)) errors.push_back(std::abs(imputed(i) - truth(i)));
    if (errors.empty())
        throw std::invalid_argument("abs_error_distribution: no missing entries");
    return Eigen::Map<const Vector<double>>(errors.data(), static_cast<Index>(errors.size()));
}

std::vector<HistogramBin> histogram(const Vector<double>& values, double bin_width) {
    if (!(bin_width > 0)) throw std::invalid_argument("histogram: bin width must be positive");
    std::vector<HistogramBin> bins;
    for (Index i = 0; i < values.size(); ++i) {
        const double v = values(i);
        if (v < 0) throw std::invalid_argument("histogram: negative value");
        const auto b = static_cast<std::size_t>(v / bin_width);
        if (b >= bins.size()) {
            const std::size_t old = bins.size();
            bins.resize(b + 1);
            for (std::size_t k = old; k < bins.size(); ++k) {
                bins[k].low = static_cast<double>(k) * bin_width;
                bins[k].high = static_cast<double>(k + 1) * bin_width;
            }
        }
        ++bins[b].count;
    }
    return bins;
}

Vector<double> baseline_global(const ImputationTask& task, GlobalStatistic statistic) {
    const auto known = known_values(task.truth, task.known);
    if (known.empty()) throw std::invalid_argument("baseline_global: no known entries");
    const double fill =
        statistic == GlobalStatistic::mean ? mean_of(known) : median_of(known);
    Vector<double> imputed = task.truth;
    for (Index i = 0; i < imputed.size(); ++i)
        if (!task.known(i)) imputed(i) = fill;
    return imputed;
}

Vector<double> baseline_neighbors_mean(const ImputationTask& task, const CitationComplex& cc,
                                       const Mask* known_below, const Mask* known_above,
                                       std::ostream* log) {
    const int k = task.dimension;
    if (cc.complex.count(k) != task.truth.size())
        throw std::invalid_argument("baseline_neighbors_mean: task does not match the complex");

    const bool has_below = k >= 1 && static_cast<int>(cc.cochains.size()) > k - 1;
    const bool has_above = static_cast<int>(cc.cochains.size()) > k + 1;
    const double fallback = median_of(known_values(task.truth, task.known));

    Vector<double> imputed = task.truth;
    const auto& level = cc.complex.simplices(k);
    for (Index i = 0; i < task.truth.size(); ++i) {
        if (task.known(i)) continue;
        const Simplex& sigma = level[static_cast<std::size_t>(i)];
        std::vector<double> neighbor_values;
        if (has_below) {
            for (const Simplex& face : sigma.faces()) {
                const auto pos = cc.complex.position(face);
                if (!pos) continue;
                if (known_below && !(*known_below)(*pos)) continue;
                neighbor_values.push_back(cc.cochain(k - 1)(*pos));
            }
        }
        if (has_above) {
            for (const Simplex& coface : cc.complex.cofaces(sigma)) {
                const auto pos = cc.complex.position(coface);
                if (known_above && !(*known_above)(*pos)) continue;
                neighbor_values.push_back(cc.cochain(k + 1)(*pos));
            }
        }
        if (neighbor_values.empty()) {
            if (log)
                *log << "note: simplex " << sigma.to_string()
                     << " has no usable neighbors; imputing the global median\n";
            imputed(i) = fallback;
        } else {
            imputed(i) = mean_of(neighbor_values);
        }
    }
    return imputed;
}

std::vector<RateSummary> aggregate(const MetricsReport& report) {
    std::map<std::pair<std::string, double>, std::vector<double>> groups;
    for (const auto& row : report.rows) groups[{row.method, row.rate}].push_back(row.accuracy);

    std::vector<RateSummary> out;
    for (const auto& [key, values] : groups) {
        RateSummary s;
        s.method = key.first;
        s.rate = key.second;
        s.samples = static_cast<int>(values.size());
        s.mean_accuracy = mean_of(values);
        if (values.size() > 1) {
            double ss = 0;
            for (double v : values) ss += (v - s.mean_accuracy) * (v - s.mean_accuracy);
            s.std_accuracy = std::sqrt(ss / static_cast<double>(values.size() - 1));
        }
        out.push_back(std::move(s));
    }
    return out;
}

namespace {

MetricsRow score(const std::string& method, const ExperimentConfig& config, double rate,
                 int sample, const Vector<double>& imputed, const ImputationTask& task) {
    MetricsRow row;
    row.method = method;
    row.dimension = config.dimension;
    row.rate = rate;
    row.sample = sample;
    row.accuracy = accuracy(imputed, task.truth, task.known);
    row.mean_abs_error = abs_error_distribution(imputed, task.truth, task.known).mean();
    return row;
}

// Shared cell loop; eval_cc == train_cc is plain in-domain imputation.
MetricsReport run_cells(const CitationComplex& train_cc, const CitationComplex& eval_cc,
                        const ExperimentConfig& config, const CellSink& sink,
                        std::ostream* log) {
    const bool transfer = &train_cc != &eval_cc;
    const auto& truth_eval = eval_cc.cochain(config.dimension);
    const auto& truth_train = train_cc.cochain(config.dimension);
    const auto lap_eval = hodge_laplacian<double>(eval_cc.complex, config.dimension);
    const auto lap_train = transfer
                               ? hodge_laplacian<double>(train_cc.complex, config.dimension)
                               : lap_eval;

    MetricsReport report;
    for (std::size_t rate_index = 0; rate_index < config.rates.size(); ++rate_index) {
        const double rate = config.rates[rate_index];
        for (int sample = 0; sample < config.samples; ++sample) {
            // Stage streams per cell: 0 damages, 1 initializes the model.
            const std::uint64_t damage_seed =
                derive_seed(config.master_seed, {rate_index, static_cast<std::uint64_t>(sample), 0});
            const std::uint64_t train_seed =
                derive_seed(config.master_seed, {rate_index, static_cast<std::uint64_t>(sample), 1});

            DamageSpec spec{config.dimension, rate, damage_seed};
            ImputationTask task_eval = damage(truth_eval, spec);

            CellArtifacts cell;
            cell.rate_index = static_cast<int>(rate_index);
            cell.sample = sample;
            cell.rate = rate;

            TrainResult<double> trained;
            if (!config.baselines_only) {
                ImputationTask task_train =
                    transfer ? damage(truth_train, spec) : task_eval;
                TrainConfig tc = config.train;
                tc.seed = train_seed;
                trained = train(lap_train.matrix, task_train.damaged, task_train.damaged,
                                task_train.known, tc, config.dimension);
                cell.snn_imputed = predict(trained, lap_eval.matrix, task_eval.damaged);
                cell.trained = &trained;
                report.rows.push_back(
                    score("snn", config, rate, sample, cell.snn_imputed, task_eval));
            }
            report.rows.push_back(score("global_mean", config, rate, sample,
                                        baseline_global(task_eval, GlobalStatistic::mean),
                                        task_eval));
            report.rows.push_back(score("global_median", config, rate, sample,
                                        baseline_global(task_eval, GlobalStatistic::median),
                                        task_eval));
            report.rows.push_back(
                score("neighbors_mean", config, rate, sample,
                      baseline_neighbors_mean(task_eval, eval_cc, nullptr, nullptr, log),
                      task_eval));

            cell.task = std::move(task_eval);
            if (sink) sink(cell);
        }
    }
    return report;
}

}  // namespace

MetricsReport run_experiment(const CitationComplex& cc, const ExperimentConfig& config,
                             const CellSink& sink, std::ostream* log) {
    return run_cells(cc, cc, config, sink, log);
}

MetricsReport transfer_experiment(const CitationComplex& train_cc, const CitationComplex& eval_cc,
                                  const ExperimentConfig& config, const CellSink& sink,
                                  std::ostream* log) {
    return run_cells(train_cc, eval_cc, config, sink, log);
}

}  // namespace snn
