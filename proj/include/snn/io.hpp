/**
 * Text serialization for every artifact the tools exchange.
 *
 * Formats:
 *  - complex: one maximal simplex per line, space-separated vertex ids,
 *    '#' starts a comment line;
 *  - cochain: per line, sorted vertex ids joined by commas, a tab, then the
 *    value in full-precision decimal;
 *  - sparse operator (diagnostics): header "rows cols nnz", then sorted
 *    "row col value" triples;
 *  - model: header "snn v1", then per layer "layer in out degree slope",
 *    weights one per line in [out][in][power] order, then the biases. The
 *    format does not carry the nonlinearity kind: on read, hidden layers
 *    are leaky ReLU and the final layer is the identity, which is the only
 *    shape a valid model can have;
 *  - metrics: CSV with columns method,dimension,rate,sample,accuracy,
 *    mean_abs_error.
 *
 * All floating-point output uses "%.17g" so that round-trips are exact and
 * repeated runs are byte-identical.
 */
#ifndef SNN_IO_HPP
#define SNN_IO_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "snn/complex.hpp"
#include "snn/imputation.hpp"
#include "snn/ingest.hpp"
#include "snn/linalg.hpp"
#include "snn/model.hpp"

namespace snn {

/// Shortest exact decimal: "%.17g".
std::string format_full(double value);

void write_complex(std::ostream& out, const SimplicialComplex& complex);
SimplicialComplex read_complex(std::istream& in);

void write_cochain(std::ostream& out, const SimplicialComplex& complex, int dimension,
                   const Vector<double>& values);
Vector<double> read_cochain(std::istream& in, const SimplicialComplex& complex, int dimension);

void write_sparse_operator(std::ostream& out, const SparseMatrix<double>& m);
SparseMatrix<double> read_sparse_operator(std::istream& in);

void write_model(std::ostream& out, const SnnModel<double>& model);
SnnModel<double> read_model(std::istream& in, int dimension = 0);

void write_metrics_csv(std::ostream& out, const MetricsReport& report);
/// `name` is used in error messages only.
MetricsReport read_metrics_csv(std::istream& in, const std::string& name = "metrics");

void write_corpus_tsv(std::ostream& out, const Corpus& corpus);

void write_histogram_csv(std::ostream& out, const std::vector<HistogramBin>& bins);
void write_loss_history_csv(std::ostream& out, const std::vector<double>& losses);

/// FNV-1a 64-bit content digest, for run manifests.
std::uint64_t fnv1a(std::string_view bytes);
std::uint64_t fnv1a_file(const std::filesystem::path& path);
std::string to_hex(std::uint64_t value);

/// Write-to-temporary-then-rename, so readers never observe partial files.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

std::string read_file(const std::filesystem::path& path);

}  // namespace snn

#endif
