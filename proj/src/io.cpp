#include "snn/io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

#include "snn/errors.hpp"

namespace snn {

std::string format_full(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

namespace {

double parse_double(const std::string& token, const std::string& context) {
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(token.c_str(), &end);
    if (token.empty() || errno != 0 || end != token.c_str() + token.size())
        throw data_error(context + ": bad number '" + token + "'");
    return v;
}

long long parse_int(const std::string& token, const std::string& context) {
    char* end = nullptr;
    errno = 0;
    const long long v = std::strtoll(token.c_str(), &end, 10);
    if (token.empty() || errno != 0 || end != token.c_str() + token.size())
        throw data_error(context + ": bad integer '" + token + "'");
    return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string token;
    std::istringstream stream(line);
    while (std::getline(stream, token, sep)) out.push_back(token);
    return out;
}

}  // namespace

void write_complex(std::ostream& out, const SimplicialComplex& complex) {
    // A simplex is maximal iff it is not a face of any higher simplex.
    for (int p = complex.top_dimension(); p >= 0; --p) {
        std::set<Simplex> faces_above;
        for (const Simplex& tau : complex.simplices(p + 1))
            for (const Simplex& f : tau.faces()) faces_above.insert(f);
        for (const Simplex& sigma : complex.simplices(p)) {
            if (faces_above.count(sigma)) continue;
            for (std::size_t i = 0; i < sigma.size(); ++i)
                out << (i ? " " : "") << sigma[i];
            out << '\n';
        }
    }
}

SimplicialComplex read_complex(std::istream& in) {
    SimplicialComplex complex;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream stream(line);
        std::vector<VertexId> verts;
        std::string token;
        while (stream >> token)
            verts.push_back(static_cast<VertexId>(
                parse_int(token, "complex line " + std::to_string(line_no))));
        if (verts.empty()) continue;
        try {
            complex.insert_closure(Simplex(std::move(verts)));
        } catch (const std::invalid_argument& e) {
            throw data_error("complex line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return complex;
}

void write_cochain(std::ostream& out, const SimplicialComplex& complex, int dimension,
                   const Vector<double>& values) {
    const auto& level = complex.simplices(dimension);
    if (static_cast<Index>(level.size()) != values.size())
        throw std::invalid_argument("write_cochain: value count does not match |K_" +
                                    std::to_string(dimension) + "|");
    for (std::size_t i = 0; i < level.size(); ++i)
        out << level[i].to_string() << '\t' << format_full(values(static_cast<Index>(i)))
            << '\n';
}

Vector<double> read_cochain(std::istream& in, const SimplicialComplex& complex, int dimension) {
    Vector<double> values = Vector<double>::Zero(complex.count(dimension));
    Mask seen = Mask::Constant(complex.count(dimension), false);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        const std::string context = "cochain line " + std::to_string(line_no);
        const auto tab = line.find('\t');
        if (tab == std::string::npos) throw data_error(context + ": missing tab separator");
        std::vector<VertexId> verts;
        for (const auto& token : split(line.substr(0, tab), ','))
            verts.push_back(static_cast<VertexId>(parse_int(token, context)));
        Simplex sigma(std::move(verts));
        if (sigma.dimension() != dimension)
            throw data_error(context + ": simplex " + sigma.to_string() +
                             " has the wrong dimension");
        const auto pos = complex.position(sigma);
        if (!pos)
            throw data_error(context + ": simplex " + sigma.to_string() +
                             " is not in the complex");
        values(*pos) = parse_double(line.substr(tab + 1), context);
        seen(*pos) = true;
    }
    if (!seen.all()) throw data_error("cochain: missing values for some simplices");
    return values;
}

void write_sparse_operator(std::ostream& out, const SparseMatrix<double>& m) {
    SparseMatrix<double> compressed = m;
    compressed.makeCompressed();
    // Collect and sort row-major for a stable on-disk order.
    std::vector<Eigen::Triplet<double>> entries;
    entries.reserve(static_cast<std::size_t>(compressed.nonZeros()));
    for (Index k = 0; k < compressed.outerSize(); ++k)
        for (SparseMatrix<double>::InnerIterator it(compressed, k); it; ++it)
            entries.emplace_back(it.row(), it.col(), it.value());
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        return a.row() != b.row() ? a.row() < b.row() : a.col() < b.col();
    });
    out << m.rows() << ' ' << m.cols() << ' ' << entries.size() << '\n';
    for (const auto& e : entries)
        out << e.row() << ' ' << e.col() << ' ' << format_full(e.value()) << '\n';
}

SparseMatrix<double> read_sparse_operator(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw data_error("sparse operator: missing header");
    std::istringstream hs(header);
    Index rows = 0, cols = 0;
    std::size_t nnz = 0;
    if (!(hs >> rows >> cols >> nnz)) throw data_error("sparse operator: bad header");
    std::vector<Eigen::Triplet<double>> entries;
    entries.reserve(nnz);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        Index r = 0, c = 0;
        std::string value;
        if (!(ls >> r >> c >> value)) throw data_error("sparse operator: bad entry '" + line + "'");
        entries.emplace_back(r, c, parse_double(value, "sparse operator"));
    }
    if (entries.size() != nnz)
        throw data_error("sparse operator: header promises " + std::to_string(nnz) +
                         " entries, found " + std::to_string(entries.size()));
    SparseMatrix<double> m(rows, cols);
    m.setFromTriplets(entries.begin(), entries.end());
    m.makeCompressed();
    return m;
}

void write_model(std::ostream& out, const SnnModel<double>& model) {
    out << "snn v1\n";
    for (const auto& layer : model.layers) {
        out << "layer " << layer.in_channels() << ' ' << layer.out_channels() << ' '
            << layer.degree << ' ' << format_full(layer.slope) << '\n';
        for (Index o = 0; o < layer.out_channels(); ++o)
            for (Index c = 0; c < layer.in_channels(); ++c)
                for (int i = 0; i <= layer.degree; ++i)
                    out << format_full(layer.weight(o, c, i)) << '\n';
        for (Index o = 0; o < layer.out_channels(); ++o)
            out << format_full(layer.bias(o)) << '\n';
    }
}

SnnModel<double> read_model(std::istream& in, int dimension) {
    std::string line;
    if (!std::getline(in, line) || line != "snn v1")
        throw data_error("model: expected header 'snn v1'");

    SnnModel<double> model;
    model.dimension = dimension;
    const auto next_line = [&](const std::string& what) {
        std::string l;
        if (!std::getline(in, l)) throw data_error("model: truncated file, expected " + what);
        return l;
    };
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        Index in_ch = 0, out_ch = 0;
        int degree = 0;
        std::string slope;
        if (!(ls >> tag >> in_ch >> out_ch >> degree >> slope) || tag != "layer")
            throw data_error("model: bad layer header '" + line + "'");
        auto layer = ConvLayer<double>::zeros(in_ch, out_ch, degree, Nonlinearity::leaky_relu,
                                              parse_double(slope, "model slope"));
        for (Index o = 0; o < out_ch; ++o)
            for (Index c = 0; c < in_ch; ++c)
                for (int i = 0; i <= degree; ++i)
                    layer.weight(o, c, i) = parse_double(next_line("weight"), "model weight");
        for (Index o = 0; o < out_ch; ++o)
            layer.bias(o) = parse_double(next_line("bias"), "model bias");
        model.layers.push_back(std::move(layer));
    }
    if (model.layers.empty()) throw data_error("model: no layers");
    model.layers.back().nonlinearity = Nonlinearity::identity;
    model.validate();
    return model;
}

void write_metrics_csv(std::ostream& out, const MetricsReport& report) {
    out << "method,dimension,rate,sample,accuracy,mean_abs_error\n";
    for (const auto& row : report.rows)
        out << row.method << ',' << row.dimension << ',' << format_full(row.rate) << ','
            << row.sample << ',' << format_full(row.accuracy) << ','
            << format_full(row.mean_abs_error) << '\n';
}

MetricsReport read_metrics_csv(std::istream& in, const std::string& name) {
    std::string line;
    if (!std::getline(in, line)) throw data_error(name + ": empty metrics file");
    const auto header = split(line, ',');
    const std::vector<std::string> expected = {"method",   "dimension", "rate",
                                               "sample",   "accuracy",  "mean_abs_error"};
    for (const auto& column : expected)
        if (std::find(header.begin(), header.end(), column) == header.end())
            throw data_error(name + ": missing column '" + column + "'");
    std::vector<std::size_t> where;
    for (const auto& column : expected)
        where.push_back(static_cast<std::size_t>(
            std::find(header.begin(), header.end(), column) - header.begin()));

    MetricsReport report;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        if (fields.size() < header.size())
            throw data_error(name + " line " + std::to_string(line_no) + ": too few fields");
        const std::string context = name + " line " + std::to_string(line_no);
        MetricsRow row;
        row.method = fields[where[0]];
        row.dimension = static_cast<int>(parse_int(fields[where[1]], context));
        row.rate = parse_double(fields[where[2]], context);
        row.sample = static_cast<int>(parse_int(fields[where[3]], context));
        row.accuracy = parse_double(fields[where[4]], context);
        row.mean_abs_error = parse_double(fields[where[5]], context);
        report.rows.push_back(std::move(row));
    }
    return report;
}

void write_corpus_tsv(std::ostream& out, const Corpus& corpus) {
    for (const auto& paper : corpus.papers) {
        out << paper.id << '\t';
        for (std::size_t i = 0; i < paper.authors.size(); ++i)
            out << (i ? ";" : "") << paper.authors[i];
        out << '\t' << paper.citations << '\n';
    }
}

void write_histogram_csv(std::ostream& out, const std::vector<HistogramBin>& bins) {
    out << "bin_low,bin_high,count\n";
    for (const auto& bin : bins)
        out << format_full(bin.low) << ',' << format_full(bin.high) << ',' << bin.count << '\n';
}

void write_loss_history_csv(std::ostream& out, const std::vector<double>& losses) {
    out << "iteration,loss\n";
    for (std::size_t i = 0; i < losses.size(); ++i)
        out << i << ',' << format_full(losses[i]) << '\n';
}

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char b : bytes) {
        hash ^= b;
        hash *= 0x100000001b3ull;
    }
    return hash;
}

std::uint64_t fnv1a_file(const std::filesystem::path& path) { return fnv1a(read_file(path)); }

std::string to_hex(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(value));
    return buf;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw data_error("cannot open " + tmp.string() + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw data_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw data_error("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw data_error("read failed for " + path.string());
    return buffer.str();
}

}  // namespace snn
