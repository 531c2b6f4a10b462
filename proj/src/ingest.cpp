#include "snn/ingest.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "snn/errors.hpp"
#include "snn/rng.hpp"

namespace snn {

namespace {

bool parse_author_id(const std::string& text, AuthorId& out) {
    if (text.empty()) return false;
    char* end = nullptr;
    errno = 0;
    const long long v = std::strtoll(text.c_str(), &end, 10);
    if (errno != 0 || end != text.c_str() + text.size() || v < 0) return false;
    out = v;
    return true;
}

// Sorts and deduplicates; reports whether duplicates were present.
bool canonicalize_authors(std::vector<AuthorId>& authors) {
    std::sort(authors.begin(), authors.end());
    const auto last = std::unique(authors.begin(), authors.end());
    const bool had_duplicates = last != authors.end();
    authors.erase(last, authors.end());
    return had_duplicates;
}

void warn_line(std::ostream* warn, std::size_t line_no, const std::string& message) {
    if (warn) *warn << "warning: line " << line_no << ": " << message << '\n';
}

bool parse_tsv_line(const std::string& line, PaperRecord& rec) {
    const auto tab1 = line.find('\t');
    if (tab1 == std::string::npos) return false;
    const auto tab2 = line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos || line.find('\t', tab2 + 1) != std::string::npos) return false;

    rec.id = line.substr(0, tab1);
    if (rec.id.empty()) return false;

    rec.authors.clear();
    const std::string authors = line.substr(tab1 + 1, tab2 - tab1 - 1);
    std::size_t pos = 0;
    while (pos <= authors.size() && !authors.empty()) {
        const auto semi = authors.find(';', pos);
        const std::string token =
            authors.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        if (!token.empty()) {
            AuthorId id;
            if (!parse_author_id(token, id)) return false;
            rec.authors.push_back(id);
        }
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }

    const std::string count = line.substr(tab2 + 1);
    char* end = nullptr;
    errno = 0;
    rec.citations = std::strtoll(count.c_str(), &end, 10);
    if (count.empty() || errno != 0 || end != count.c_str() + count.size() || rec.citations < 0)
        return false;
    return true;
}

bool parse_s2orc_line(const std::string& line, PaperRecord& rec) {
    nlohmann::json j = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object()) return false;

    const auto id_it = j.find("id");
    if (id_it == j.end() || !id_it->is_string()) return false;
    rec.id = id_it->get<std::string>();

    const auto cites_it = j.find("inCitations");
    if (cites_it == j.end() || !cites_it->is_array()) return false;
    rec.citations = static_cast<long long>(cites_it->size());

    rec.authors.clear();
    const auto authors_it = j.find("authors");
    if (authors_it == j.end() || !authors_it->is_array()) return false;
    for (const auto& author : *authors_it) {
        if (!author.is_object()) continue;
        const auto ids_it = author.find("ids");
        if (ids_it == author.end() || !ids_it->is_array() || ids_it->empty()) continue;
        // One author object = one author; the first id identifies them.
        const auto& first = (*ids_it)[0];
        AuthorId id;
        if (first.is_string() && parse_author_id(first.get<std::string>(), id))
            rec.authors.push_back(id);
        else if (first.is_number_unsigned())
            rec.authors.push_back(static_cast<AuthorId>(first.get<std::uint64_t>()));
    }
    return true;
}

}  // namespace

Corpus parse_corpus(std::istream& in, CorpusFormat format, ParseStats* stats,
                    std::ostream* warn) {
    if (in.fail()) throw data_error("parse_corpus: unreadable input stream");

    Corpus corpus;
    ParseStats local;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        ++local.lines;

        PaperRecord rec;
        const bool ok = format == CorpusFormat::tsv ? parse_tsv_line(line, rec)
                                                    : parse_s2orc_line(line, rec);
        if (!ok) {
            ++local.malformed;
            warn_line(warn, line_no, "malformed record skipped");
            continue;
        }
        if (canonicalize_authors(rec.authors)) {
            ++local.deduplicated;
            warn_line(warn, line_no, "duplicate author ids collapsed for paper " + rec.id);
        }
        if (rec.authors.empty()) {
            ++local.no_authors;
            warn_line(warn, line_no, "paper " + rec.id + " has no usable authors, skipped");
            continue;
        }
        ++local.parsed;
        corpus.papers.push_back(std::move(rec));
    }
    if (in.bad()) throw data_error("parse_corpus: read failure");
    if (stats) *stats = local;
    return corpus;
}

Corpus filter_corpus(const Corpus& corpus, long long min_citations, std::size_t max_authors) {
    Corpus out;
    out.papers.reserve(corpus.papers.size());
    for (const auto& paper : corpus.papers)
        if (paper.citations >= min_citations && paper.authors.size() <= max_authors)
            out.papers.push_back(paper);
    return out;
}

namespace {

// author -> indices of papers listing them, in corpus order
std::map<AuthorId, std::vector<std::size_t>> author_index(const Corpus& corpus) {
    std::map<AuthorId, std::vector<std::size_t>> index;
    for (std::size_t i = 0; i < corpus.papers.size(); ++i)
        for (AuthorId a : corpus.papers[i].authors) index[a].push_back(i);
    return index;
}

}  // namespace

std::vector<std::size_t> sample_papers(const Corpus& corpus, int walk_length, std::uint64_t seed,
                                       std::ostream* log) {
    if (corpus.empty()) throw data_error("sample_papers: empty corpus");
    if (walk_length < 0) throw std::invalid_argument("sample_papers: negative walk length");

    const auto index = author_index(corpus);
    std::vector<std::vector<std::size_t>> neighbor_cache(corpus.size());
    std::vector<bool> cached(corpus.size(), false);
    const auto neighbors = [&](std::size_t paper) -> const std::vector<std::size_t>& {
        if (!cached[paper]) {
            std::set<std::size_t> distinct;
            for (AuthorId a : corpus.papers[paper].authors) {
                const auto& list = index.at(a);
                distinct.insert(list.begin(), list.end());
            }
            distinct.erase(paper);
            neighbor_cache[paper].assign(distinct.begin(), distinct.end());
            cached[paper] = true;
        }
        return neighbor_cache[paper];
    };

    Rng rng(seed);
    std::size_t current = static_cast<std::size_t>(rng.uniform_below(corpus.size()));
    std::set<std::size_t> visited{current};
    bool warned_isolated = false;
    for (int step = 0; step < walk_length; ++step) {
        const auto& nbrs = neighbors(current);
        if (nbrs.empty()) {
            if (log && !warned_isolated) {
                *log << "note: paper " << corpus.papers[current].id
                     << " has no coauthor neighbors; walk stays put\n";
                warned_isolated = true;
            }
            continue;
        }
        current = nbrs[static_cast<std::size_t>(rng.uniform_below(nbrs.size()))];
        visited.insert(current);
    }
    return {visited.begin(), visited.end()};
}

const Vector<double>& CitationComplex::cochain(int p) const {
    if (p < 0 || p >= static_cast<int>(cochains.size()))
        throw std::invalid_argument("CitationComplex: no cochain in dimension " +
                                    std::to_string(p));
    return cochains[static_cast<std::size_t>(p)];
}

CitationComplex project_to_complex(const Corpus& corpus,
                                   const std::vector<std::size_t>& selection) {
    if (selection.empty()) throw data_error("project_to_complex: empty paper selection");

    // Dense vertex ids: ascending original author ids.
    std::set<AuthorId> author_set;
    for (std::size_t i : selection) {
        if (i >= corpus.size())
            throw std::invalid_argument("project_to_complex: selection index out of range");
        const auto& authors = corpus.papers[i].authors;
        if (authors.size() > 20)
            throw data_error("project_to_complex: paper " + corpus.papers[i].id + " has " +
                             std::to_string(authors.size()) +
                             " authors; filter the corpus before projecting");
        author_set.insert(authors.begin(), authors.end());
    }
    CitationComplex cc;
    cc.vertex_labels.assign(author_set.begin(), author_set.end());
    std::map<AuthorId, VertexId> to_dense;
    for (std::size_t v = 0; v < cc.vertex_labels.size(); ++v)
        to_dense[cc.vertex_labels[v]] = static_cast<VertexId>(v);

    std::vector<std::vector<VertexId>> verts_by_paper;
    verts_by_paper.reserve(selection.size());
    for (std::size_t i : selection) {
        std::vector<VertexId> verts;
        verts.reserve(corpus.papers[i].authors.size());
        for (AuthorId a : corpus.papers[i].authors) verts.push_back(to_dense.at(a));
        cc.complex.insert_closure(Simplex(verts));
        verts_by_paper.push_back(std::move(verts));
    }

    cc.cochains.resize(static_cast<std::size_t>(cc.complex.top_dimension()) + 1);
    for (int p = 0; p <= cc.complex.top_dimension(); ++p)
        cc.cochains[static_cast<std::size_t>(p)] = Vector<double>::Zero(cc.complex.count(p));

    // Cochain value on sigma: total citations of selected papers whose author
    // set contains sigma. Walk each paper's non-empty subsets (author sets
    // are already sorted, so subsets come out sorted too).
    for (std::size_t k = 0; k < selection.size(); ++k) {
        const auto& verts = verts_by_paper[k];
        const double citations = static_cast<double>(corpus.papers[selection[k]].citations);
        const std::size_t n = verts.size();
        for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << n); ++bits) {
            std::vector<VertexId> subset;
            for (std::size_t b = 0; b < n; ++b)
                if (bits & (std::uint64_t(1) << b)) subset.push_back(verts[b]);
            const Simplex sigma(std::move(subset));
            const auto pos = cc.complex.position(sigma);
            cc.cochains[static_cast<std::size_t>(sigma.dimension())](*pos) += citations;
        }
    }
    return cc;
}

CitationComplex project_to_complex(const Corpus& corpus) {
    std::vector<std::size_t> all(corpus.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return project_to_complex(corpus, all);
}

std::vector<Index> complex_stats(const CitationComplex& cc) {
    std::vector<Index> out;
    for (Index c : cc.complex.counts()) out.push_back(c);
    return out;
}

}  // namespace snn
