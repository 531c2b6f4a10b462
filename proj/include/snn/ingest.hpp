/**
 * Paper-author corpus ingestion: parsing, citation/author filtering,
 * random-walk sampling of papers, and the one-mode simplicial projection
 * that turns a set of papers into a coauthorship complex with citation
 * cochains.
 */
#ifndef SNN_INGEST_HPP
#define SNN_INGEST_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "snn/complex.hpp"
#include "snn/linalg.hpp"

namespace snn {

/// Original author identifier as it appears in the corpus. Vertex ids of a
/// projected complex are dense remappings of these.
using AuthorId = std::int64_t;

struct PaperRecord {
    std::string id;
    std::vector<AuthorId> authors;  // sorted, deduplicated, non-empty
    long long citations = 0;        // number of times the paper is cited

    friend bool operator==(const PaperRecord&, const PaperRecord&) = default;
};

struct Corpus {
    std::vector<PaperRecord> papers;

    bool empty() const noexcept { return papers.empty(); }
    std::size_t size() const noexcept { return papers.size(); }
};

enum class CorpusFormat {
    s2orc,  // newline-delimited JSON: id, authors[].ids[], inCitations[]
    tsv     // paper_id <tab> semicolon-joined author ids <tab> citation count
};

struct ParseStats {
    std::size_t lines = 0;              // non-blank input lines seen
    std::size_t parsed = 0;             // papers successfully read
    std::size_t malformed = 0;          // skipped: unparseable records
    std::size_t no_authors = 0;         // skipped: no usable author id
    std::size_t deduplicated = 0;       // lines whose author list had duplicates
};

/// Reads one paper per line; malformed lines are counted and skipped, with a
/// warning on `warn` when provided. Throws data_error if the stream itself
/// is unreadable.
Corpus parse_corpus(std::istream& in, CorpusFormat format, ParseStats* stats = nullptr,
                    std::ostream* warn = nullptr);

/// Keeps papers with at least min_citations citations and at most
/// max_authors authors. Idempotent.
Corpus filter_corpus(const Corpus& corpus, long long min_citations = 5,
                     std::size_t max_authors = 10);

/// Random walk on the graph whose vertices are papers and whose edges join
/// papers sharing at least one author: uniform start, then walk_length
/// uniform neighbor steps (staying put when a paper has no neighbor).
/// Returns the distinct visited papers as sorted corpus indices, at most
/// walk_length + 1 of them. Deterministic for a fixed seed.
std::vector<std::size_t> sample_papers(const Corpus& corpus, int walk_length, std::uint64_t seed,
                                       std::ostream* log = nullptr);

/// A complex together with one citation cochain per dimension.
struct CitationComplex {
    SimplicialComplex complex;
    std::vector<Vector<double>> cochains;   // index = dimension
    std::vector<AuthorId> vertex_labels;    // dense vertex id -> original author id

    const Vector<double>& cochain(int p) const;
};

/// One-mode simplicial projection of the selected papers: each author set
/// becomes a simplex (with downward closure) and the cochain value on a
/// simplex is the summed citation count of the selected papers whose author
/// set contains it. Author ids are densely remapped in ascending order.
CitationComplex project_to_complex(const Corpus& corpus,
                                   const std::vector<std::size_t>& selection);

/// Projection of the whole corpus.
CitationComplex project_to_complex(const Corpus& corpus);

/// Per-dimension simplex counts, |K_0| .. |K_top|.
std::vector<Index> complex_stats(const CitationComplex& cc);

}  // namespace snn

#endif
