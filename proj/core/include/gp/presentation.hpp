#ifndef GP_PRESENTATION_HPP_
#define GP_PRESENTATION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gp/isofunctions.hpp"

namespace gp {

using VertexId = int;
using Letter = std::uint32_t;
// A positive word over the union of the vertex alphabets.
using LetterWord = std::vector<Letter>;

// Largest accepted vertex identifier; adjacency is stored densely.
inline constexpr VertexId kMaxVertexId = 4095;

class Graph {
 public:
  // Throws LoopEdge, DuplicateEdge or UnknownVertex.
  Graph(std::vector<VertexId> vertices,
        std::vector<std::pair<VertexId, VertexId>> const& edges);

  // Ascending.
  [[nodiscard]] std::vector<VertexId> const& vertices() const noexcept {
    return _vertices;
  }
  // Each edge as (smaller, larger), ascending.
  [[nodiscard]] std::vector<std::pair<VertexId, VertexId>> const& edges()
      const noexcept {
    return _edges;
  }
  [[nodiscard]] bool contains(VertexId i) const noexcept;
  [[nodiscard]] bool adjacent(VertexId i, VertexId j) const noexcept;

 private:
  std::vector<VertexId> _vertices;
  std::vector<std::pair<VertexId, VertexId>> _edges;
  std::size_t _span = 0;
  std::vector<bool> _adjacency;
  std::vector<bool> _present;
};

// Multiplication table of a finite group on {0, ..., m-1}, identity 0.
class FiniteTable {
 public:
  // Throws BadTable unless row/column 0 are the identity, every row and
  // column is a permutation, and (for m <= 32) the product is associative.
  FiniteTable(std::size_t order, std::vector<std::size_t> entries);

  [[nodiscard]] std::size_t order() const noexcept { return _order; }
  [[nodiscard]] std::size_t product(std::size_t x, std::size_t y) const {
    return _entries[x * _order + y];
  }
  [[nodiscard]] std::size_t inverse(std::size_t x) const { return _inverse[x]; }
  [[nodiscard]] std::vector<std::size_t> const& entries() const noexcept {
    return _entries;
  }

 private:
  std::size_t _order;
  std::vector<std::size_t> _entries;
  std::vector<std::size_t> _inverse;
};

enum class BackendKind { FiniteTable, FreeGroup, FreeAbelian };

// The parsed but unvalidated input document. Letters are still names here.
struct RawBackend {
  BackendKind kind = BackendKind::FiniteTable;
  std::size_t order = 0;
  std::vector<std::size_t> entries;
  std::vector<std::pair<std::string, std::size_t>> map;
};

struct RawGroup {
  VertexId vertex = 0;
  std::vector<std::string> gens;
  std::vector<std::pair<std::string, std::string>> bars;
  // Each relator is a list of tokens; a token may concatenate several letters.
  std::vector<std::vector<std::string>> relators;
  std::optional<FunctionClass> iso;
  std::optional<RawBackend> backend;
};

struct RawPresentation {
  std::vector<VertexId> vertices;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<RawGroup> groups;
};

struct VertexPresentation {
  VertexId vertex;
  // Declaration order.
  std::vector<Letter> alphabet;
  // Declared relators followed by any auto-completed y bar(y).
  std::vector<LetterWord> relators;
  FunctionClass iso;
  BackendKind backend;
  std::optional<FiniteTable> table;
  // For FiniteTable backends: table element of each alphabet entry.
  std::vector<std::size_t> gen_map;
};

/// A validated graph-product presentation.
///
/// Letters are numbered globally: vertices ascending, then declaration
/// order within a vertex. The combined relator list is every vertex relator
/// list (vertices ascending) followed by one commutator a b bar(a) bar(b) per
/// edge i < j, a in A_i and b in A_j, in declaration order; certificate
/// relator indices refer to this list.
class GraphProductPresentation {
 public:
  [[nodiscard]] Graph const& graph() const noexcept { return _graph; }
  [[nodiscard]] std::vector<VertexPresentation> const& groups() const noexcept {
    return _groups;
  }
  [[nodiscard]] VertexPresentation const& group(VertexId i) const;
  [[nodiscard]] FunctionClass const& f() const noexcept { return _f; }

  [[nodiscard]] std::size_t letter_count() const noexcept { return _names.size(); }
  [[nodiscard]] std::string const& letter_name(Letter a) const { return _names.at(a); }
  [[nodiscard]] std::optional<Letter> find_letter(std::string_view name) const;
  [[nodiscard]] VertexId vertex_of(Letter a) const { return _vertex_of.at(a); }
  [[nodiscard]] Letter bar(Letter a) const { return _bar.at(a); }
  // Position of a within its vertex alphabet.
  [[nodiscard]] std::size_t local_index(Letter a) const { return _local.at(a); }

  [[nodiscard]] bool adjacent(VertexId i, VertexId j) const noexcept {
    return _graph.adjacent(i, j);
  }

  [[nodiscard]] std::vector<LetterWord> const& combined_relators() const noexcept {
    return _combined;
  }
  [[nodiscard]] std::size_t relator_offset(VertexId i) const;
  // Index of the commutator relator for letters of two adjacent vertices,
  // vertex_of(a) < vertex_of(b). Throws IndexOutOfRange otherwise.
  [[nodiscard]] std::size_t commutator_index(Letter a, Letter b) const;

  // Whitespace-separated tokens; each token is a letter name or a
  // concatenation of letter names. Throws BadLetter.
  [[nodiscard]] LetterWord parse_letters(std::string_view text) const;
  [[nodiscard]] LetterWord split_token(std::string_view token) const;

  // Letter names joined with `sep`.
  [[nodiscard]] std::string render(LetterWord const& w,
                                   std::string_view sep = "") const;

 private:
  friend GraphProductPresentation validate_presentation(RawPresentation const&);

  explicit GraphProductPresentation(Graph graph, FunctionClass f)
      : _graph(std::move(graph)), _f(std::move(f)) {}

  Graph _graph;
  FunctionClass _f;
  std::vector<VertexPresentation> _groups;
  std::vector<std::size_t> _group_index;  // by vertex id
  std::vector<std::string> _names;
  std::unordered_map<std::string, Letter> _by_name;
  std::vector<VertexId> _vertex_of;
  std::vector<Letter> _bar;
  std::vector<std::size_t> _local;
  std::vector<LetterWord> _combined;
  std::vector<std::size_t> _offsets;  // by group index
  std::size_t _commutator_offset = 0;
  std::vector<std::size_t> _edge_offset;  // by edge index
};

// Errors: LoopEdge, DuplicateEdge, UnknownVertex, MissingGroup,
// AlphabetOverlap, BadBar, BadLetter, ForeignLetterInRelator, BadTable,
// MissingIsoClass.
GraphProductPresentation validate_presentation(RawPresentation const& raw);

// { j : {i, j} is an edge }, ascending. Throws UnknownVertex.
std::vector<VertexId> star(GraphProductPresentation const& p, VertexId i);

std::vector<LetterWord> const& combined_relators(GraphProductPresentation const& p);

}  // namespace gp

#endif  // GP_PRESENTATION_HPP_
