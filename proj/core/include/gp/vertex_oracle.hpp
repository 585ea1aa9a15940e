#ifndef GP_VERTEX_ORACLE_HPP_
#define GP_VERTEX_ORACLE_HPP_

#include <cstddef>
#include <vector>

#include "gp/free_group.hpp"
#include "gp/presentation.hpp"

namespace gp {

struct AreaSearchCaps {
  // Words in the search may grow to length_factor * |u|.
  std::size_t length_factor = 3;
  std::size_t max_states = 1'000'000;
};

struct VertexCertificateItem {
  FreeWord conjugator;
  // Index into the vertex's own relator list.
  std::size_t relator = 0;
  int sign = 1;

  friend bool operator==(VertexCertificateItem const&,
                         VertexCertificateItem const&) = default;
};

// The product of conjugator * relator^sign * conjugator^-1 over the items,
// freely reduced, is the certified word.
struct VertexCertificate {
  std::vector<VertexCertificateItem> items;
};

// Decides the word problem of one vertex group and finds area certificates.
// Holds a reference to the presentation, which must outlive it.
class VertexOracle {
 public:
  VertexOracle(GraphProductPresentation const& p, VertexId vertex,
               AreaSearchCaps caps = {});

  [[nodiscard]] VertexId vertex() const noexcept { return _vertex; }
  [[nodiscard]] VertexPresentation const& group() const noexcept { return *_group; }

  // Reverse of u with bar applied letterwise.
  [[nodiscard]] LetterWord bar_word(LetterWord const& u) const;
  [[nodiscard]] bool is_identity(LetterWord const& u) const;
  [[nodiscard]] bool are_equal(LetterWord const& u, LetterWord const& v) const;

  // Minimal-count certificate by breadth-first search over freely reduced
  // words; one step rewrites l' -> r' for a factorisation l' r'^-1 of a
  // cyclic permutation of some relator or its inverse. Throws NotNull,
  // AreaCapExceeded, and OracleFailure when the count exceeds the declared
  // isoperimetric class.
  [[nodiscard]] VertexCertificate area_certificate(LetterWord const& u) const;

 private:
  void check_letters(LetterWord const& u) const;

  GraphProductPresentation const* _p;
  VertexId _vertex;
  VertexPresentation const* _group;
  AreaSearchCaps _caps;
};

// One oracle per vertex. Validates on construction that every relator is
// trivial according to its vertex's backend (throws BadRelator).
class OracleSet {
 public:
  explicit OracleSet(GraphProductPresentation const& p, AreaSearchCaps caps = {});

  [[nodiscard]] GraphProductPresentation const& presentation() const noexcept {
    return *_p;
  }
  [[nodiscard]] VertexOracle const& operator[](VertexId i) const;

 private:
  GraphProductPresentation const* _p;
  std::vector<VertexOracle> _oracles;
};

}  // namespace gp

#endif  // GP_VERTEX_ORACLE_HPP_
