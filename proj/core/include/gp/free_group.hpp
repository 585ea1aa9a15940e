#ifndef GP_FREE_GROUP_HPP_
#define GP_FREE_GROUP_HPP_

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "gp/presentation.hpp"

namespace gp {

// A letter or its formal inverse in the free group on the union of the
// vertex alphabets. Note that bar(y) is a distinct positive letter here.
struct FreeLetter {
  Letter letter = 0;
  bool inverse = false;

  [[nodiscard]] FreeLetter inverted() const noexcept { return {letter, !inverse}; }

  friend auto operator<=>(FreeLetter const&, FreeLetter const&) = default;
};

using FreeWord = std::vector<FreeLetter>;

FreeWord positive(LetterWord const& w);
FreeWord inverse(FreeWord const& w);

// Appends w to acc, cancelling x x^-1 at the seam. acc must be reduced.
void append_reduced(FreeWord& acc, FreeWord const& w);
FreeWord free_reduce(FreeWord const& w);

// Normal form in the quotient of the free group by all y bar(y): there
// bar(y) = y^-1, so an involutive letter has order 2. Two free words are
// equal modulo the y bar(y) relators iff their normal forms coincide.
FreeWord bar_normal_form(GraphProductPresentation const& p, FreeWord const& w);

// Letters separated by single spaces, y' for an inverse letter, and "1" for
// the empty word.
std::string render_free(GraphProductPresentation const& p, FreeWord const& w);
// Inverse of render_free over a token list. Throws BadLetter.
FreeWord parse_free(GraphProductPresentation const& p,
                    std::vector<std::string> const& tokens);

}  // namespace gp

#endif  // GP_FREE_GROUP_HPP_
