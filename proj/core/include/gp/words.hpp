#ifndef GP_WORDS_HPP_
#define GP_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gp/presentation.hpp"

namespace gp {

// A syllable [u]: a nonempty word u over the alphabet of one vertex.
class Syllable {
 public:
  // Throws BadLetter if content is empty.
  Syllable(VertexId vertex, LetterWord content);

  [[nodiscard]] VertexId vertex() const noexcept { return _vertex; }
  [[nodiscard]] LetterWord const& content() const noexcept { return _content; }
  [[nodiscard]] std::size_t length() const noexcept { return _content.size(); }

  friend auto operator<=>(Syllable const&, Syllable const&) = default;
  friend bool operator==(Syllable const&, Syllable const&) = default;

 private:
  VertexId _vertex;
  LetterWord _content;
};

// An element of X*; the empty vector is the empty word.
using SyllableWord = std::vector<Syllable>;

// Throws ForeignLetter if some syllable uses a letter of another vertex.
void validate_word(GraphProductPresentation const& p, SyllableWord const& w);

// Each letter a becomes the one-letter syllable [a].
SyllableWord alpha(GraphProductPresentation const& p, LetterWord const& w);

// Concatenation of syllable contents.
LetterWord beta(std::span<Syllable const> w);

// Total content length.
std::size_t norm(std::span<Syllable const> w);

// True iff every syllable's vertex is adjacent to i (vacuous on the empty
// word).
bool in_star(GraphProductPresentation const& p, std::span<Syllable const> w,
             VertexId i);

SyllableWord concat(SyllableWord a, SyllableWord const& b);

// "[aa][b]"; the empty word renders as "[]".
std::string to_string(GraphProductPresentation const& p, std::span<Syllable const> w);

// Inverse of to_string. Throws BadLetter on malformed text or mixed-vertex
// syllables.
SyllableWord parse_syllable_word(GraphProductPresentation const& p,
                                 std::string_view text);

struct SyllableWordHash {
  std::size_t operator()(SyllableWord const& w) const noexcept;
};

}  // namespace gp

#endif  // GP_WORDS_HPP_
