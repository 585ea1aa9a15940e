#include "gp/words.hpp"

#include <algorithm>
#include <functional>

namespace gp {

Syllable::Syllable(VertexId vertex, LetterWord content)
    : _vertex(vertex), _content(std::move(content)) {
  if (_content.empty()) {
    throw Error(Errc::BadLetter, "a syllable needs nonempty content");
  }
}

void validate_word(GraphProductPresentation const& p, SyllableWord const& w) {
  for (auto const& s : w) {
    if (!p.graph().contains(s.vertex())) {
      throw Error(Errc::UnknownVertex, "syllable vertex " + std::to_string(s.vertex()));
    }
    for (auto a : s.content()) {
      if (a >= p.letter_count() || p.vertex_of(a) != s.vertex()) {
        throw Error(Errc::ForeignLetter,
                    "syllable of vertex " + std::to_string(s.vertex()) +
                        " contains a foreign letter");
      }
    }
  }
}

SyllableWord alpha(GraphProductPresentation const& p, LetterWord const& w) {
  SyllableWord out;
  out.reserve(w.size());
  for (auto a : w) {
    out.emplace_back(p.vertex_of(a), LetterWord{a});
  }
  return out;
}

LetterWord beta(std::span<Syllable const> w) {
  LetterWord out;
  out.reserve(norm(w));
  for (auto const& s : w) {
    out.insert(out.end(), s.content().begin(), s.content().end());
  }
  return out;
}

std::size_t norm(std::span<Syllable const> w) {
  std::size_t n = 0;
  for (auto const& s : w) {
    n += s.length();
  }
  return n;
}

bool in_star(GraphProductPresentation const& p, std::span<Syllable const> w,
             VertexId i) {
  return std::all_of(w.begin(), w.end(),
                     [&](Syllable const& s) { return p.adjacent(i, s.vertex()); });
}

SyllableWord concat(SyllableWord a, SyllableWord const& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string to_string(GraphProductPresentation const& p, std::span<Syllable const> w) {
  if (w.empty()) {
    return "[]";
  }
  std::string out;
  for (auto const& s : w) {
    out += '[';
    out += p.render(s.content());
    out += ']';
  }
  return out;
}

SyllableWord parse_syllable_word(GraphProductPresentation const& p,
                                 std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
      s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
      s.remove_suffix(1);
    }
    return s;
  };
  text = trim(text);
  SyllableWord out;
  if (text == "[]" || text.empty()) {
    return out;
  }
  while (!text.empty()) {
    if (text.front() != '[') {
      throw Error(Errc::BadLetter, "expected '[' in syllable word");
    }
    auto close = text.find(']');
    if (close == std::string_view::npos) {
      throw Error(Errc::BadLetter, "unterminated syllable");
    }
    LetterWord content = p.parse_letters(text.substr(1, close - 1));
    if (content.empty()) {
      throw Error(Errc::BadLetter, "empty syllable inside a nonempty word");
    }
    VertexId const v = p.vertex_of(content.front());
    for (auto a : content) {
      if (p.vertex_of(a) != v) {
        throw Error(Errc::BadLetter, "syllable mixes letters of different vertices");
      }
    }
    out.emplace_back(v, std::move(content));
    text = trim(text.substr(close + 1));
  }
  return out;
}

std::size_t SyllableWordHash::operator()(SyllableWord const& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::size_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (auto const& s : w) {
    mix(static_cast<std::size_t>(s.vertex()) + 0x100000);
    for (auto a : s.content()) {
      mix(a);
    }
  }
  return h;
}

}  // namespace gp
