#include "gp/free_group.hpp"

#include <algorithm>

namespace gp {

FreeWord positive(LetterWord const& w) {
  FreeWord out;
  out.reserve(w.size());
  for (auto a : w) {
    out.push_back({a, false});
  }
  return out;
}

FreeWord inverse(FreeWord const& w) {
  FreeWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back(it->inverted());
  }
  return out;
}

void append_reduced(FreeWord& acc, FreeWord const& w) {
  for (auto x : w) {
    if (!acc.empty() && acc.back() == x.inverted()) {
      acc.pop_back();
    } else {
      acc.push_back(x);
    }
  }
}

FreeWord free_reduce(FreeWord const& w) {
  FreeWord out;
  append_reduced(out, w);
  return out;
}

FreeWord bar_normal_form(GraphProductPresentation const& p, FreeWord const& w) {
  FreeWord out;
  for (auto x : w) {
    Letter const b = p.bar(x.letter);
    bool const involutive = (b == x.letter);
    FreeLetter y;
    if (involutive) {
      // Order two: y^-1 = y.
      y = {x.letter, false};
    } else {
      // Represent the pair {y, bar(y)} by its smaller letter.
      Letter const rep = std::min(x.letter, b);
      bool const flipped = (x.letter != rep);
      y = {rep, x.inverse != flipped};
    }
    if (!out.empty() && out.back().letter == y.letter &&
        (involutive || out.back().inverse != y.inverse)) {
      out.pop_back();
    } else {
      out.push_back(y);
    }
  }
  return out;
}

std::string render_free(GraphProductPresentation const& p, FreeWord const& w) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k > 0) {
      out += ' ';
    }
    out += p.letter_name(w[k].letter);
    if (w[k].inverse) {
      out += '\'';
    }
  }
  return out;
}

FreeWord parse_free(GraphProductPresentation const& p,
                    std::vector<std::string> const& tokens) {
  FreeWord out;
  if (tokens.size() == 1 && tokens.front() == "1") {
    return out;
  }
  for (auto const& token : tokens) {
    std::string_view name = token;
    bool inv = false;
    if (!name.empty() && name.back() == '\'') {
      inv = true;
      name.remove_suffix(1);
    }
    auto a = p.find_letter(name);
    if (!a) {
      throw Error(Errc::BadLetter, "unknown letter '" + token + "' in free word");
    }
    out.push_back({*a, inv});
  }
  return out;
}

}  // namespace gp
