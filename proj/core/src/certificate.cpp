#include "gp/certificate.hpp"

#include <sstream>
#include <utility>

namespace gp {

std::vector<CertificateItem> move_certificate(OracleSet const& oracles,
                                              SyllableWord const& w, Move const& m) {
  check_applicable(oracles, w, m);
  auto const& p = oracles.presentation();
  std::vector<CertificateItem> items;
  switch (m.kind) {
    case MoveKind::Merge:
      break;
    case MoveKind::JumpMerge: {
      // cur = A Q v T with A = beta(P[u]).
      LetterWord cur = beta(w);
      std::size_t const a =
          norm(std::span<Syllable const>(w).first(m.p + 1));
      std::size_t const q =
          norm(std::span<Syllable const>(w).subspan(m.p + 1, m.q - m.p - 1));
      std::size_t const v = w[m.q].length();
      for (std::size_t k = 0; k < v; ++k) {
        // v_k sits just right of Q; walk it left across all of Q.
        for (std::size_t pos = a + k + q; pos > a + k; --pos) {
          Letter const x = cur[pos - 1];
          Letter const y = cur[pos];
          // x y = [x, y] y x, and [x, y] is the relator for the pair in
          // ascending vertex order or its inverse.
          LetterWord const prefix(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(pos - 1));
          if (p.vertex_of(x) < p.vertex_of(y)) {
            items.push_back({positive(prefix), p.commutator_index(x, y), 1});
          } else {
            items.push_back({positive(prefix), p.commutator_index(y, x), -1});
          }
          std::swap(cur[pos - 1], cur[pos]);
        }
      }
      break;
    }
    case MoveKind::Delete: {
      auto const& syllable = w[m.p];
      auto const vc = oracles[syllable.vertex()].area_certificate(syllable.content());
      FreeWord const prefix = positive(beta(std::span<Syllable const>(w).first(m.p)));
      std::size_t const offset = p.relator_offset(syllable.vertex());
      for (auto const& item : vc.items) {
        FreeWord conj = prefix;
        append_reduced(conj, item.conjugator);
        items.push_back({std::move(conj), offset + item.relator, item.sign});
      }
      break;
    }
  }
  return items;
}

DehnCertificate sequence_certificate(OracleSet const& oracles,
                                     ReductionSequence const& s) {
  if (!s.complete()) {
    throw Error(Errc::NotNull, "sequence does not end at the empty word");
  }
  // beta(W_k) = C_k beta(W_{k+1}) and every item's conjugator is already the
  // absolute prefix in W_k, so the certificates simply concatenate.
  DehnCertificate cert;
  cert.target = beta(s.start);
  for (auto const& st : s.steps) {
    auto items = move_certificate(oracles, st.word, st.move);
    cert.items.insert(cert.items.end(), std::make_move_iterator(items.begin()),
                      std::make_move_iterator(items.end()));
  }
  return cert;
}

std::optional<DehnCertificate> certify(OracleSet const& oracles, LetterWord const& w) {
  auto seq = reduce(oracles, alpha(oracles.presentation(), w));
  if (!seq) {
    return std::nullopt;
  }
  return sequence_certificate(oracles, *seq);
}

bool verify_certificate(GraphProductPresentation const& p, DehnCertificate const& c) {
  auto const& relators = p.combined_relators();
  FreeWord product;
  for (auto const& item : c.items) {
    if (item.relator >= relators.size()) {
      throw Error(Errc::IndexOutOfRange,
                  "relator index " + std::to_string(item.relator) + " of " +
                      std::to_string(relators.size()));
    }
    if (item.sign != 1 && item.sign != -1) {
      throw Error(Errc::IndexOutOfRange, "sign must be +1 or -1");
    }
    FreeWord rel = positive(relators[item.relator]);
    if (item.sign < 0) {
      rel = inverse(rel);
    }
    append_reduced(product, item.conjugator);
    append_reduced(product, rel);
    append_reduced(product, inverse(item.conjugator));
  }
  return bar_normal_form(p, product) == bar_normal_form(p, positive(c.target));
}

std::string write_certificate(GraphProductPresentation const& p,
                              DehnCertificate const& c) {
  std::string out = "target ";
  out += c.target.empty() ? "1" : p.render(c.target, " ");
  out += '\n';
  for (auto const& item : c.items) {
    out += "conj " + render_free(p, item.conjugator) + " rel " +
           std::to_string(item.relator) + " sign " + (item.sign > 0 ? "+" : "-") +
           '\n';
  }
  return out;
}

DehnCertificate read_certificate(GraphProductPresentation const& p,
                                 std::string_view text) {
  DehnCertificate c;
  std::istringstream is{std::string(text)};
  std::string line;
  bool have_target = false;
  std::size_t lineno = 0;
  auto fail = [&](std::string const& why) {
    throw Error(Errc::Parse, "certificate line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) {
      tokens.push_back(t);
    }
    if (tokens.empty()) {
      continue;
    }
    if (tokens.front() == "target") {
      if (have_target) {
        fail("second target line");
      }
      have_target = true;
      if (!(tokens.size() == 2 && tokens[1] == "1")) {
        for (std::size_t k = 1; k < tokens.size(); ++k) {
          auto a = p.find_letter(tokens[k]);
          if (!a) {
            fail("unknown letter '" + tokens[k] + "'");
          }
          c.target.push_back(*a);
        }
      }
    } else if (tokens.front() == "conj") {
      if (!have_target) {
        fail("item before target");
      }
      // conj <w...> rel <index> sign <+|->
      if (tokens.size() < 6 || tokens[tokens.size() - 4] != "rel" ||
          tokens[tokens.size() - 2] != "sign") {
        fail("expected 'conj <word> rel <index> sign <+|->'");
      }
      std::vector<std::string> word(tokens.begin() + 1, tokens.end() - 4);
      CertificateItem item;
      item.conjugator = parse_free(p, word);
      try {
        std::size_t used = 0;
        item.relator = std::stoul(tokens[tokens.size() - 3], &used);
        if (used != tokens[tokens.size() - 3].size()) {
          fail("bad relator index");
        }
      } catch (std::logic_error const&) {
        fail("bad relator index");
      }
      auto const& sign = tokens.back();
      if (sign == "+") {
        item.sign = 1;
      } else if (sign == "-") {
        item.sign = -1;
      } else {
        fail("sign must be + or -");
      }
      c.items.push_back(std::move(item));
    } else {
      fail("unknown directive '" + tokens.front() + "'");
    }
  }
  if (!have_target) {
    throw Error(Errc::Parse, "certificate has no target line");
  }
  return c;
}

}  // namespace gp
