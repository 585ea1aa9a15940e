#include "gp/reduction.hpp"

#include <span>

namespace gp {

namespace {

[[noreturn]] void inapplicable(Move const& m, std::string const& why) {
  throw Error(Errc::InapplicableMove, to_string(m) + ": " + why);
}

std::span<Syllable const> span_between(SyllableWord const& w, std::size_t p,
                                       std::size_t q) {
  return std::span<Syllable const>(w).subspan(p + 1, q - p - 1);
}

}  // namespace

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::Merge: return "Merge";
    case MoveKind::JumpMerge: return "JumpMerge";
    case MoveKind::Delete: return "Delete";
  }
  return "?";
}

std::string to_string(Move const& m) {
  std::string out(to_string(m.kind));
  out += '(' + std::to_string(m.p);
  if (m.kind == MoveKind::JumpMerge) {
    out += ',' + std::to_string(m.q);
  }
  return out + ')';
}

void check_applicable(OracleSet const& oracles, SyllableWord const& w, Move const& m) {
  auto const& p = oracles.presentation();
  switch (m.kind) {
    case MoveKind::Merge:
      if (m.p + 1 >= w.size()) {
        inapplicable(m, "position out of range");
      }
      if (w[m.p].vertex() != w[m.p + 1].vertex()) {
        inapplicable(m, "vertex mismatch");
      }
      return;
    case MoveKind::JumpMerge: {
      if (m.q >= w.size() || m.p + 1 >= m.q) {
        inapplicable(m, "positions out of range or span empty");
      }
      VertexId const i = w[m.p].vertex();
      if (w[m.q].vertex() != i) {
        inapplicable(m, "vertex mismatch");
      }
      if (!in_star(p, span_between(w, m.p, m.q), i)) {
        inapplicable(m, "span not in star");
      }
      return;
    }
    case MoveKind::Delete:
      if (m.p >= w.size()) {
        inapplicable(m, "position out of range");
      }
      if (!oracles[w[m.p].vertex()].is_identity(w[m.p].content())) {
        inapplicable(m, "content not null");
      }
      return;
  }
}

SyllableWord apply_move(OracleSet const& oracles, SyllableWord const& w, Move const& m) {
  check_applicable(oracles, w, m);
  SyllableWord out;
  out.reserve(w.size());
  switch (m.kind) {
    case MoveKind::Merge:
    case MoveKind::JumpMerge: {
      LetterWord merged = w[m.p].content();
      merged.insert(merged.end(), w[m.q].content().begin(), w[m.q].content().end());
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (k == m.p) {
          out.emplace_back(w[k].vertex(), merged);
        } else if (k != m.q) {
          out.push_back(w[k]);
        }
      }
      break;
    }
    case MoveKind::Delete:
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (k != m.p) {
          out.push_back(w[k]);
        }
      }
      break;
  }
  return out;
}

Count move_weight(OracleSet const& oracles, SyllableWord const& w, Move const& m,
                  FunctionClass const& f) {
  check_applicable(oracles, w, m);
  switch (m.kind) {
    case MoveKind::Merge: return 0;
    case MoveKind::JumpMerge:
      return checked_mul(norm(span_between(w, m.p, m.q)), w[m.q].length());
    case MoveKind::Delete: return f(w[m.p].length());
  }
  return 0;
}

std::vector<Move> enumerate_moves(OracleSet const& oracles, SyllableWord const& w) {
  auto const& p = oracles.presentation();
  std::vector<Move> out;
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (w[k].vertex() == w[k + 1].vertex()) {
      out.push_back(Move::merge(k));
    }
  }
  for (std::size_t a = 0; a < w.size(); ++a) {
    VertexId const i = w[a].vertex();
    // The span stays in the star of i until it meets a syllable that is
    // neither adjacent to i nor an i-syllable; i-syllables end spans.
    for (std::size_t b = a + 1; b < w.size(); ++b) {
      if (w[b].vertex() == i) {
        if (b > a + 1) {
          out.push_back(Move::jump_merge(a, b));
        }
        // Any later i-syllable has this one inside its span.
        break;
      }
      if (!p.adjacent(i, w[b].vertex())) {
        break;
      }
    }
  }
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (oracles[w[k].vertex()].is_identity(w[k].content())) {
      out.push_back(Move::erase(k));
    }
  }
  return out;
}

std::optional<LeadingBlock> find_leading_block(OracleSet const& oracles,
                                               SyllableWord const& w) {
  auto const& p = oracles.presentation();
  for (VertexId i : p.graph().vertices()) {
    auto const& oracle = oracles[i];
    for (std::size_t start = 0; start < w.size(); ++start) {
      if (w[start].vertex() != i) {
        continue;
      }
      std::vector<std::size_t> chain{start};
      LetterWord content = w[start].content();
      while (true) {
        if (oracle.is_identity(content)) {
          LeadingBlock block;
          block.vertex = i;
          block.chain = chain;
          block.prefix.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(start));
          for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
            block.separators.emplace_back(
                w.begin() + static_cast<std::ptrdiff_t>(chain[k] + 1),
                w.begin() + static_cast<std::ptrdiff_t>(chain[k + 1]));
          }
          block.suffix.assign(w.begin() + static_cast<std::ptrdiff_t>(chain.back() + 1),
                              w.end());
          return block;
        }
        // Extend to the next i-syllable whose span is in the star of i.
        std::size_t next = chain.back() + 1;
        while (next < w.size() && w[next].vertex() != i &&
               p.adjacent(i, w[next].vertex())) {
          ++next;
        }
        if (next == w.size() || w[next].vertex() != i) {
          break;
        }
        chain.push_back(next);
        content.insert(content.end(), w[next].content().begin(),
                       w[next].content().end());
      }
    }
  }
  return std::nullopt;
}

std::optional<ReductionSequence> reduce(OracleSet const& oracles, SyllableWord const& w,
                                        FunctionClass const& f) {
  validate_word(oracles.presentation(), w);
  ReductionSequence seq;
  seq.start = w;
  SyllableWord cur = w;
  auto step = [&](Move const& m) {
    Count const weight = move_weight(oracles, cur, m, f);
    SyllableWord next = apply_move(oracles, cur, m);
    seq.steps.push_back({std::move(cur), m, weight});
    cur = std::move(next);
  };
  while (!cur.empty()) {
    auto block = find_leading_block(oracles, cur);
    if (!block) {
      return std::nullopt;
    }
    std::size_t const head = block->chain.front();
    // Each earlier merge removed one syllable left of chain[k].
    for (std::size_t k = 1; k < block->chain.size(); ++k) {
      std::size_t const q = block->chain[k] - (k - 1);
      step(q == head + 1 ? Move::merge(head) : Move::jump_merge(head, q));
    }
    step(Move::erase(head));
  }
  seq.end = cur;
  return seq;
}

Count weight_of_sequence(OracleSet const& oracles, ReductionSequence const& s,
                         FunctionClass const& f) {
  Count total = 0;
  for (auto const& st : s.steps) {
    total = checked_add(total, move_weight(oracles, st.word, st.move, f));
  }
  return total;
}

bool is_identity_in_product(OracleSet const& oracles, LetterWord const& w) {
  auto seq = reduce(oracles, alpha(oracles.presentation(), w));
  return seq.has_value() && seq->complete();
}

std::string render_trace(GraphProductPresentation const& p, ReductionSequence const& s) {
  std::string out;
  for (std::size_t k = 0; k < s.steps.size(); ++k) {
    auto const& st = s.steps[k];
    auto const& next = k + 1 < s.steps.size() ? s.steps[k + 1].word : s.end;
    out += to_string(p, st.word) + " --" + to_string(st.move) +
           " w=" + std::to_string(st.weight) + "--> " + to_string(p, next) + '\n';
  }
  return out;
}

}  // namespace gp
