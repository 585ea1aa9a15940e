#ifndef GP_REDUCTION_HPP_
#define GP_REDUCTION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gp/checked.hpp"
#include "gp/vertex_oracle.hpp"
#include "gp/words.hpp"

namespace gp {

enum class MoveKind {
  Merge,      // P[u][v]Q -> P[uv]Q
  JumpMerge,  // P[u]Q[v]T -> P[uv]QT, Q nonempty and in the star of i
  Delete,     // P[u]Q -> PQ, u trivial in its vertex group
};

std::string_view to_string(MoveKind kind);

struct Move {
  MoveKind kind = MoveKind::Merge;
  // Merge acts on syllables p, p+1; JumpMerge on p < q; Delete on p.
  std::size_t p = 0;
  std::size_t q = 0;

  static Move merge(std::size_t p) { return {MoveKind::Merge, p, p + 1}; }
  static Move jump_merge(std::size_t p, std::size_t q) {
    return {MoveKind::JumpMerge, p, q};
  }
  static Move erase(std::size_t p) { return {MoveKind::Delete, p, p}; }

  friend bool operator==(Move const&, Move const&) = default;
};

// "Merge(1)", "JumpMerge(0,2)", "Delete(0)"
std::string to_string(Move const& m);

// Throws InapplicableMove naming the violated condition.
void check_applicable(OracleSet const& oracles, SyllableWord const& w, Move const& m);

SyllableWord apply_move(OracleSet const& oracles, SyllableWord const& w, Move const& m);

// 0 for Merge, ||Q|| * |v| for JumpMerge, f(|u|) for Delete.
Count move_weight(OracleSet const& oracles, SyllableWord const& w, Move const& m,
                  FunctionClass const& f);

// Every applicable move: kind order Merge < JumpMerge < Delete, then p, then q.
std::vector<Move> enumerate_moves(OracleSet const& oracles, SyllableWord const& w);

// W = P [u_1] Q_1 [u_2] ... Q_{r-1} [u_r] P' with u_k i-words, each Q_k in
// the star of i, and u_1 ... u_r trivial in G_i.
struct LeadingBlock {
  VertexId vertex = 0;
  // Positions of [u_1], ..., [u_r] in W.
  std::vector<std::size_t> chain;
  SyllableWord prefix;
  std::vector<SyllableWord> separators;
  SyllableWord suffix;

  [[nodiscard]] std::size_t length() const noexcept { return chain.size(); }
};

// Scans vertices ascending, chain starts left to right, chain lengths
// shortest first.
std::optional<LeadingBlock> find_leading_block(OracleSet const& oracles,
                                               SyllableWord const& w);

struct ReductionStep {
  SyllableWord word;  // the word the move is applied to
  Move move;
  Count weight = 0;
};

struct ReductionSequence {
  SyllableWord start;
  std::vector<ReductionStep> steps;
  SyllableWord end;

  [[nodiscard]] bool complete() const noexcept { return end.empty(); }
};

/// Canonical reduction of W towards the empty word.
///
/// Repeatedly takes the leading block, merges its chain left to right
/// (Merge across an empty span, JumpMerge otherwise), deletes the merged
/// trivial syllable and continues on P Q_1 ... Q_{r-1} P'. Returns nullopt
/// as soon as a nonempty word has no leading block; since every move
/// preserves the image in G, that certifies W != 1.
std::optional<ReductionSequence> reduce(OracleSet const& oracles, SyllableWord const& w,
                                        FunctionClass const& f);

inline std::optional<ReductionSequence> reduce(OracleSet const& oracles,
                                               SyllableWord const& w) {
  return reduce(oracles, w, oracles.presentation().f());
}

// Recomputes every move weight under f and sums them. Throws
// InapplicableMove if a step does not replay.
Count weight_of_sequence(OracleSet const& oracles, ReductionSequence const& s,
                         FunctionClass const& f);

// Decides pi(w) = 1 in the graph product.
bool is_identity_in_product(OracleSet const& oracles, LetterWord const& w);

// One line per step: "<word> --<move> w=<weight>--> <next word>".
std::string render_trace(GraphProductPresentation const& p, ReductionSequence const& s);

}  // namespace gp

#endif  // GP_REDUCTION_HPP_
