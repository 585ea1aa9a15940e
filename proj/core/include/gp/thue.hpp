#ifndef GP_THUE_HPP_
#define GP_THUE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gp/vertex_oracle.hpp"
#include "gp/words.hpp"

namespace gp {

// The five pair schemas on X*:
//   1 ([u][v], [uv])            reducing
//   2 ([u]P[v], [uv]P)          reducing, P nonempty in the star of i
//   3 ([u], e)                  reducing, u trivial
//   4 ([u], [v])                equal-length, u = v in G_i
//   5 ([u][v], [v][u])          equal-length, vertices adjacent
enum class SchemaKind { Reducing, Equal };

SchemaKind schema_kind(int schema);

struct ThuePair {
  int schema = 0;
  SyllableWord lhs;
  SyllableWord rhs;
};

/// Unbounded one-step relations of the Thue system.
///
/// Reducing steps (schemas 1-3) only ever produce finitely many words;
/// equal-length steps are exposed as a predicate since schema 4 targets range
/// over an infinite set.
class ThueSystem {
 public:
  explicit ThueSystem(OracleSet const& oracles) : _oracles(&oracles) {}

  [[nodiscard]] OracleSet const& oracles() const noexcept { return *_oracles; }
  [[nodiscard]] GraphProductPresentation const& presentation() const noexcept {
    return _oracles->presentation();
  }

  [[nodiscard]] std::vector<SyllableWord> reducing_successors(SyllableWord const& w) const;
  [[nodiscard]] bool is_reducing_step(SyllableWord const& from, SyllableWord const& to) const;
  // Includes the trivial schema-4 instance [u] ~ [u], so from == to is a
  // step whenever from is nonempty.
  [[nodiscard]] bool is_equal_step(SyllableWord const& from, SyllableWord const& to) const;

 private:
  OracleSet const* _oracles;
};

/// All syllable words with norm <= max_norm whose syllables have content
/// length <= max_syllable, listed by norm and then lexicographically.
class BoundedUniverse {
 public:
  BoundedUniverse(OracleSet const& oracles, std::size_t max_norm,
                  std::size_t max_syllable);

  [[nodiscard]] ThueSystem const& system() const noexcept { return _system; }
  [[nodiscard]] GraphProductPresentation const& presentation() const noexcept {
    return _system.presentation();
  }
  [[nodiscard]] std::size_t max_norm() const noexcept { return _max_norm; }
  [[nodiscard]] std::size_t max_syllable() const noexcept { return _max_syllable; }

  [[nodiscard]] std::vector<SyllableWord> const& words() const noexcept { return _words; }
  [[nodiscard]] std::optional<std::size_t> index_of(SyllableWord const& w) const;
  [[nodiscard]] bool contains(SyllableWord const& w) const { return index_of(w).has_value(); }

  // Every single syllable of the universe, vertex by vertex.
  [[nodiscard]] std::vector<Syllable> const& syllables() const noexcept {
    return _syllables;
  }

 private:
  ThueSystem _system;
  std::size_t _max_norm;
  std::size_t _max_syllable;
  std::vector<Syllable> _syllables;
  std::vector<SyllableWord> _words;
  std::unordered_map<SyllableWord, std::size_t, SyllableWordHash> _index;
};

struct Successors {
  std::vector<SyllableWord> reducing;
  std::vector<SyllableWord> equal;
};

// One-step results of every schema at every position, kept only when in the
// universe. W itself is never listed.
Successors step_successors(BoundedUniverse const& u, SyllableWord const& w);

// All concrete schema pairs with both sides in the universe (schema 4
// without the trivial pairs ([u], [u])).
std::vector<ThuePair> instantiate_pairs(BoundedUniverse const& u);

/// Precomputed one-step graph over a universe.
///
/// Equivalence is connectivity through both relations in both directions,
/// restricted to the universe; it under-approximates the true congruence
/// near the norm boundary, so checks only look at words of norm <= L/2.
class ConfluenceAnalysis {
 public:
  explicit ConfluenceAnalysis(BoundedUniverse const& u);

  [[nodiscard]] BoundedUniverse const& universe() const noexcept { return *_u; }

  [[nodiscard]] std::size_t class_of(std::size_t word) const { return _equiv.at(word); }
  [[nodiscard]] std::size_t equal_component(std::size_t word) const {
    return _equal.at(word);
  }
  [[nodiscard]] std::vector<std::vector<SyllableWord>> equivalence_classes() const;

  // x ->* x1, y ->* y1 with x1 ~* y1, all inside the universe.
  [[nodiscard]] bool almost_confluent(std::size_t x, std::size_t y) const;

  [[nodiscard]] std::vector<std::size_t> const& reducing_edges(std::size_t word) const {
    return _reducing.at(word);
  }
  [[nodiscard]] std::vector<std::size_t> const& equal_edges(std::size_t word) const {
    return _equal_edges.at(word);
  }

 private:
  // Sorted equal-components reachable by ->*.
  std::vector<std::size_t> const& reach(std::size_t word) const;

  BoundedUniverse const* _u;
  std::vector<std::vector<std::size_t>> _reducing;
  std::vector<std::vector<std::size_t>> _equal_edges;
  std::vector<std::size_t> _equiv;
  std::vector<std::size_t> _equal;
  mutable std::vector<std::optional<std::vector<std::size_t>>> _reach;
};

std::vector<std::vector<SyllableWord>> equivalence_classes(BoundedUniverse const& u);

bool almost_confluent_pair(BoundedUniverse const& u, SyllableWord const& x,
                           SyllableWord const& y);

struct CheckReport {
  std::string id;
  std::size_t instances = 0;
  std::vector<std::pair<SyllableWord, SyllableWord>> counterexamples;

  [[nodiscard]] std::size_t failures() const noexcept { return counterexamples.size(); }
};

// Every pair of equivalent words of norm <= budget must be almost
// confluent. Throws IndexOutOfRange if 2 * budget > max_norm.
CheckReport check_almost_confluence(BoundedUniverse const& u, std::size_t budget);

// For every w of norm <= budget, every x with w -> x and y with w -> y or
// w ~ y must be almost confluent.
CheckReport check_huet_criterion(BoundedUniverse const& u, std::size_t budget);

// The six critical-pair resolutions, checked step by step on every
// instantiation whose starting word lies in the universe. Intermediate words
// may leave the universe; each stated step is checked as a schema
// application. Throws EmptyInstantiation if some case has no instance.
std::vector<CheckReport> verify_critical_cases(BoundedUniverse const& u);

// "case=<id> instances=<n> failures=<m>", then one "counterexample" line per
// failure.
std::string render_report(GraphProductPresentation const& p, CheckReport const& r);

}  // namespace gp

#endif  // GP_THUE_HPP_
