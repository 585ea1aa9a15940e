#include "gp/thue.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace gp {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : _parent(n) {
    std::iota(_parent.begin(), _parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (_parent[x] != x) {
      _parent[x] = _parent[_parent[x]];
      x = _parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      _parent[std::max(a, b)] = std::min(a, b);
    }
  }

 private:
  std::vector<std::size_t> _parent;
};

LetterWord cat(LetterWord a, LetterWord const& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

SyllableWord join(std::initializer_list<SyllableWord> parts) {
  SyllableWord out;
  for (auto const& p : parts) {
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

SyllableWord single(Syllable const& s) { return SyllableWord{s}; }

Syllable merged(Syllable const& a, Syllable const& b) {
  return Syllable(a.vertex(), cat(a.content(), b.content()));
}

void sort_unique(std::vector<SyllableWord>& ws) {
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
}

}  // namespace

SchemaKind schema_kind(int schema) {
  if (schema < 1 || schema > 5) {
    throw Error(Errc::IndexOutOfRange, "schema " + std::to_string(schema));
  }
  return schema <= 3 ? SchemaKind::Reducing : SchemaKind::Equal;
}

////////////////////////////////////////////////////////////////////////////
// ThueSystem
////////////////////////////////////////////////////////////////////////////

std::vector<SyllableWord> ThueSystem::reducing_successors(SyllableWord const& w) const {
  auto const& p = presentation();
  std::vector<SyllableWord> out;
  auto const at = [&](std::size_t k) { return w.begin() + static_cast<std::ptrdiff_t>(k); };
  for (std::size_t a = 0; a < w.size(); ++a) {
    VertexId const i = w[a].vertex();
    // Schemas 1 and 2: merge into the next i-syllable across a star span.
    for (std::size_t b = a + 1; b < w.size(); ++b) {
      if (w[b].vertex() == i) {
        SyllableWord next(w.begin(), at(a));
        next.push_back(merged(w[a], w[b]));
        next.insert(next.end(), at(a + 1), at(b));
        next.insert(next.end(), at(b + 1), w.end());
        out.push_back(std::move(next));
        break;
      }
      if (!p.adjacent(i, w[b].vertex())) {
        break;
      }
    }
    // Schema 3.
    if (_oracles->operator[](i).is_identity(w[a].content())) {
      SyllableWord next(w.begin(), at(a));
      next.insert(next.end(), at(a + 1), w.end());
      out.push_back(std::move(next));
    }
  }
  sort_unique(out);
  return out;
}

bool ThueSystem::is_reducing_step(SyllableWord const& from, SyllableWord const& to) const {
  auto const succ = reducing_successors(from);
  return std::binary_search(succ.begin(), succ.end(), to);
}

bool ThueSystem::is_equal_step(SyllableWord const& from, SyllableWord const& to) const {
  if (from.empty() || from.size() != to.size()) {
    return false;
  }
  std::vector<std::size_t> diff;
  for (std::size_t k = 0; k < from.size(); ++k) {
    if (!(from[k] == to[k])) {
      diff.push_back(k);
    }
  }
  if (diff.empty()) {
    return true;
  }
  if (diff.size() == 1) {
    auto const& x = from[diff[0]];
    auto const& y = to[diff[0]];
    return x.vertex() == y.vertex() &&
           (*_oracles)[x.vertex()].are_equal(x.content(), y.content());
  }
  if (diff.size() == 2 && diff[1] == diff[0] + 1) {
    auto const k = diff[0];
    return from[k] == to[k + 1] && from[k + 1] == to[k] &&
           presentation().adjacent(from[k].vertex(), from[k + 1].vertex());
  }
  return false;
}

////////////////////////////////////////////////////////////////////////////
// BoundedUniverse
////////////////////////////////////////////////////////////////////////////

BoundedUniverse::BoundedUniverse(OracleSet const& oracles, std::size_t max_norm,
                                 std::size_t max_syllable)
    : _system(oracles), _max_norm(max_norm), _max_syllable(max_syllable) {
  auto const& p = oracles.presentation();
  for (auto const& g : p.groups()) {
    // Contents of length 1..max_syllable, shortlex over the alphabet.
    std::vector<LetterWord> layer{LetterWord{}};
    for (std::size_t len = 1; len <= max_syllable; ++len) {
      std::vector<LetterWord> next;
      for (auto const& w : layer) {
        for (auto a : g.alphabet) {
          next.push_back(cat(w, {a}));
          _syllables.emplace_back(g.vertex, next.back());
        }
      }
      layer = std::move(next);
    }
  }

  SyllableWord cur;
  std::function<void(std::size_t)> grow = [&](std::size_t budget) {
    _words.push_back(cur);
    for (auto const& s : _syllables) {
      if (s.length() <= budget) {
        cur.push_back(s);
        grow(budget - s.length());
        cur.pop_back();
      }
    }
  };
  grow(max_norm);
  std::stable_sort(_words.begin(), _words.end(),
                   [](SyllableWord const& a, SyllableWord const& b) {
                     return norm(a) < norm(b);
                   });
  _index.reserve(_words.size());
  for (std::size_t k = 0; k < _words.size(); ++k) {
    _index.emplace(_words[k], k);
  }
}

std::optional<std::size_t> BoundedUniverse::index_of(SyllableWord const& w) const {
  auto it = _index.find(w);
  if (it == _index.end()) {
    return std::nullopt;
  }
  return it->second;
}

Successors step_successors(BoundedUniverse const& u, SyllableWord const& w) {
  auto const& sys = u.system();
  auto const& p = u.presentation();
  Successors out;
  for (auto& next : sys.reducing_successors(w)) {
    if (u.contains(next)) {
      out.reducing.push_back(std::move(next));
    }
  }
  for (std::size_t k = 0; k < w.size(); ++k) {
    // Schema 4.
    for (auto const& s : u.syllables()) {
      if (s.vertex() == w[k].vertex() && !(s == w[k]) &&
          sys.oracles()[s.vertex()].are_equal(s.content(), w[k].content())) {
        SyllableWord next = w;
        next[k] = s;
        if (u.contains(next)) {
          out.equal.push_back(std::move(next));
        }
      }
    }
    // Schema 5.
    if (k + 1 < w.size() && p.adjacent(w[k].vertex(), w[k + 1].vertex())) {
      SyllableWord next = w;
      std::swap(next[k], next[k + 1]);
      out.equal.push_back(std::move(next));
    }
  }
  sort_unique(out.equal);
  return out;
}

std::vector<ThuePair> instantiate_pairs(BoundedUniverse const& u) {
  auto const& p = u.presentation();
  auto const& oracles = u.system().oracles();
  std::vector<ThuePair> out;
  for (auto const& w : u.words()) {
    if (w.size() == 1) {
      auto const& s = w.front();
      if (oracles[s.vertex()].is_identity(s.content())) {
        out.push_back({3, w, {}});
      }
      for (auto const& t : u.syllables()) {
        if (t.vertex() == s.vertex() && !(t == s) &&
            oracles[s.vertex()].are_equal(s.content(), t.content())) {
          out.push_back({4, w, single(t)});
        }
      }
    } else if (w.size() == 2) {
      if (w[0].vertex() == w[1].vertex()) {
        SyllableWord rhs{merged(w[0], w[1])};
        if (u.contains(rhs)) {
          out.push_back({1, w, std::move(rhs)});
        }
      } else if (p.adjacent(w[0].vertex(), w[1].vertex())) {
        out.push_back({5, w, SyllableWord{w[1], w[0]}});
      }
    }
    if (w.size() >= 3 && w.front().vertex() == w.back().vertex()) {
      auto const mid = std::span<Syllable const>(w).subspan(1, w.size() - 2);
      if (in_star(p, mid, w.front().vertex())) {
        SyllableWord rhs{merged(w.front(), w.back())};
        rhs.insert(rhs.end(), mid.begin(), mid.end());
        if (u.contains(rhs)) {
          out.push_back({2, w, std::move(rhs)});
        }
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](ThuePair const& a, ThuePair const& b) {
    return a.schema < b.schema;
  });
  return out;
}

////////////////////////////////////////////////////////////////////////////
// ConfluenceAnalysis
////////////////////////////////////////////////////////////////////////////

ConfluenceAnalysis::ConfluenceAnalysis(BoundedUniverse const& u)
    : _u(&u),
      _reducing(u.words().size()),
      _equal_edges(u.words().size()),
      _reach(u.words().size()) {
  std::size_t const n = u.words().size();
  UnionFind all(n);
  UnionFind equal(n);
  for (std::size_t k = 0; k < n; ++k) {
    auto const succ = step_successors(u, u.words()[k]);
    for (auto const& w : succ.reducing) {
      std::size_t const j = *u.index_of(w);
      _reducing[k].push_back(j);
      all.unite(k, j);
    }
    for (auto const& w : succ.equal) {
      if (auto j = u.index_of(w)) {
        _equal_edges[k].push_back(*j);
        all.unite(k, *j);
        equal.unite(k, *j);
      }
    }
  }
  _equiv.resize(n);
  _equal.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    _equiv[k] = all.find(k);
    _equal[k] = equal.find(k);
  }
}

std::vector<std::vector<SyllableWord>> ConfluenceAnalysis::equivalence_classes() const {
  std::vector<std::vector<SyllableWord>> out;
  std::unordered_map<std::size_t, std::size_t> slot;
  for (std::size_t k = 0; k < _equiv.size(); ++k) {
    auto [it, fresh] = slot.emplace(_equiv[k], out.size());
    if (fresh) {
      out.emplace_back();
    }
    out[it->second].push_back(_u->words()[k]);
  }
  return out;
}

std::vector<std::size_t> const& ConfluenceAnalysis::reach(std::size_t word) const {
  if (!_reach[word]) {
    // The reducing graph is acyclic: every step shortens the word in X*.
    std::vector<std::size_t> comps{_equal[word]};
    for (auto next : _reducing[word]) {
      auto const& sub = reach(next);
      comps.insert(comps.end(), sub.begin(), sub.end());
    }
    std::sort(comps.begin(), comps.end());
    comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
    _reach[word] = std::move(comps);
  }
  return *_reach[word];
}

bool ConfluenceAnalysis::almost_confluent(std::size_t x, std::size_t y) const {
  auto const& a = reach(x);
  auto const& b = reach(y);
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      return true;
    }
    a[i] < b[j] ? ++i : ++j;
  }
  return false;
}

std::vector<std::vector<SyllableWord>> equivalence_classes(BoundedUniverse const& u) {
  return ConfluenceAnalysis(u).equivalence_classes();
}

bool almost_confluent_pair(BoundedUniverse const& u, SyllableWord const& x,
                           SyllableWord const& y) {
  auto const ix = u.index_of(x);
  auto const iy = u.index_of(y);
  if (!ix || !iy) {
    throw Error(Errc::IndexOutOfRange, "word outside the universe");
  }
  return ConfluenceAnalysis(u).almost_confluent(*ix, *iy);
}

namespace {

void check_budget(BoundedUniverse const& u, std::size_t budget) {
  if (2 * budget > u.max_norm()) {
    throw Error(Errc::IndexOutOfRange,
                "budget " + std::to_string(budget) + " exceeds half the norm cap " +
                    std::to_string(u.max_norm()));
  }
}

}  // namespace

CheckReport check_almost_confluence(BoundedUniverse const& u, std::size_t budget) {
  check_budget(u, budget);
  ConfluenceAnalysis const a(u);
  CheckReport report{"confluence", 0, {}};
  std::unordered_map<std::size_t, std::vector<std::size_t>> classes;
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < u.words().size(); ++k) {
    if (norm(u.words()[k]) > budget) {
      continue;
    }
    auto& members = classes[a.class_of(k)];
    if (members.empty()) {
      order.push_back(a.class_of(k));
    }
    members.push_back(k);
  }
  for (auto c : order) {
    auto const& members = classes[c];
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        ++report.instances;
        if (!a.almost_confluent(members[i], members[j])) {
          report.counterexamples.emplace_back(u.words()[members[i]],
                                              u.words()[members[j]]);
        }
      }
    }
  }
  return report;
}

CheckReport check_huet_criterion(BoundedUniverse const& u, std::size_t budget) {
  check_budget(u, budget);
  ConfluenceAnalysis const a(u);
  CheckReport report{"huet", 0, {}};
  for (std::size_t k = 0; k < u.words().size(); ++k) {
    if (norm(u.words()[k]) > budget) {
      continue;
    }
    auto const& red = a.reducing_edges(k);
    auto const& eq = a.equal_edges(k);
    auto test = [&](std::size_t x, std::size_t y) {
      ++report.instances;
      if (!a.almost_confluent(x, y)) {
        report.counterexamples.emplace_back(u.words()[x], u.words()[y]);
      }
    };
    for (std::size_t i = 0; i < red.size(); ++i) {
      for (std::size_t j = i + 1; j < red.size(); ++j) {
        test(red[i], red[j]);
      }
      for (auto y : eq) {
        test(red[i], y);
      }
    }
  }
  return report;
}

////////////////////////////////////////////////////////////////////////////
// Critical cases
////////////////////////////////////////////////////////////////////////////

namespace {

class CaseRunner {
 public:
  CaseRunner(BoundedUniverse const& u, std::string id)
      : _u(u), _sys(u.system()), _report{std::move(id), 0, {}} {}

  // Counts one instance if the start word is in the universe; returns false
  // otherwise so the caller can skip it.
  bool begin(SyllableWord const& start) {
    if (norm(start) > _u.max_norm()) {
      return false;
    }
    _start = start;
    _failed = false;
    ++_report.instances;
    return true;
  }

  void reduces(SyllableWord const& from, SyllableWord const& to) {
    record(_sys.is_reducing_step(from, to), to);
  }
  void equals(SyllableWord const& from, SyllableWord const& to) {
    record(_sys.is_equal_step(from, to), to);
  }

  CheckReport take() { return std::move(_report); }

 private:
  void record(bool ok, SyllableWord const& to) {
    if (!ok && !_failed) {
      _failed = true;
      _report.counterexamples.emplace_back(_start, to);
    }
  }

  BoundedUniverse const& _u;
  ThueSystem const& _sys;
  CheckReport _report;
  SyllableWord _start;
  bool _failed = false;
};

}  // namespace

std::vector<CheckReport> verify_critical_cases(BoundedUniverse const& u) {
  auto const& p = u.presentation();
  auto const& oracles = u.system().oracles();

  auto syllables_of = [&](VertexId i) {
    std::vector<Syllable> out;
    for (auto const& s : u.syllables()) {
      if (s.vertex() == i) {
        out.push_back(s);
      }
    }
    return out;
  };
  auto star_words = [&](VertexId i) {
    std::vector<SyllableWord> out;
    for (auto const& w : u.words()) {
      if (in_star(p, w, i)) {
        out.push_back(w);
      }
    }
    return out;
  };
  auto null = [&](Syllable const& s) {
    return oracles[s.vertex()].is_identity(s.content());
  };
  auto same = [&](Syllable const& a, Syllable const& b) {
    return oracles[a.vertex()].are_equal(a.content(), b.content());
  };

  // Star words come sorted by norm, so loops over them stop at the cap.
  std::size_t const cap = u.max_norm();

  std::vector<CheckReport> reports;

  // 1: [u]P[v]Q[w] merges either way round to [uvw]PQ.
  {
    CaseRunner run(u, "1");
    for (auto i : p.graph().vertices()) {
      auto const sy = syllables_of(i);
      auto const stars = star_words(i);
      for (auto const& a : sy) for (auto const& b : sy) for (auto const& c : sy) {
        std::size_t const abc = a.length() + b.length() + c.length();
        for (auto const& P : stars) {
          if (abc + norm(P) > cap) {
            break;
          }
          for (auto const& Q : stars) {
            if (abc + norm(P) + norm(Q) > cap) {
              break;
            }
            SyllableWord const w = join({single(a), P, single(b), Q, single(c)});
            if (!run.begin(w)) {
              continue;
            }
            auto const left = join({single(merged(a, b)), P, Q, single(c)});
            auto const right = join({single(a), P, single(merged(b, c)), Q});
            auto const meet = join({single(merged(merged(a, b), c)), P, Q});
            run.reduces(w, left);
            run.reduces(left, meet);
            run.reduces(w, right);
            run.reduces(right, meet);
          }
        }
      }
    }
    reports.push_back(run.take());
  }

  // 2: [u]P[v] with v or u trivial: merge against delete.
  {
    CaseRunner run(u, "2");
    for (auto i : p.graph().vertices()) {
      auto const sy = syllables_of(i);
      auto const stars = star_words(i);
      for (auto const& a : sy) for (auto const& b : sy) {
        for (auto const& P : stars) {
          if (a.length() + b.length() + norm(P) > cap) {
            break;
          }
          SyllableWord const w = join({single(a), P, single(b)});
          auto const uv = join({single(merged(a, b)), P});
          if (null(b) && run.begin(w)) {
            auto const dropped = join({single(a), P});
            run.reduces(w, uv);
            run.reduces(w, dropped);
            run.equals(uv, dropped);
          }
          if (null(a) && run.begin(w)) {
            auto const dropped = join({P, single(b)});
            run.reduces(w, uv);
            run.reduces(w, dropped);
            SyllableWord cur = join({single(b), P});
            run.equals(uv, cur);
            // Walk [v] rightwards through P.
            for (std::size_t k = 0; k < P.size(); ++k) {
              SyllableWord next = cur;
              std::swap(next[k], next[k + 1]);
              run.equals(cur, next);
              cur = std::move(next);
            }
            if (!(cur == dropped)) {
              run.equals(cur, dropped);
            }
          }
        }
      }
    }
    reports.push_back(run.take());
  }

  // 3: [u]P[v] merge against replacing u (or v) by an equal i-word.
  {
    CaseRunner run(u, "3");
    for (auto i : p.graph().vertices()) {
      auto const sy = syllables_of(i);
      auto const stars = star_words(i);
      for (auto const& a : sy) for (auto const& b : sy) {
        for (auto const& P : stars) {
          if (a.length() + b.length() + norm(P) > cap) {
            break;
          }
          SyllableWord const w = join({single(a), P, single(b)});
          auto const uv = join({single(merged(a, b)), P});
          for (auto const& c : sy) {
            if (same(c, a) && run.begin(w)) {
              auto const swapped = join({single(c), P, single(b)});
              auto const cv = join({single(merged(c, b)), P});
              run.reduces(w, uv);
              run.equals(w, swapped);
              run.reduces(swapped, cv);
              run.equals(uv, cv);
            }
            if (same(c, b) && run.begin(w)) {
              auto const swapped = join({single(a), P, single(c)});
              auto const uc = join({single(merged(a, c)), P});
              run.reduces(w, uv);
              run.equals(w, swapped);
              run.reduces(swapped, uc);
              run.equals(uv, uc);
            }
          }
        }
      }
    }
    reports.push_back(run.take());
  }

  // 4: [u] trivial: delete against replacing by an equal i-word.
  {
    CaseRunner run(u, "4");
    for (auto i : p.graph().vertices()) {
      auto const sy = syllables_of(i);
      for (auto const& a : sy) {
        if (!null(a)) {
          continue;
        }
        for (auto const& c : sy) {
          if (same(c, a) && run.begin(single(a))) {
            run.reduces(single(a), {});
            run.equals(single(a), single(c));
            run.reduces(single(c), {});
          }
        }
      }
    }
    reports.push_back(run.take());
  }

  // 5: [u][v], u trivial, v from an adjacent vertex: delete against swap.
  {
    CaseRunner run(u, "5");
    for (auto i : p.graph().vertices()) {
      for (auto const& a : syllables_of(i)) {
        if (!null(a)) {
          continue;
        }
        for (auto j : star(p, i)) {
          for (auto const& b : syllables_of(j)) {
            SyllableWord const w{a, b};
            if (!run.begin(w)) {
              continue;
            }
            SyllableWord const swapped{b, a};
            run.equals(w, swapped);
            run.reduces(w, single(b));
            run.reduces(swapped, single(b));
          }
        }
      }
    }
    reports.push_back(run.take());
  }

  // 6: [u]P[v] next to a syllable [w] from an adjacent vertex: merge
  // against swap, with [w] on either side.
  {
    CaseRunner run(u, "6");
    for (auto i : p.graph().vertices()) {
      auto const sy = syllables_of(i);
      auto const stars = star_words(i);
      for (auto j : star(p, i)) {
        for (auto const& c : syllables_of(j)) {
          for (auto const& a : sy) for (auto const& b : sy) {
            for (auto const& P : stars) {
              if (a.length() + b.length() + c.length() + norm(P) > cap) {
                break;
              }
              SyllableWord const right = join({single(a), P, single(b), single(c)});
              if (run.begin(right)) {
                auto const merged_w = join({single(merged(a, b)), P, single(c)});
                auto const swapped = join({single(a), P, single(c), single(b)});
                run.reduces(right, merged_w);
                run.equals(right, swapped);
                run.reduces(swapped, merged_w);
              }
              SyllableWord const left = join({single(c), single(a), P, single(b)});
              if (run.begin(left)) {
                auto const merged_w = join({single(c), single(merged(a, b)), P});
                auto const swapped = join({single(a), single(c), P, single(b)});
                auto const meet = join({single(merged(a, b)), single(c), P});
                run.reduces(left, merged_w);
                run.equals(left, swapped);
                run.reduces(swapped, meet);
                run.equals(merged_w, meet);
              }
            }
          }
        }
      }
    }
    reports.push_back(run.take());
  }

  for (auto const& r : reports) {
    if (r.instances == 0) {
      throw Error(Errc::EmptyInstantiation,
                  "case " + r.id + " has no instance within norm " +
                      std::to_string(u.max_norm()) + " and syllable length " +
                      std::to_string(u.max_syllable()));
    }
  }
  return reports;
}

std::string render_report(GraphProductPresentation const& p, CheckReport const& r) {
  std::string out = "case=" + r.id + " instances=" + std::to_string(r.instances) +
                    " failures=" + std::to_string(r.failures()) + '\n';
  for (auto const& [x, y] : r.counterexamples) {
    out += "counterexample " + to_string(p, x) + ' ' + to_string(p, y) + '\n';
  }
  return out;
}

}  // namespace gp
