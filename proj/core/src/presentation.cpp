#include "gp/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace gp {

namespace {

std::string vstr(VertexId i) { return std::to_string(i); }

bool valid_letter_name(std::string_view name) {
  if (name.empty()) {
    return false;
  }
  auto const head = static_cast<unsigned char>(name.front());
  if (!(std::isalpha(head) || head == '_')) {
    return false;
  }
  return std::all_of(name.begin(), name.end(), [](char c) {
    auto const u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

}  // namespace

////////////////////////////////////////////////////////////////////////////
// Graph
////////////////////////////////////////////////////////////////////////////

Graph::Graph(std::vector<VertexId> vertices,
             std::vector<std::pair<VertexId, VertexId>> const& edges)
    : _vertices(std::move(vertices)) {
  std::sort(_vertices.begin(), _vertices.end());
  if (std::adjacent_find(_vertices.begin(), _vertices.end()) != _vertices.end()) {
    throw Error(Errc::DuplicateEdge, "vertex declared twice");
  }
  for (auto i : _vertices) {
    if (i < 0 || i > kMaxVertexId) {
      throw Error(Errc::UnknownVertex,
                  "vertex id " + vstr(i) + " outside 0.." + vstr(kMaxVertexId));
    }
  }
  _span = _vertices.empty() ? 0 : static_cast<std::size_t>(_vertices.back()) + 1;
  _present.assign(_span, false);
  _adjacency.assign(_span * _span, false);
  for (auto i : _vertices) {
    _present[i] = true;
  }
  for (auto [i, j] : edges) {
    if (!contains(i) || !contains(j)) {
      throw Error(Errc::UnknownVertex,
                  "edge (" + vstr(i) + " " + vstr(j) + ") uses an undeclared vertex");
    }
    if (i == j) {
      throw Error(Errc::LoopEdge, "loop edge at vertex " + vstr(i));
    }
    if (i > j) {
      std::swap(i, j);
    }
    if (_adjacency[i * _span + j]) {
      throw Error(Errc::DuplicateEdge,
                  "edge (" + vstr(i) + " " + vstr(j) + ") declared twice");
    }
    _adjacency[i * _span + j] = true;
    _adjacency[j * _span + i] = true;
    _edges.emplace_back(i, j);
  }
  std::sort(_edges.begin(), _edges.end());
}

bool Graph::contains(VertexId i) const noexcept {
  return i >= 0 && static_cast<std::size_t>(i) < _span && _present[i];
}

bool Graph::adjacent(VertexId i, VertexId j) const noexcept {
  return contains(i) && contains(j) && _adjacency[i * _span + j];
}

////////////////////////////////////////////////////////////////////////////
// FiniteTable
////////////////////////////////////////////////////////////////////////////

FiniteTable::FiniteTable(std::size_t order, std::vector<std::size_t> entries)
    : _order(order), _entries(std::move(entries)) {
  std::size_t const m = _order;
  if (m == 0) {
    throw Error(Errc::BadTable, "table order must be positive");
  }
  if (_entries.size() != m * m) {
    throw Error(Errc::BadTable, "expected " + std::to_string(m * m) +
                                    " entries, got " + std::to_string(_entries.size()));
  }
  for (auto e : _entries) {
    if (e >= m) {
      throw Error(Errc::BadTable, "entry " + std::to_string(e) + " out of range");
    }
  }
  for (std::size_t x = 0; x < m; ++x) {
    if (product(0, x) != x || product(x, 0) != x) {
      throw Error(Errc::BadTable, "element 0 is not the identity");
    }
  }
  for (std::size_t x = 0; x < m; ++x) {
    std::vector<bool> row(m, false);
    std::vector<bool> col(m, false);
    for (std::size_t y = 0; y < m; ++y) {
      row[product(x, y)] = true;
      col[product(y, x)] = true;
    }
    if (std::find(row.begin(), row.end(), false) != row.end() ||
        std::find(col.begin(), col.end(), false) != col.end()) {
      throw Error(Errc::BadTable, "row or column " + std::to_string(x) +
                                      " is not a permutation");
    }
  }
  if (m <= 32) {
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        for (std::size_t z = 0; z < m; ++z) {
          if (product(product(x, y), z) != product(x, product(y, z))) {
            throw Error(Errc::BadTable, "table is not associative");
          }
        }
      }
    }
  }
  _inverse.resize(m);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (product(x, y) == 0) {
        _inverse[x] = y;
        break;
      }
    }
  }
}

////////////////////////////////////////////////////////////////////////////
// GraphProductPresentation
////////////////////////////////////////////////////////////////////////////

VertexPresentation const& GraphProductPresentation::group(VertexId i) const {
  if (!_graph.contains(i)) {
    throw Error(Errc::UnknownVertex, "vertex " + vstr(i));
  }
  return _groups[_group_index[i]];
}

std::optional<Letter> GraphProductPresentation::find_letter(std::string_view name) const {
  auto it = _by_name.find(std::string(name));
  if (it == _by_name.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::size_t GraphProductPresentation::relator_offset(VertexId i) const {
  if (!_graph.contains(i)) {
    throw Error(Errc::UnknownVertex, "vertex " + vstr(i));
  }
  return _offsets[_group_index[i]];
}

std::size_t GraphProductPresentation::commutator_index(Letter a, Letter b) const {
  VertexId const i = vertex_of(a);
  VertexId const j = vertex_of(b);
  auto const& edges = _graph.edges();
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(i, j));
  if (i >= j || it == edges.end() || *it != std::make_pair(i, j)) {
    throw Error(Errc::IndexOutOfRange,
                "no commutator relator for " + letter_name(a) + "," + letter_name(b));
  }
  auto const edge = static_cast<std::size_t>(it - edges.begin());
  std::size_t const width = group(j).alphabet.size();
  return _edge_offset[edge] + local_index(a) * width + local_index(b);
}

LetterWord GraphProductPresentation::split_token(std::string_view token) const {
  if (auto a = find_letter(token)) {
    return {*a};
  }
  // Longest-first decomposition with backtracking; tokens are short.
  LetterWord out;
  auto solve = [&](std::size_t pos, auto&& self) -> bool {
    if (pos == token.size()) {
      return true;
    }
    for (std::size_t len = token.size() - pos; len > 0; --len) {
      if (auto a = find_letter(token.substr(pos, len))) {
        out.push_back(*a);
        if (self(pos + len, self)) {
          return true;
        }
        out.pop_back();
      }
    }
    return false;
  };
  if (!solve(0, solve)) {
    throw Error(Errc::BadLetter, "cannot split '" + std::string(token) + "' into letters");
  }
  return out;
}

LetterWord GraphProductPresentation::parse_letters(std::string_view text) const {
  LetterWord out;
  std::istringstream is{std::string(text)};
  std::string token;
  while (is >> token) {
    auto part = split_token(token);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::string GraphProductPresentation::render(LetterWord const& w,
                                             std::string_view sep) const {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k > 0) {
      out += sep;
    }
    out += letter_name(w[k]);
  }
  return out;
}

GraphProductPresentation validate_presentation(RawPresentation const& raw) {
  Graph graph(raw.vertices, raw.edges);

  std::vector<RawGroup const*> by_vertex(
      graph.vertices().empty() ? 0 : graph.vertices().back() + 1, nullptr);
  for (auto const& g : raw.groups) {
    if (!graph.contains(g.vertex)) {
      throw Error(Errc::UnknownVertex, "group for undeclared vertex " + vstr(g.vertex));
    }
    if (by_vertex[g.vertex] != nullptr) {
      throw Error(Errc::MissingGroup, "vertex " + vstr(g.vertex) + " has two group blocks");
    }
    by_vertex[g.vertex] = &g;
  }

  // Letters first, so that relators can be tokenized against all alphabets.
  std::vector<std::string> names;
  std::unordered_map<std::string, Letter> by_name;
  std::vector<VertexId> vertex_of;
  std::vector<std::size_t> local;
  for (auto i : graph.vertices()) {
    RawGroup const* g = by_vertex[i];
    if (g == nullptr) {
      throw Error(Errc::MissingGroup, "no group declared for vertex " + vstr(i));
    }
    if (g->gens.empty()) {
      throw Error(Errc::MissingGroup, "vertex " + vstr(i) + " has an empty alphabet");
    }
    for (std::size_t k = 0; k < g->gens.size(); ++k) {
      auto const& name = g->gens[k];
      if (!valid_letter_name(name)) {
        throw Error(Errc::BadLetter, "invalid letter name '" + name + "'");
      }
      if (by_name.count(name) != 0) {
        throw Error(Errc::AlphabetOverlap,
                    "letter '" + name + "' declared more than once");
      }
      by_name.emplace(name, static_cast<Letter>(names.size()));
      names.push_back(name);
      vertex_of.push_back(i);
      local.push_back(k);
    }
  }

  std::vector<FunctionClass> classes;
  for (auto i : graph.vertices()) {
    if (!by_vertex[i]->iso) {
      throw Error(Errc::MissingIsoClass, "vertex " + vstr(i) + " declares no iso class");
    }
    classes.push_back(*by_vertex[i]->iso);
  }

  GraphProductPresentation p(std::move(graph), FunctionClass::pointwise_max(classes));
  p._names = std::move(names);
  p._by_name = std::move(by_name);
  p._vertex_of = std::move(vertex_of);
  p._local = std::move(local);
  p._bar.assign(p._names.size(), 0);
  p._group_index.assign(by_vertex.size(), 0);

  for (auto i : p._graph.vertices()) {
    RawGroup const& g = *by_vertex[i];
    VertexPresentation vp{i, {}, {}, *g.iso, BackendKind::FiniteTable, std::nullopt, {}};
    for (auto const& name : g.gens) {
      vp.alphabet.push_back(p._by_name.at(name));
    }

    auto own_letter = [&](std::string const& name) -> Letter {
      auto a = p.find_letter(name);
      if (!a) {
        throw Error(Errc::BadBar, "bar names unknown letter '" + name + "'");
      }
      if (p.vertex_of(*a) != i) {
        throw Error(Errc::BadBar, "bar pairs letter '" + name + "' of another vertex");
      }
      return *a;
    };
    std::vector<bool> has_bar(p._names.size(), false);
    for (auto const& [x, y] : g.bars) {
      Letter const a = own_letter(x);
      Letter const b = own_letter(y);
      for (auto [from, to] : {std::pair{a, b}, std::pair{b, a}}) {
        if (has_bar[from] && p._bar[from] != to) {
          throw Error(Errc::BadBar, "bar(" + p._names[from] + ") is not an involution");
        }
        has_bar[from] = true;
        p._bar[from] = to;
      }
    }
    for (auto a : vp.alphabet) {
      if (!has_bar[a]) {
        throw Error(Errc::BadBar, "letter '" + p._names[a] + "' has no bar partner");
      }
    }

    for (auto const& tokens : g.relators) {
      LetterWord rel;
      for (auto const& token : tokens) {
        LetterWord part;
        try {
          part = p.split_token(token);
        } catch (Error const&) {
          throw Error(Errc::ForeignLetterInRelator,
                      "relator token '" + token + "' of vertex " + vstr(i) +
                          " is not over its alphabet");
        }
        rel.insert(rel.end(), part.begin(), part.end());
      }
      if (rel.empty()) {
        throw Error(Errc::BadRelator, "empty relator at vertex " + vstr(i));
      }
      for (auto a : rel) {
        if (p.vertex_of(a) != i) {
          throw Error(Errc::ForeignLetterInRelator,
                      "letter '" + p._names[a] + "' in a relator of vertex " + vstr(i));
        }
      }
      vp.relators.push_back(std::move(rel));
    }
    for (auto a : vp.alphabet) {
      LetterWord const inv{a, p._bar[a]};
      if (std::find(vp.relators.begin(), vp.relators.end(), inv) == vp.relators.end()) {
        vp.relators.push_back(inv);
      }
    }

    if (!g.backend) {
      throw Error(Errc::BadTable, "vertex " + vstr(i) + " declares no backend");
    }
    vp.backend = g.backend->kind;
    if (vp.backend == BackendKind::FiniteTable) {
      FiniteTable table(g.backend->order, g.backend->entries);
      vp.gen_map.assign(vp.alphabet.size(), table.order());
      for (auto const& [name, elem] : g.backend->map) {
        auto a = p.find_letter(name);
        if (!a || p.vertex_of(*a) != i) {
          throw Error(Errc::BadTable, "map names a letter not in vertex " + vstr(i) +
                                          ": '" + name + "'");
        }
        if (elem >= table.order()) {
          throw Error(Errc::BadTable, "map target " + std::to_string(elem) + " out of range");
        }
        vp.gen_map[p._local[*a]] = elem;
      }
      for (auto a : vp.alphabet) {
        std::size_t const x = vp.gen_map[p._local[a]];
        if (x == table.order()) {
          throw Error(Errc::BadTable, "letter '" + p._names[a] + "' is not mapped");
        }
        if (vp.gen_map[p._local[p._bar[a]]] != table.inverse(x)) {
          throw Error(Errc::BadTable, "map of bar(" + p._names[a] +
                                          ") is not the inverse of its map");
        }
      }
      vp.table = std::move(table);
    }

    p._group_index[i] = p._groups.size();
    p._groups.push_back(std::move(vp));
  }

  for (auto const& vp : p._groups) {
    p._offsets.push_back(p._combined.size());
    p._combined.insert(p._combined.end(), vp.relators.begin(), vp.relators.end());
  }
  p._commutator_offset = p._combined.size();
  for (auto [i, j] : p._graph.edges()) {
    p._edge_offset.push_back(p._combined.size());
    for (auto a : p.group(i).alphabet) {
      for (auto b : p.group(j).alphabet) {
        p._combined.push_back({a, b, p._bar[a], p._bar[b]});
      }
    }
  }
  return p;
}

std::vector<VertexId> star(GraphProductPresentation const& p, VertexId i) {
  if (!p.graph().contains(i)) {
    throw Error(Errc::UnknownVertex, "vertex " + vstr(i));
  }
  std::vector<VertexId> out;
  for (auto j : p.graph().vertices()) {
    if (p.adjacent(i, j)) {
      out.push_back(j);
    }
  }
  return out;
}

std::vector<LetterWord> const& combined_relators(GraphProductPresentation const& p) {
  return p.combined_relators();
}

}  // namespace gp
