#include "gp/vertex_oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <unordered_map>

namespace gp {

namespace {

// Search-local encoding: symbol 2*k is the k-th alphabet letter, 2*k+1 its
// formal inverse.
using Code = std::string;

char code_of(std::size_t local, bool inv) {
  return static_cast<char>(2 * local + (inv ? 1 : 0));
}

Code invert(Code const& w) {
  Code out(w.rbegin(), w.rend());
  for (auto& c : out) {
    c = static_cast<char>(c ^ 1);
  }
  return out;
}

Code reduce(Code const& w) {
  Code out;
  out.reserve(w.size());
  for (char c : w) {
    if (!out.empty() && out.back() == static_cast<char>(c ^ 1)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

struct Rule {
  Code lhs;
  Code rhs;
  std::size_t relator;
  int sign;
  // The rule's relator l' r'^-1 equals conj * relator^sign * conj^-1.
  Code conj;
};

struct Node {
  Code parent;
  Code conj;
  std::size_t relator = 0;
  int sign = 1;
};

}  // namespace

VertexOracle::VertexOracle(GraphProductPresentation const& p, VertexId vertex,
                           AreaSearchCaps caps)
    : _p(&p), _vertex(vertex), _group(&p.group(vertex)), _caps(caps) {}

void VertexOracle::check_letters(LetterWord const& u) const {
  for (auto a : u) {
    if (a >= _p->letter_count() || _p->vertex_of(a) != _vertex) {
      throw Error(Errc::ForeignLetter,
                  "letter is not in the alphabet of vertex " + std::to_string(_vertex));
    }
  }
}

LetterWord VertexOracle::bar_word(LetterWord const& u) const {
  check_letters(u);
  LetterWord out;
  out.reserve(u.size());
  for (auto it = u.rbegin(); it != u.rend(); ++it) {
    out.push_back(_p->bar(*it));
  }
  return out;
}

bool VertexOracle::is_identity(LetterWord const& u) const {
  check_letters(u);
  switch (_group->backend) {
    case BackendKind::FiniteTable: {
      auto const& table = *_group->table;
      std::size_t x = 0;
      for (auto a : u) {
        x = table.product(x, _group->gen_map[_p->local_index(a)]);
      }
      return x == 0;
    }
    case BackendKind::FreeGroup: {
      return bar_normal_form(*_p, positive(u)).empty();
    }
    case BackendKind::FreeAbelian: {
      std::vector<long> exponent(_group->alphabet.size(), 0);
      for (auto a : u) {
        Letter const b = _p->bar(a);
        if (a == b) {
          exponent[_p->local_index(a)] ^= 1;
        } else if (a < b) {
          ++exponent[_p->local_index(a)];
        } else {
          --exponent[_p->local_index(b)];
        }
      }
      return std::all_of(exponent.begin(), exponent.end(),
                         [](long e) { return e == 0; });
    }
  }
  return false;
}

bool VertexOracle::are_equal(LetterWord const& u, LetterWord const& v) const {
  LetterWord w = u;
  auto const vb = bar_word(v);
  w.insert(w.end(), vb.begin(), vb.end());
  return is_identity(w);
}

VertexCertificate VertexOracle::area_certificate(LetterWord const& u) const {
  if (!is_identity(u)) {
    throw Error(Errc::NotNull, _p->render(u) + " is not the identity in vertex " +
                                   std::to_string(_vertex));
  }
  VertexCertificate cert;
  if (u.empty()) {
    return cert;
  }

  auto encode = [&](LetterWord const& w) {
    Code out;
    for (auto a : w) {
      out.push_back(code_of(_p->local_index(a), false));
    }
    return out;
  };

  std::vector<Rule> rules;
  {
    std::map<std::pair<Code, Code>, bool> seen;
    for (std::size_t r = 0; r < _group->relators.size(); ++r) {
      Code const pos = encode(_group->relators[r]);
      for (int sign : {1, -1}) {
        Code const x = sign == 1 ? pos : invert(pos);
        for (std::size_t k = 0; k < x.size(); ++k) {
          Code const rotated = x.substr(k) + x.substr(0, k);
          Code const conj = invert(x.substr(0, k));
          for (std::size_t j = 0; j <= rotated.size(); ++j) {
            Code lhs = rotated.substr(0, j);
            Code rhs = invert(rotated.substr(j));
            if (seen.emplace(std::pair{lhs, rhs}, true).second) {
              rules.push_back({std::move(lhs), std::move(rhs), r, sign, conj});
            }
          }
        }
      }
    }
  }

  std::size_t const max_len = _caps.length_factor * u.size();
  Code const start = reduce(encode(u));
  std::unordered_map<Code, Node> visited;
  visited.emplace(start, Node{});
  std::deque<Code> queue{start};
  bool found = start.empty();

  while (!queue.empty() && !found) {
    Code const w = queue.front();
    queue.pop_front();
    for (std::size_t pos = 0; pos <= w.size() && !found; ++pos) {
      for (auto const& rule : rules) {
        if (w.compare(pos, rule.lhs.size(), rule.lhs) != 0 ||
            pos + rule.lhs.size() > w.size()) {
          continue;
        }
        Code next = reduce(w.substr(0, pos) + rule.rhs + w.substr(pos + rule.lhs.size()));
        if (next.size() > max_len || visited.count(next) != 0) {
          continue;
        }
        if (visited.size() >= _caps.max_states) {
          throw Error(Errc::AreaCapExceeded,
                      "area search for " + _p->render(u) + " exceeded " +
                          std::to_string(_caps.max_states) + " states (length cap " +
                          std::to_string(max_len) + ")");
        }
        visited.emplace(next, Node{w, reduce(w.substr(0, pos) + rule.conj),
                                   rule.relator, rule.sign});
        if (next.empty()) {
          found = true;
          break;
        }
        queue.push_back(std::move(next));
      }
    }
  }
  if (!found) {
    throw Error(Errc::AreaCapExceeded,
                "no certificate for " + _p->render(u) + " within length cap " +
                    std::to_string(max_len) + " and " +
                    std::to_string(_caps.max_states) + " states");
  }

  // Walk back from the empty word; each step w -> next contributes the item
  // with w = item * next, so items come out last-first.
  Code cur;
  while (cur != start) {
    Node const& node = visited.at(cur);
    FreeWord conj;
    for (char c : node.conj) {
      auto const code = static_cast<unsigned char>(c);
      conj.push_back({_group->alphabet[code / 2], (code & 1) != 0});
    }
    cert.items.push_back({std::move(conj), node.relator, node.sign});
    cur = node.parent;
  }
  std::reverse(cert.items.begin(), cert.items.end());

  if (cert.items.size() > _group->iso(u.size())) {
    throw Error(Errc::OracleFailure,
                "area " + std::to_string(cert.items.size()) + " of " + _p->render(u) +
                    " exceeds declared class " + _group->iso.describe());
  }
  return cert;
}

OracleSet::OracleSet(GraphProductPresentation const& p, AreaSearchCaps caps) : _p(&p) {
  for (auto const& g : p.groups()) {
    _oracles.emplace_back(p, g.vertex, caps);
    for (auto const& rel : g.relators) {
      if (!_oracles.back().is_identity(rel)) {
        throw Error(Errc::BadRelator, "relator " + p.render(rel) + " of vertex " +
                                          std::to_string(g.vertex) +
                                          " is not trivial in its backend");
      }
    }
  }
}

VertexOracle const& OracleSet::operator[](VertexId i) const {
  auto const& vs = _p->graph().vertices();
  auto it = std::lower_bound(vs.begin(), vs.end(), i);
  if (it == vs.end() || *it != i) {
    throw Error(Errc::UnknownVertex, "vertex " + std::to_string(i));
  }
  return _oracles[static_cast<std::size_t>(it - vs.begin())];
}

}  // namespace gp
