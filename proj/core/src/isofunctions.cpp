#include "gp/isofunctions.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace gp {

FunctionClass FunctionClass::polynomial(unsigned degree) {
  if (degree < 1) {
    throw Error(Errc::UnsupportedClass, "polynomial degree must be >= 1");
  }
  FunctionClass f;
  f._kind = Kind::Polynomial;
  f._degree = degree;
  return f;
}

FunctionClass FunctionClass::exponential() {
  FunctionClass f;
  f._kind = Kind::Exponential;
  return f;
}

FunctionClass FunctionClass::tabulated(std::vector<Count> values) {
  if (values.empty()) {
    throw Error(Errc::UnsupportedClass, "tabulated class needs at least one value");
  }
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] > kCountMax) {
      throw Error(Errc::Overflow, "tabulated value exceeds 63-bit range");
    }
    if (k > 0 && values[k] < values[k - 1]) {
      throw Error(Errc::UnsupportedClass, "tabulated values must be non-decreasing");
    }
  }
  FunctionClass f;
  f._kind = Kind::Tabulated;
  f._table = std::move(values);
  return f;
}

FunctionClass FunctionClass::pointwise_max(std::span<FunctionClass const> parts) {
  if (parts.empty()) {
    throw Error(Errc::UnsupportedClass, "maximum of no function classes");
  }
  // Flatten nested maxima, fold polynomials into the largest degree (n^k is
  // increasing in k for every n >= 0), and drop duplicates.
  std::vector<FunctionClass> flat;
  unsigned max_degree = 0;
  auto add = [&](FunctionClass const& g, auto&& self) -> void {
    if (g._kind == Kind::Max) {
      for (auto const& h : g._parts) {
        self(h, self);
      }
    } else if (g._kind == Kind::Polynomial) {
      max_degree = std::max(max_degree, g._degree);
    } else if (std::find(flat.begin(), flat.end(), g) == flat.end()) {
      flat.push_back(g);
    }
  };
  for (auto const& g : parts) {
    add(g, add);
  }
  if (max_degree > 0) {
    flat.insert(flat.begin(), polynomial(max_degree));
  }
  if (flat.size() == 1) {
    return flat.front();
  }
  FunctionClass f;
  f._kind = Kind::Max;
  f._parts = std::move(flat);
  return f;
}

Count FunctionClass::operator()(Count n) const {
  switch (_kind) {
    case Kind::Polynomial: {
      Count r = 1;
      for (unsigned k = 0; k < _degree; ++k) {
        r = checked_mul(r, n);
      }
      return r;
    }
    case Kind::Exponential: {
      if (n >= 63) {
        throw Error(Errc::Overflow, "2^" + std::to_string(n) + " exceeds 63-bit range");
      }
      return Count{1} << n;
    }
    case Kind::Tabulated: {
      if (n == 0) {
        return 0;
      }
      if (n <= _table.size()) {
        return _table[n - 1];
      }
      Count const d = n - _table.size();
      return checked_add(_table.back(), checked_mul(d, d));
    }
    case Kind::Max: {
      Count r = 0;
      for (auto const& g : _parts) {
        r = std::max(r, g(n));
      }
      return r;
    }
  }
  return 0;
}

std::string FunctionClass::describe() const {
  std::ostringstream os;
  switch (_kind) {
    case Kind::Polynomial: os << "poly " << _degree; break;
    case Kind::Exponential: os << "exp"; break;
    case Kind::Tabulated:
      os << "table";
      for (auto v : _table) {
        os << ' ' << v;
      }
      break;
    case Kind::Max:
      os << "max(";
      for (std::size_t k = 0; k < _parts.size(); ++k) {
        os << (k ? ", " : "") << _parts[k].describe();
      }
      os << ')';
      break;
  }
  return os.str();
}

Count eval_f(FunctionClass const& f, Count n) { return f(n); }

GTable::GTable(FunctionClass f, Count max_n) : _f(std::move(f)) {
  _values.assign(max_n + 1, 0);
  std::vector<Count> fv(max_n + 1, 0);
  for (Count n = 1; n <= max_n; ++n) {
    fv[n] = _f(n);
  }
  for (Count n = 1; n <= max_n; ++n) {
    Count best = fv[n];
    for (Count m = 1; m < n; ++m) {
      best = std::max(best, checked_add(fv[m], _values[n - m]));
    }
    _values[n] = best;
  }
}

Count GTable::operator()(Count n) const {
  if (n >= _values.size()) {
    throw Error(Errc::IndexOutOfRange,
                "g(" + std::to_string(n) + ") beyond table size " +
                    std::to_string(_values.size() - 1));
  }
  return _values[n];
}

Count g_of(FunctionClass const& f, Count n) { return GTable(f, n)(n); }

Count iso_bound(FunctionClass const& f, Count n) {
  return checked_add(g_of(f, n), checked_mul(n, n));
}

FunctionClass class_of_g(FunctionClass const& f) {
  Count limit = 0;
  switch (f.kind()) {
    case FunctionClass::Kind::Polynomial: limit = 64; break;
    case FunctionClass::Kind::Exponential: limit = 40; break;
    default:
      throw Error(Errc::UnsupportedClass,
                  "no closed-form class for g of " + f.describe());
  }
  // Shrink the sweep until f stays in range.
  while (limit > 1) {
    try {
      (void) f(limit);
      break;
    } catch (Error const&) {
      --limit;
    }
  }
  GTable const g(f, limit);
  for (Count n = 1; n <= limit; ++n) {
    if (g(n) != f(n)) {
      throw Error(Errc::OracleFailure,
                  "g differs from f at n=" + std::to_string(n) + " for " +
                      f.describe());
    }
  }
  return f;
}

}  // namespace gp
