#ifndef GP_ISOFUNCTIONS_HPP_
#define GP_ISOFUNCTIONS_HPP_

#include <span>
#include <string>
#include <vector>

#include "gp/checked.hpp"

namespace gp {

/// An evaluable isoperimetric function class.
///
/// Polynomial(k) is n -> n^k, Exponential is n -> 2^n, Tabulated holds
/// explicit values for 1..N (f(0) = 0) and continues as f(N) + (n - N)^2.
/// Max is the pointwise maximum of its components; it arises when vertex
/// groups declare different classes.
class FunctionClass {
 public:
  enum class Kind { Polynomial, Exponential, Tabulated, Max };

  static FunctionClass polynomial(unsigned degree);
  static FunctionClass exponential();
  static FunctionClass tabulated(std::vector<Count> values);
  static FunctionClass pointwise_max(std::span<FunctionClass const> parts);

  [[nodiscard]] Kind kind() const noexcept { return _kind; }
  [[nodiscard]] unsigned degree() const noexcept { return _degree; }
  [[nodiscard]] std::vector<Count> const& table() const noexcept {
    return _table;
  }
  [[nodiscard]] std::vector<FunctionClass> const& parts() const noexcept {
    return _parts;
  }

  // Throws Errc::Overflow when the value leaves the 63-bit range.
  [[nodiscard]] Count operator()(Count n) const;

  // "poly 2", "exp", "table 3 4", "max(poly 2, exp)"
  [[nodiscard]] std::string describe() const;

  friend bool operator==(FunctionClass const&, FunctionClass const&) = default;

 private:
  FunctionClass() = default;

  Kind _kind = Kind::Polynomial;
  unsigned _degree = 0;
  std::vector<Count> _table;
  std::vector<FunctionClass> _parts;
};

Count eval_f(FunctionClass const& f, Count n);

// g(n) = max over compositions n = n_1 + ... + n_s (all n_k >= 1) of
// f(n_1) + ... + f(n_s), with g(0) = 0. Filled once by the recurrence
// g(n) = max(f(n), max_{1 <= m < n} f(m) + g(n - m)).
class GTable {
 public:
  GTable(FunctionClass f, Count max_n);

  [[nodiscard]] Count operator()(Count n) const;
  [[nodiscard]] Count max_n() const noexcept { return _values.size() - 1; }
  [[nodiscard]] FunctionClass const& source() const noexcept { return _f; }

 private:
  FunctionClass _f;
  std::vector<Count> _values;
};

Count g_of(FunctionClass const& f, Count n);

// g(n) + n^2
Count iso_bound(FunctionClass const& f, Count n);

// For Polynomial and Exponential classes g is of the same class; the claim is
// checked numerically (g(n) == f(n) for 1 <= n <= 64, or up to 40 for the
// exponential, stopping early where f overflows). Tabulated and Max throw
// Errc::UnsupportedClass.
FunctionClass class_of_g(FunctionClass const& f);

}  // namespace gp

#endif  // GP_ISOFUNCTIONS_HPP_
