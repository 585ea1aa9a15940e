#ifndef GP_CHECKED_HPP_
#define GP_CHECKED_HPP_

#include <cstdint>
#include <limits>

#include "gp/error.hpp"

namespace gp {

// All counts (weights, areas, function values) are exact integers bounded
// by 2^63 - 1; anything larger is an Overflow error, never a wraparound.
using Count = std::uint64_t;

inline constexpr Count kCountMax =
    static_cast<Count>(std::numeric_limits<std::int64_t>::max());

inline Count checked_add(Count a, Count b) {
  Count r = 0;
  if (__builtin_add_overflow(a, b, &r) || r > kCountMax) {
    throw Error(Errc::Overflow, "sum exceeds 63-bit range");
  }
  return r;
}

inline Count checked_mul(Count a, Count b) {
  Count r = 0;
  if (__builtin_mul_overflow(a, b, &r) || r > kCountMax) {
    throw Error(Errc::Overflow, "product exceeds 63-bit range");
  }
  return r;
}

}  // namespace gp

#endif  // GP_CHECKED_HPP_
