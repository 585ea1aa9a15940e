#ifndef GP_CERTIFICATE_HPP_
#define GP_CERTIFICATE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gp/free_group.hpp"
#include "gp/reduction.hpp"

namespace gp {

struct CertificateItem {
  FreeWord conjugator;
  // Index into combined_relators().
  std::size_t relator = 0;
  int sign = 1;

  friend bool operator==(CertificateItem const&, CertificateItem const&) = default;
};

/// An explicit Dehn-area certificate for a null word.
///
/// The product over items of conjugator * relator^sign * conjugator^-1
/// equals the target in the free group on the letters, modulo the
/// y bar(y) relators (which the presentation always contains).
struct DehnCertificate {
  LetterWord target;
  std::vector<CertificateItem> items;

  friend bool operator==(DehnCertificate const&, DehnCertificate const&) = default;
};

// Items C such that C * beta(apply_move(W, m)) = beta(W).
//   Merge:     none.
//   JumpMerge: ||Q|| * |v| commutator items. The letters of v move left
//              across beta(Q) one transposition at a time, first letter of v
//              first; each item is conjugated by the prefix left of the swap.
//   Delete:    the vertex oracle's certificate, re-indexed into the combined
//              relators and conjugated by beta(P).
std::vector<CertificateItem> move_certificate(OracleSet const& oracles,
                                              SyllableWord const& w, Move const& m);

// Requires a complete sequence; throws NotNull otherwise.
DehnCertificate sequence_certificate(OracleSet const& oracles,
                                     ReductionSequence const& s);

// Reduces, then certifies. nullopt iff w != 1 in the graph product.
std::optional<DehnCertificate> certify(OracleSet const& oracles, LetterWord const& w);

// Pure free-group check, no oracles. Throws IndexOutOfRange.
bool verify_certificate(GraphProductPresentation const& p, DehnCertificate const& c);

// Text format:
//   target <letters, space separated, or 1>
//   conj <free word> rel <index> sign <+|->
std::string write_certificate(GraphProductPresentation const& p,
                              DehnCertificate const& c);
// Throws Parse or BadLetter.
DehnCertificate read_certificate(GraphProductPresentation const& p,
                                 std::string_view text);

}  // namespace gp

#endif  // GP_CERTIFICATE_HPP_
