#ifndef GP_ERROR_HPP_
#define GP_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace gp {

enum class Errc {
  LoopEdge,
  DuplicateEdge,
  UnknownVertex,
  MissingGroup,
  AlphabetOverlap,
  BadBar,
  BadLetter,
  ForeignLetterInRelator,
  BadRelator,
  BadTable,
  MissingIsoClass,
  ForeignLetter,
  InapplicableMove,
  NotNull,
  AreaCapExceeded,
  IndexOutOfRange,
  Overflow,
  UnsupportedClass,
  EmptyInstantiation,
  OracleFailure,
  Parse,
};

std::string_view to_string(Errc code);

// Every library failure is reported through this one exception type; the
// code lets callers (the CLI in particular) map failures to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string const& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        _code(code) {}

  [[nodiscard]] Errc code() const noexcept { return _code; }

 private:
  Errc _code;
};

}  // namespace gp

#endif  // GP_ERROR_HPP_
