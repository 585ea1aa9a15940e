#include "gp/error.hpp"

namespace gp {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::MissingGroup: return "MissingGroup";
    case Errc::AlphabetOverlap: return "AlphabetOverlap";
    case Errc::BadBar: return "BadBar";
    case Errc::BadLetter: return "BadLetter";
    case Errc::ForeignLetterInRelator: return "ForeignLetterInRelator";
    case Errc::BadRelator: return "BadRelator";
    case Errc::BadTable: return "BadTable";
    case Errc::MissingIsoClass: return "MissingIsoClass";
    case Errc::ForeignLetter: return "ForeignLetter";
    case Errc::InapplicableMove: return "InapplicableMove";
    case Errc::NotNull: return "NotNull";
    case Errc::AreaCapExceeded: return "AreaCapExceeded";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::Overflow: return "Overflow";
    case Errc::UnsupportedClass: return "UnsupportedClass";
    case Errc::EmptyInstantiation: return "EmptyInstantiation";
    case Errc::OracleFailure: return "OracleFailure";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace gp
