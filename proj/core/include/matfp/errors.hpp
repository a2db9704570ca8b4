#ifndef MATFP_ERRORS_HPP
#define MATFP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace matfp {

// Error codes for precondition and input failures.  Callers that need to
// distinguish failure modes switch on code() instead of parsing messages.
enum class Errc {
  NotEquicardinal,
  ExchangeFails,
  EmptyBasisList,
  RankOutOfRange,
  GroundSetOverflow,
  NotNested,
  EmptyMatroid,
  SizeMismatch,
  SizeTooLarge,
  InvalidCut,
  PresentationRankMismatch,
  NotAFreeSeparator,
  IncompleteCatalog,
  ParseError,
  BadArgument,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotEquicardinal: return "NotEquicardinal";
    case Errc::ExchangeFails: return "ExchangeFails";
    case Errc::EmptyBasisList: return "EmptyBasisList";
    case Errc::RankOutOfRange: return "RankOutOfRange";
    case Errc::GroundSetOverflow: return "GroundSetOverflow";
    case Errc::NotNested: return "NotNested";
    case Errc::EmptyMatroid: return "EmptyMatroid";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::SizeTooLarge: return "SizeTooLarge";
    case Errc::InvalidCut: return "InvalidCut";
    case Errc::PresentationRankMismatch: return "PresentationRankMismatch";
    case Errc::NotAFreeSeparator: return "NotAFreeSeparator";
    case Errc::IncompleteCatalog: return "IncompleteCatalog";
    case Errc::ParseError: return "ParseError";
    case Errc::BadArgument: return "BadArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Raised when a structural theorem that the implementation relies on fails to
// hold on concrete inputs.  Carries a serialized counterexample in what().
// Must never fire; the CLI maps it to exit code 3.
class TheoremViolation : public std::logic_error {
 public:
  explicit TheoremViolation(const std::string& witness)
      : std::logic_error("TheoremViolation: " + witness) {}
};

}  // namespace matfp

#endif  // MATFP_ERRORS_HPP
