#include "communal/error.hpp"

namespace communal {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::TrivialSystem:
      return "TrivialSystem";
    case Errc::PartnerSumExceeded:
      return "PartnerSumExceeded";
    case Errc::BadShape:
      return "BadShape";
    case Errc::ArityMismatch:
      return "ArityMismatch";
    case Errc::NotCommunal:
      return "NotCommunal";
    case Errc::ResultTooLarge:
      return "ResultTooLarge";
    case Errc::ScanCapExceeded:
      return "ScanCapExceeded";
    case Errc::ValidationFailed:
      return "ValidationFailed";
    case Errc::OutOfValidatedRange:
      return "OutOfValidatedRange";
  }
  return "UnknownError";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void raise(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace communal
