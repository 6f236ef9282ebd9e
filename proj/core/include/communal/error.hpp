#pragma once

#include <stdexcept>
#include <string>

namespace communal {

enum class Errc {
  // Bound-system validation.
  TrivialSystem,
  PartnerSumExceeded,
  BadShape,
  // Composition inputs.
  ArityMismatch,
  NotCommunal,
  // Cap guards on enumeration and the residue scan.
  ResultTooLarge,
  ScanCapExceeded,
  // Quasi-polynomial extraction and evaluation.
  ValidationFailed,
  OutOfValidatedRange,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& message);

}  // namespace communal
