#pragma once

#include <iosfwd>
#include <string>

#include "nuframe/io.hpp"

namespace nuframe::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kBesselOnly = 2,
  kRankDeficient = 3,
  kPerturbFailed = 4,
};

/// Library version embedded in every report.
const char* version() noexcept;

/// Named fixture with its companion signals, as written by `examples export`.
io::SystemDocument fixture_document(const std::string& name);

/// Parses argv and dispatches; never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace nuframe::cli
