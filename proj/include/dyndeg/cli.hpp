#pragma once

// Command-line front end shared by the dyndeg executable and the tests.

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "dyndeg/gaussian.hpp"

namespace dyndeg::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInadmissible = 2,
  kPrecision = 3,
  kResource = 4,
  kMismatch = 5,
};

enum class Format { Text, Json, Csv };

struct RunConfig {
  GaussianInt zeta{1, 2};
  long precision_bits = 128;
  int target_digits = 12;
  std::uint64_t seed = 0;
  unsigned max_iterate = 3;
  Format format = Format::Text;
};

/// Accepts "a+bi", "a-bi", "a", "bi" (b may be omitted: "1+i", "-i"),
/// with optional whitespace. Throws std::invalid_argument otherwise.
GaussianInt parse_zeta(std::string_view text);

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dyndeg::cli
