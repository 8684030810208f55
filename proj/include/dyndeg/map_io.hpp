#pragma once

// Plain-text map format:
//
//   degree D
//   coeff i j k        one line per monomial of F0, canonical order
//   --
//   ...                F1
//   --
//   ...                F2

#include <iosfwd>
#include <string>

#include "dyndeg/cremona.hpp"

namespace dyndeg {

std::string to_text(const PlaneRationalMap& m);
void write_text(std::ostream& os, const PlaneRationalMap& m);

/// Throws std::invalid_argument on malformed input. The result carries
/// reduced = false since the format does not record it.
PlaneRationalMap map_from_text(const std::string& text);

}  // namespace dyndeg
