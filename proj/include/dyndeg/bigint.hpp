#pragma once

#include <gmpxx.h>

#include <string>

namespace dyndeg {

using Int = mpz_class;

inline std::string to_string(const Int& v) { return v.get_str(); }

}  // namespace dyndeg
