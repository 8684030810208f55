#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "dyndeg/bigint.hpp"

namespace dyndeg {

enum class SequenceOrigin { MonomialD, ComposedE, Oracle };

std::string_view to_string(SequenceOrigin o);

/// An exact integer sequence with an explicit first index.
/// d-sequences start at 1, e-sequences at 0 (with e_0 = 1).
struct DegreeSequence {
  std::vector<Int> values;
  std::size_t first_index = 1;
  SequenceOrigin origin = SequenceOrigin::MonomialD;

  std::size_t last_index() const { return first_index + values.size() - 1; }
  bool has(std::size_t j) const {
    return !values.empty() && j >= first_index && j <= last_index();
  }
  const Int& at(std::size_t j) const { return values.at(j - first_index); }
  std::size_t size() const { return values.size(); }
};

}  // namespace dyndeg
