#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "attractor/feasible.hpp"

namespace attractor {

struct JsonError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// {"base": [[1],[1,1]], "rho": {"1,1": 0}, "sigma": {"1": 1, "1,1": 0}}
// Elements are derived, never parsed; serialization may include them as
// numerator-of-thirds vectors ("5/3" appears as 5).
FeasibleSet feasible_from_json_text(std::string_view text);

std::string feasible_to_json_text(const FeasibleSet& L,
                                  bool include_elements = true);

}  // namespace attractor
