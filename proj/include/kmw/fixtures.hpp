// Built-in named Cartan matrices.
#pragma once

#include "kmw/cartan.hpp"

#include <string>
#include <vector>

namespace kmw {

/// Known names: A1, A2, A3, B2, B3, C3, G2, A1xA1, affineA1, affineA2,
/// hyperbolic (the rank 2 matrix with off-diagonal entries -3).
GeneralizedCartanMatrix fixture(const std::string& name);
std::vector<std::string> fixture_names();

}  // namespace kmw
