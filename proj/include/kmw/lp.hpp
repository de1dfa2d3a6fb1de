// Exact rational feasibility for { x >= 0 : A x = b }.
#pragma once

#include "kmw/core.hpp"

namespace kmw {

/// Phase one of the simplex method over the rationals with Bland's rule.
/// `rows` holds A row by row; every row must have the same width.
bool exact_feasible(const std::vector<QVec>& rows, const QVec& rhs);

}  // namespace kmw
