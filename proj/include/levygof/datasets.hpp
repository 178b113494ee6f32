#pragma once
// Embedded real datasets used in the applications section.

#include "levygof/dist.hpp"

namespace levygof {

// Weighted average monthly rainfall (31 values). Analyzed as printed.
const Sample& rainfall_data();

// Hillside well yields in gal/min/ft (41 values), as printed. The published
// test results for this dataset were computed on the reciprocals of the
// yields (see README); use hillside_data_inverted() to reproduce them.
const Sample& hillside_data();
Sample hillside_data_inverted();

}  // namespace levygof
