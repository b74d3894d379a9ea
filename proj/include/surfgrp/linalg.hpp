#pragma once

#include <vector>

#include "surfgrp/nil2.hpp"

namespace surfgrp {

using IntMatrix = std::vector<std::vector<Int>>;

// Row-style Hermite normal form: positive pivots, entries above a pivot
// reduced into [0, pivot). Zero rows are dropped, so equal lattices give
// equal results.
IntMatrix hermite_normal_form(IntMatrix rows);

// Basis for the left kernel {c in Z^k : c * rows = 0}.
IntMatrix integer_kernel(const IntMatrix& rows);

}  // namespace surfgrp
