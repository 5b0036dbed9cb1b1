#pragma once

#include "catwalk/exec.hpp"
#include "catwalk/matrix.hpp"

namespace catwalk {

// Brute-force oracle: first-row cofactor expansion. Capped small by design;
// every identity in the library is cross-checked against this tier.
Polynomial det_laplace(const SquareMatrix& m, size_t cap = 9);

// Division-free dynamic program over column subsets, O(2^n * n^2) ring
// operations. Layers are data-parallel.
Polynomial det_division_free(const SquareMatrix& m, Exec exec = Exec::parallel, size_t cap = 20);

// Fraction-free Bareiss elimination; pivots take the first row at or below
// the diagonal with a nonzero pivot-column entry, row swaps flip the sign.
// Structurally singular matrices yield 0. The per-step update sweep is
// data-parallel.
Polynomial det_bareiss(const SquareMatrix& m, Exec exec = Exec::parallel);

} // namespace catwalk
