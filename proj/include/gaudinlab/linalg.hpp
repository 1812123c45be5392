#ifndef GAUDINLAB_LINALG_HPP
#define GAUDINLAB_LINALG_HPP

#include <vector>

#include "gaudinlab/rational_fn.hpp"

namespace gaudinlab {

using RationalMatrix = std::vector<std::vector<RationalFn>>;

// Rank over the fraction field of the polynomial ring.
int matrix_rank(RationalMatrix m);

RationalFn det_fraction(RationalMatrix m);

// Solves the square system a * c = b; throws NonInvertibleImage when singular.
std::vector<RationalFn> solve_linear(RationalMatrix a, std::vector<RationalFn> b);

}  // namespace gaudinlab

#endif
