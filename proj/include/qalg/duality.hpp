#ifndef QALG_DUALITY_HPP
#define QALG_DUALITY_HPP

#include "qalg/reduction.hpp"

namespace qalg {

// Relations of the quadratic dual algebra: the orthogonal complement of r
// under the coordinatewise pairing <x_i x_j, x_k x_l> = [i=k][j=l]. Dual
// variables reuse the primal indices.
QuadraticSpace quadratic_dual(const QuadraticSpace& r);

// The double complement must reproduce r exactly (RREF bases are unique).
bool check_double_dual(const QuadraticSpace& r);

}  // namespace qalg

#endif
