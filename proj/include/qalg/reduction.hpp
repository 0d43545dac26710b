#ifndef QALG_REDUCTION_HPP
#define QALG_REDUCTION_HPP

#include "qalg/free_algebra.hpp"
#include "qalg/keel.hpp"
#include "qalg/matrix.hpp"

#include <map>
#include <vector>

namespace qalg {

// Result of eliminating the linearly dependent generators: pivot variables of
// the linear relation matrix become `eliminated`, expressed over the kept
// ones.
struct Substitution {
    std::vector<VarId> kept;           // original ids, in precedence order
    std::map<VarId, Poly> eliminated;  // original id -> degree-1 poly over kept ids
};

// Subspace of the degree-2 word space over dim_v variables, stored as an
// RREF basis. Word (i, j) lives at column i*dim_v + j, so with variable 0
// greatest the columns run through the degree-2 words in decreasing
// deglex order and each basis row is led by its order-largest word.
struct QuadraticSpace {
    int dim_v = 0;
    MatrixQ basis;  // RREF, one row per dimension

    int dim() const { return basis.rows(); }
    bool operator==(const QuadraticSpace&) const = default;
};

inline int word_col(int dim_v, VarId i, VarId j) { return i * dim_v + j; }

Substitution eliminate_linear(const Presentation& p, const MonomialOrder& ord);

QuadraticSpace reduce_quadratics(const Presentation& p, const Substitution& s);

// Presentation over the kept variables only, quadratic relations taken from
// the reduced space basis.
Presentation reduced_presentation(const Presentation& p, const Substitution& s);

// Conversions between basis rows and polynomials over 0..dim_v-1.
std::vector<Poly> space_to_polys(const QuadraticSpace& r);
QuadraticSpace space_from_polys(int dim_v, const std::vector<Poly>& quadratics);
SparseRow poly_to_row(int dim_v, const Poly& p);
Poly row_to_poly(int dim_v, const SparseRow& row);

bool space_contains(const QuadraticSpace& r, const Poly& p);

}  // namespace qalg

#endif
