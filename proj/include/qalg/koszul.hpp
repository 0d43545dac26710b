#ifndef QALG_KOSZUL_HPP
#define QALG_KOSZUL_HPP

#include "qalg/gb.hpp"
#include "qalg/matrix.hpp"
#include "qalg/reduction.hpp"

#include <optional>
#include <string>

namespace qalg {

// defects[k] is the t^k coefficient of H_dual(t) * H_A(-t) - 1; a Koszul
// algebra has them all zero, so the first nonzero degree disproves
// Koszulity.
struct KoszulReport {
    DimensionProfile h_a;
    DimensionProfile h_dual;
    std::vector<long long> defects;  // index k = 0..d_max
    std::optional<int> first_failure;
};

enum class KoszulVerdict { not_koszul, pbw_koszul, undetermined };

std::string to_string(KoszulVerdict v);

KoszulReport koszul_test(const DimensionProfile& h_a, const DimensionProfile& h_dual, int d_max);

// The profile a Koszul dual would have: the coefficients of 1 / H_A(-t).
DimensionProfile series_inverse_alternating(const DimensionProfile& h_a, int d_max);

// Image of r under x_i -> sum_j m[j][i] x_j applied in both tensor slots,
// re-echelonized. m must be invertible.
QuadraticSpace apply_linear_change(const QuadraticSpace& r, const MatrixQ& m);

// PBW certificate: true iff Buchberger to degree 3 adds no cubic rule and
// the quadratic leading words alone already count the degree-3 component
// correctly against the brute-force span oracle.
bool check_quadratic_gb(const QuadraticSpace& r, const MonomialOrder& ord);

}  // namespace qalg

#endif
