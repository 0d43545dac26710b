#include "qalg/duality.hpp"

#include <stdexcept>

namespace qalg {

QuadraticSpace quadratic_dual(const QuadraticSpace& r)
{
    MatrixQ b = r.basis;
    if (b.cols() != r.dim_v * r.dim_v) {
        if (b.rows() != 0)
            throw std::invalid_argument("quadratic_dual: basis shape mismatch");
        b = MatrixQ(0, r.dim_v * r.dim_v);
    }
    QuadraticSpace dual;
    dual.dim_v = r.dim_v;
    dual.basis = orthogonal_complement(b);
    return dual;
}

bool check_double_dual(const QuadraticSpace& r)
{
    return quadratic_dual(quadratic_dual(r)) == r;
}

}  // namespace qalg
