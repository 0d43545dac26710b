#include "qalg/koszul.hpp"

#include <map>
#include <stdexcept>

namespace qalg {

std::string to_string(KoszulVerdict v)
{
    switch (v) {
        case KoszulVerdict::not_koszul: return "not_koszul";
        case KoszulVerdict::pbw_koszul: return "pbw_koszul";
        case KoszulVerdict::undetermined: return "undetermined";
    }
    return "undetermined";
}

namespace {

long long profile_at(const DimensionProfile& p, int k)
{
    return k < static_cast<int>(p.dims.size()) ? p.dims[static_cast<size_t>(k)] : 0;
}

}  // namespace

KoszulReport koszul_test(const DimensionProfile& h_a, const DimensionProfile& h_dual, int d_max)
{
    if (static_cast<int>(h_a.dims.size()) <= d_max || static_cast<int>(h_dual.dims.size()) <= d_max)
        throw std::invalid_argument("koszul_test: profiles shorter than d_max");

    KoszulReport rep;
    rep.h_a = h_a;
    rep.h_dual = h_dual;
    rep.defects.assign(static_cast<size_t>(d_max) + 1, 0);
    for (int k = 0; k <= d_max; ++k) {
        long long acc = (k == 0) ? -1 : 0;
        for (int j = 0; j <= k; ++j) {
            const long long term = profile_at(h_dual, k - j) * profile_at(h_a, j);
            acc += (j % 2 == 0) ? term : -term;
        }
        rep.defects[static_cast<size_t>(k)] = acc;
        if (k >= 1 && acc != 0 && !rep.first_failure)
            rep.first_failure = k;
    }
    return rep;
}

DimensionProfile series_inverse_alternating(const DimensionProfile& h_a, int d_max)
{
    if (h_a.dims.empty() || h_a.dims[0] != 1)
        throw std::invalid_argument("series_inverse_alternating: profile must start with 1");

    DimensionProfile b;
    b.dims.assign(static_cast<size_t>(d_max) + 1, 0);
    b.dims[0] = 1;
    for (int k = 1; k <= d_max; ++k) {
        long long acc = 0;
        for (int j = 1; j <= k; ++j) {
            const long long term = profile_at(h_a, j) * b.dims[static_cast<size_t>(k - j)];
            acc += (j % 2 == 1) ? term : -term;
        }
        b.dims[static_cast<size_t>(k)] = acc;
    }
    return b;
}

QuadraticSpace apply_linear_change(const QuadraticSpace& r, const MatrixQ& m)
{
    const int n = r.dim_v;
    if (m.rows() != n || m.cols() != n)
        throw std::invalid_argument("apply_linear_change: matrix shape mismatch");
    if (rank(m) != n)
        throw std::invalid_argument("apply_linear_change: matrix is singular");

    // column view of m: images[a] lists (i, m[i][a])
    std::vector<SparseRow> col(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (const auto& [a, v] : m.row(i))
            col[static_cast<size_t>(a)].emplace_back(i, v);

    MatrixQ rows(0, n * n);
    for (int t = 0; t < r.dim(); ++t) {
        std::map<int, Rational> acc;
        for (const auto& [c, q] : r.basis.row(t)) {
            const int a = c / n, b = c % n;
            for (const auto& [i, mia] : col[static_cast<size_t>(a)])
                for (const auto& [j, mjb] : col[static_cast<size_t>(b)]) {
                    Rational& slot = acc[word_col(n, i, j)];
                    slot += mia * q * mjb;
                }
        }
        SparseRow row;
        for (auto& [c, v] : acc)
            if (v != 0)
                row.emplace_back(c, std::move(v));
        rows.append_row(std::move(row));
    }

    const RrefResult canon = rref(rows);
    QuadraticSpace out;
    out.dim_v = n;
    out.basis = MatrixQ(canon.rank, n * n);
    for (int i = 0; i < canon.rank; ++i)
        out.basis.set_row(i, canon.rref.row(i));
    return out;
}

bool check_quadratic_gb(const QuadraticSpace& r, const MonomialOrder& ord)
{
    if (ord.nvars() != r.dim_v)
        throw std::invalid_argument("check_quadratic_gb: order size mismatch");
    const std::vector<Poly> rels = space_to_polys(r);
    const RewriteSystem rs = truncated_buchberger(rels, ord, 3);
    for (const auto& [lw, tail] : rs.rules)
        if (degree(lw) == 3)
            return false;
    // All rules quadratic; confirm the degree-3 count against the span oracle.
    const DimensionProfile prof = dimension_profile(rs, 3);
    const long long words = static_cast<long long>(r.dim_v) * r.dim_v * r.dim_v;
    return prof.dims[3] == words - ideal_dim_bruteforce(rels, r.dim_v, 3);
}

}  // namespace qalg
