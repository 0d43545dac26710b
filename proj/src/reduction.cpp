#include "qalg/reduction.hpp"

#include <algorithm>
#include <stdexcept>

namespace qalg {

Substitution eliminate_linear(const Presentation& p, const MonomialOrder& ord)
{
    const int nvars = static_cast<int>(p.variables.size());
    if (ord.nvars() != nvars)
        throw std::invalid_argument("eliminate_linear: order size mismatch");

    // Column c holds the variable of precedence rank c, so RREF pivots fall
    // on the greatest variables and those get eliminated.
    MatrixQ m(static_cast<int>(p.linear_relations.size()), nvars);
    for (size_t i = 0; i < p.linear_relations.size(); ++i) {
        const Poly& rel = p.linear_relations[i];
        int deg = 0;
        if (!rel.is_homogeneous(&deg) || (deg != 1 && deg != -1))
            throw std::invalid_argument("eliminate_linear: relation not homogeneous linear");
        SparseRow row;
        for (const auto& [w, c] : rel.terms())
            row.emplace_back(ord.rank_of(w[0]), c);
        std::sort(row.begin(), row.end());
        m.set_row(static_cast<int>(i), std::move(row));
    }

    const RrefResult r = rref(m);

    std::vector<bool> is_pivot(static_cast<size_t>(nvars), false);
    for (int c : r.pivot_cols)
        is_pivot[static_cast<size_t>(c)] = true;

    Substitution s;
    for (int c = 0; c < nvars; ++c)
        if (!is_pivot[static_cast<size_t>(c)])
            s.kept.push_back(ord.precedence()[static_cast<size_t>(c)]);
    for (int i = 0; i < r.rank; ++i) {
        const SparseRow& row = r.rref.row(i);
        const VarId pivot_var = ord.precedence()[static_cast<size_t>(row.front().first)];
        Poly expr;
        for (size_t t = 1; t < row.size(); ++t)
            expr.add_term(Word{ord.precedence()[static_cast<size_t>(row[t].first)]}, -row[t].second);
        s.eliminated.emplace(pivot_var, std::move(expr));
    }
    return s;
}

QuadraticSpace reduce_quadratics(const Presentation& p, const Substitution& s)
{
    const int k = static_cast<int>(s.kept.size());
    std::map<VarId, int> new_index;
    for (int i = 0; i < k; ++i)
        new_index.emplace(s.kept[static_cast<size_t>(i)], i);

    // Degree-1 image of every original variable, over the new indices.
    std::vector<Poly> image(p.variables.size());
    for (size_t v = 0; v < p.variables.size(); ++v) {
        auto el = s.eliminated.find(static_cast<VarId>(v));
        if (el == s.eliminated.end()) {
            auto it = new_index.find(static_cast<VarId>(v));
            if (it == new_index.end())
                throw std::invalid_argument("reduce_quadratics: substitution does not cover variable");
            image[v] = Poly::var(it->second);
        }
        else {
            for (const auto& [w, c] : el->second.terms())
                image[v].add_term(Word{new_index.at(w[0])}, c);
        }
    }

    MatrixQ rows(0, k * k);
    for (const Poly& rel : p.quadratic_relations) {
        Poly sub;
        for (const auto& [w, c] : rel.terms()) {
            if (w.size() != 2)
                throw std::invalid_argument("reduce_quadratics: relation not quadratic");
            sub += c * poly_mul(image[static_cast<size_t>(w[0])], image[static_cast<size_t>(w[1])]);
        }
        if (sub.is_zero())
            continue;  // relation became trivial under the substitution
        int deg = 0;
        if (!sub.is_homogeneous(&deg) || deg != 2)
            throw std::runtime_error("reduce_quadratics: substituted relation not quadratic");
        rows.append_row(poly_to_row(k, sub));
    }

    const RrefResult r = rref(rows);
    QuadraticSpace space;
    space.dim_v = k;
    space.basis = MatrixQ(r.rank, k * k);
    for (int i = 0; i < r.rank; ++i)
        space.basis.set_row(i, r.rref.row(i));
    return space;
}

Presentation reduced_presentation(const Presentation& p, const Substitution& s)
{
    Presentation out;
    out.n = p.n;
    for (VarId v : s.kept)
        out.variables.push_back(p.variables.at(static_cast<size_t>(v)));
    out.quadratic_relations = space_to_polys(reduce_quadratics(p, s));
    return out;
}

SparseRow poly_to_row(int dim_v, const Poly& p)
{
    SparseRow row;
    for (const auto& [w, c] : p.terms()) {
        if (w.size() != 2 || w[0] < 0 || w[0] >= dim_v || w[1] < 0 || w[1] >= dim_v)
            throw std::invalid_argument("poly_to_row: not a quadratic word in range");
        row.emplace_back(word_col(dim_v, w[0], w[1]), c);
    }
    std::sort(row.begin(), row.end());
    return row;
}

Poly row_to_poly(int dim_v, const SparseRow& row)
{
    Poly p;
    for (const auto& [col, c] : row)
        p.add_term(Word{col / dim_v, col % dim_v}, c);
    return p;
}

std::vector<Poly> space_to_polys(const QuadraticSpace& r)
{
    std::vector<Poly> out;
    out.reserve(static_cast<size_t>(r.dim()));
    for (int i = 0; i < r.dim(); ++i)
        out.push_back(row_to_poly(r.dim_v, r.basis.row(i)));
    return out;
}

QuadraticSpace space_from_polys(int dim_v, const std::vector<Poly>& quadratics)
{
    MatrixQ rows(0, dim_v * dim_v);
    for (const Poly& q : quadratics)
        if (!q.is_zero())
            rows.append_row(poly_to_row(dim_v, q));
    const RrefResult r = rref(rows);
    QuadraticSpace space;
    space.dim_v = dim_v;
    space.basis = MatrixQ(r.rank, dim_v * dim_v);
    for (int i = 0; i < r.rank; ++i)
        space.basis.set_row(i, r.rref.row(i));
    return space;
}

bool space_contains(const QuadraticSpace& r, const Poly& p)
{
    RrefResult rr;
    rr.rref = r.basis;
    rr.rank = r.dim();
    for (int i = 0; i < r.dim(); ++i)
        rr.pivot_cols.push_back(r.basis.row(i).front().first);
    return in_row_space(rr, poly_to_row(r.dim_v, p));
}

}  // namespace qalg
