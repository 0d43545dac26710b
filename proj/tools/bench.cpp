// Benchmark of the OpenMP kernels against the serial reference
// implementations. Each case checks that the two paths return identical
// results before reporting the timings.

#include "qalg/duality.hpp"
#include "qalg/gb.hpp"
#include "qalg/keel.hpp"
#include "qalg/matrix.hpp"
#include "qalg/parallel.hpp"
#include "qalg/reduction.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace qalg;

namespace {

using clock_type = std::chrono::steady_clock;

template <typename F>
double time_once(F&& f)
{
    const auto t0 = clock_type::now();
    f();
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

void row(const char* name, double serial, double parallel, bool identical)
{
    std::printf("%-36s %9.3f s %9.3f s   x%.2f   %s\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, identical ? "identical" : "MISMATCH");
}

MatrixQ random_matrix(std::mt19937& rng, int rows, int cols, int density_pct)
{
    std::uniform_int_distribution<int> pct(0, 99);
    std::uniform_int_distribution<int> num(-9, 9);
    MatrixQ m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        SparseRow r;
        for (int j = 0; j < cols; ++j) {
            if (pct(rng) >= density_pct)
                continue;
            const int v = num(rng);
            if (v != 0)
                r.emplace_back(j, Rational(v));
        }
        m.set_row(i, std::move(r));
    }
    return m;
}

QuadraticSpace hexagon_space(bool dual_side)
{
    const Presentation p = keel::presentation(6, true);
    const std::vector<std::string> names = {"g", "h", "i", "j", "k", "l", "m", "n", "o",
                                            "a", "b", "c", "d", "e", "f", "p", "q", "r",
                                            "s", "t", "u", "v", "w", "x", "y"};
    std::vector<VarId> prec;
    for (const std::string& nm : names)
        prec.push_back(static_cast<VarId>(
            std::find(p.variables.begin(), p.variables.end(), nm) - p.variables.begin()));
    const QuadraticSpace space =
        reduce_quadratics(p, eliminate_linear(p, MonomialOrder(std::move(prec))));
    return dual_side ? quadratic_dual(space) : space;
}

}  // namespace

int main()
{
    std::printf("threads available: %d\n", hardware_threads());
    std::printf("%-36s %11s %11s %7s\n", "kernel", "serial", "openmp", "speedup");

    {
        // exact rational elimination on random input grows coefficients
        // quickly, so this stays deliberately small
        std::mt19937 rng(1);
        const MatrixQ m = random_matrix(rng, 160, 200, 6);
        RrefResult a, b;
        const double ts = time_once([&] { a = rref_serial(m); });
        const double tp = time_once([&] { b = rref_parallel(m); });
        row("rref, random sparse 160x200", ts, tp, a.rref == b.rref);
    }

    {
        const QuadraticSpace primal = hexagon_space(false);
        const auto rels = space_to_polys(primal);
        long long a = 0, b = 0;
        set_parallel(false);
        const double ts = time_once([&] { a = ideal_dim_bruteforce(rels, 16, 3); });
        set_parallel(true);
        const double tp = time_once([&] { b = ideal_dim_bruteforce(rels, 16, 3); });
        row("span oracle, hexagon primal deg 3", ts, tp, a == b);
    }

    {
        const QuadraticSpace dual = hexagon_space(true);
        const auto rels = space_to_polys(dual);
        long long a = 0, b = 0;
        set_parallel(false);
        const double ts = time_once([&] { a = ideal_dim_bruteforce(rels, 16, 3); });
        set_parallel(true);
        const double tp = time_once([&] { b = ideal_dim_bruteforce(rels, 16, 3); });
        row("span oracle, hexagon dual deg 3", ts, tp, a == b);
    }

    {
        const QuadraticSpace dual = hexagon_space(true);
        const auto rels = space_to_polys(dual);
        const MonomialOrder ord = MonomialOrder::identity(16);
        RewriteSystem a, b;
        set_parallel(false);
        const double ts = time_once([&] { a = truncated_buchberger(rels, ord, 3); });
        set_parallel(true);
        const double tp = time_once([&] { b = truncated_buchberger(rels, ord, 3); });
        row("rewriting closure, hexagon dual", ts, tp, a.rules == b.rules);
    }

    {
        const QuadraticSpace primal = hexagon_space(false);
        const auto rels = space_to_polys(primal);
        const MonomialOrder ord = MonomialOrder::identity(16);
        RewriteSystem a, b;
        set_parallel(false);
        const double ts = time_once([&] { a = truncated_buchberger(rels, ord, 4); });
        set_parallel(true);
        const double tp = time_once([&] { b = truncated_buchberger(rels, ord, 4); });
        row("rewriting closure, hexagon primal d4", ts, tp, a.rules == b.rules);
    }

    return 0;
}
