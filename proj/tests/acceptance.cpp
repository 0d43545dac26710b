// Acceptance suite: one line per criterion, exact integer equality
// throughout, wall-clock budgets enforced where stated. Exits nonzero if any
// criterion fails.

#include "qalg/duality.hpp"
#include "qalg/gb.hpp"
#include "qalg/io.hpp"
#include "qalg/keel.hpp"
#include "qalg/koszul.hpp"
#include "qalg/parallel.hpp"

#include "test_util.hpp"

#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

using namespace qalg;
using namespace qalg::testutil;

namespace {

using clock_type = std::chrono::steady_clock;

int g_failures = 0;

double seconds_since(clock_type::time_point start)
{
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

void report(int id, const std::string& label, bool ok, double secs,
            const std::vector<std::string>& notes = {})
{
    std::ostringstream line;
    line << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << " - " << label << " ["
         << std::fixed << std::setprecision(2) << secs << " s]";
    std::cout << line.str() << "\n";
    for (const std::string& note : notes)
        std::cout << "    " << note << "\n";
    if (!ok)
        ++g_failures;
}

std::string bracketed(const std::vector<long long>& v)
{
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < v.size(); ++i) {
        if (i)
            os << ',';
        os << v[i];
    }
    os << ']';
    return os.str();
}

MatrixQ linear_matrix(const Presentation& p)
{
    MatrixQ m(static_cast<int>(p.linear_relations.size()),
              static_cast<int>(p.variables.size()));
    for (size_t i = 0; i < p.linear_relations.size(); ++i)
        for (const auto& [w, c] : p.linear_relations[i].terms())
            m.set(static_cast<int>(i), w[0], c);
    return m;
}

DimensionProfile profile_of(const QuadraticSpace& space, int d_max)
{
    const RewriteSystem rs = truncated_buchberger(
        space_to_polys(space), MonomialOrder::identity(space.dim_v), std::max(d_max, 2));
    return dimension_profile(rs, d_max);
}

void criterion_1()
{
    const auto start = clock_type::now();
    std::vector<std::string> notes;
    bool ok = true;

    const Presentation p5 = keel::presentation(5);
    ok &= p5.variables.size() == 10;
    ok &= p5.linear_relations.size() == 10;
    ok &= rank(linear_matrix(p5)) == 5;

    const Presentation p6 = keel::presentation(6, true);
    ok &= p6.variables.size() == 25;
    ok &= p6.linear_relations.size() == 30;
    ok &= rank(linear_matrix(p6)) == 9;

    const Substitution s6 = eliminate_linear(p6, order_by_names(p6, kHexagonOrder));
    std::string eliminated;
    for (const auto& [v, expr] : s6.eliminated)
        eliminated += p6.variables[static_cast<size_t>(v)];
    std::sort(eliminated.begin(), eliminated.end());
    ok &= eliminated == "ghijklmno";
    notes.push_back("n=5: 10 generators, 10 linear relations of rank 5; n=6: 25 generators, "
                    "30 linear relations of rank 9, eliminating {" +
                    eliminated + "}");

    const double secs = seconds_since(start);
    ok &= secs < 1.0;
    report(1, "generator and linear-relation counts with ranks, under 1 s", ok, secs, notes);
}

void criterion_2()
{
    const auto t5 = clock_type::now();
    const DimensionProfile h5 = profile_of(reduced_space(5, kPentagonOrder), 4);
    const double s5 = seconds_since(t5);

    const auto t6 = clock_type::now();
    const DimensionProfile h6 = profile_of(reduced_space(6, kHexagonOrder), 4);
    const double s6 = seconds_since(t6);

    const bool ok = h5.dims == std::vector<long long>{1, 5, 1, 0, 0} &&
                    h6.dims == std::vector<long long>{1, 16, 16, 1, 0} && s5 < 10.0 &&
                    s6 < 10.0;
    report(2, "primal Hilbert prefixes [1,5,1,0,0] and [1,16,16,1,0], under 10 s each", ok,
           s5 + s6,
           {"n=5 " + bracketed(h5.dims) + ", n=6 " + bracketed(h6.dims)});
}

void criterion_3()
{
    const auto start = clock_type::now();
    std::vector<std::string> notes;
    bool ok = true;

    const QuadraticSpace space5 = reduced_space(5, kPentagonOrder);
    const QuadraticSpace dual5 = quadratic_dual(space5);
    ok &= space5.dim() == 24;
    ok &= dual5.dim() == 1;
    ok &= space_contains(dual5, pentagon_dual_relation());
    notes.push_back("n=5: relation space dimension 24, dual dimension 1 containing the "
                    "displayed relation");

    const QuadraticSpace dual6 = quadratic_dual(reduced_space(6, kHexagonOrder));
    ok &= dual6.dim() == 16;
    notes.push_back("n=6: dual dimension 16");

    const double secs = seconds_since(start);
    ok &= secs < 5.0;
    report(3, "dual space dimensions and the pentagon dual relation, under 5 s", ok, secs,
           notes);
}

void criterion_4()
{
    const auto start = clock_type::now();
    std::vector<std::string> notes;

    std::vector<std::string> kept;
    const QuadraticSpace space = reduced_space(6, kHexagonOrder, &kept);
    const QuadraticSpace dual = quadratic_dual(space);
    const auto rels = space_to_polys(dual);

    const RewriteSystem rs = truncated_buchberger(rels, MonomialOrder::identity(16), 3);
    const DimensionProfile h_dual = dimension_profile(rs, 3);
    const long long oracle_a3 = 4096 - ideal_dim_bruteforce(rels, 16, 3);

    const DimensionProfile h_a = profile_of(space, 3);
    const KoszulReport rep = koszul_test(h_a, h_dual, 3);
    const KoszulVerdict verdict =
        rep.first_failure ? KoszulVerdict::not_koszul : KoszulVerdict::undetermined;

    const bool ok = h_dual.dims == std::vector<long long>{1, 16, 240, 3584} &&
                    rep.defects == std::vector<long long>{0, 0, 0, -1} &&
                    verdict == KoszulVerdict::not_koszul;

    notes.push_back("computed h_dual " + bracketed(h_dual.dims) + " (span oracle agrees: " +
                    std::to_string(oracle_a3) + "), defects " + bracketed(rep.defects) +
                    ", verdict " + to_string(verdict));
    if (!ok) {
        // Locate the discrepancy: the sixteen-relation comparison list from
        // the original computation spans a different space; its final
        // relation is missing its fy and yf terms and is not orthogonal to
        // the relation space. That defective list reproduces 3584 exactly.
        const auto idx = letter_index(kept);
        std::vector<Poly> variant;
        for (const std::string& text : {
                 "ef+fe+de+ed+cf+fc+cd+dc+be+eb+bc+cb+af+fa+ad+da+ab+ba-ff-ee-dd-cc-bb-aa",
                 "bu+ub+au+ua-2uu-ab-ba",
                 "bw+wb+bp+pb+av+va+at+ta-ww-vv-tt-pp+ab+ba-bb-aa",
                 "cp+pc+bp+pb-2pp-bc-cb",
                 "cx+xc+cq+qc-bp-pb-av-va-au-ua-at-ta-xx+vv+uu+tt-qq+pp+bc+cb-cc+aa",
                 "dq+qd+cq+qc-2qq-cd-dc",
                 "dr+rd-cq-qc+au+ua+at+ta-uu-tt-rr+qq+cd+dc+ad+da-dd-aa",
                 "dv+vd+av+va-2vv-ad-da",
                 "er+re+cq+qc-au-ua-at-ta+uu+tt-rr-qq-de-ed-cd-dc-ad-da+dd+aa",
                 "es+se-cq-qc+bp+pb+at+ta-tt-ss+qq-pp+de+ed+cd+dc+be+eb+ad+da+ab+ba-ee-dd-bb-aa",
                 "ew+we-bp-pb-av-va-at-ta-ww+vv+tt+pp-be-eb-ab-ba+bb+aa",
                 "fs+sf+cq+qc-bp-pb-at-ta+tt-ss-qq+pp+cf+fc+bc+cb+af+fa-ff-cc",
                 "ft+tf+at+ta-2tt-af-fa",
                 "fx+xf-cq-qc+bp+pb+av+va+au+ua+at+ta-xx-vv-uu-tt+qq-pp-cf-fc-bc-cb+cc-aa",
                 "ey+ye+cy+yc+ay+ya+av+va+au+ua+at+ta-yy-vv-uu-tt-ee-cc-2aa",
                 "dy+yd+by+yb-av-va-au-ua-at-ta-yy+vv+uu+tt-ff-dd-bb+aa",
             })
            variant.push_back(parse_letter_relation(text, idx));
        int inside = 0;
        for (const Poly& q : variant)
            if (space_contains(dual, q))
                ++inside;
        const RewriteSystem vrs =
            truncated_buchberger(variant, MonomialOrder::identity(16), 3);
        const DimensionProfile vprof = dimension_profile(vrs, 3);
        notes.push_back("expected prefix reproduces only from the transcribed comparison "
                        "list (" +
                        std::to_string(inside) +
                        "/16 of its relations orthogonal to the relation space; its last "
                        "relation lacks the fy+yf terms): that list gives " +
                        bracketed(vprof.dims));
        notes.push_back("the computed 3585 equals the alternating series inverse of " +
                        bracketed(h_a.dims) + ", so the product test finds no defect");
    }

    const double secs = seconds_since(start);
    report(4, "hexagon dual prefix [1,16,240,3584] with defect -1 and verdict not_koszul, "
              "under 60 s",
           ok && secs < 60.0, secs, notes);
}

void criterion_5()
{
    const auto start = clock_type::now();
    const QuadraticSpace space = reduced_space(5, kPentagonOrder);
    const DimensionProfile h_a = profile_of(space, 3);
    const DimensionProfile h_dual = profile_of(quadratic_dual(space), 3);

    DimensionProfile base;
    base.dims = {1, 5, 1};
    const DimensionProfile predicted = series_inverse_alternating(base, 3);
    const KoszulReport rep = koszul_test(h_a, h_dual, 3);

    const bool ok = h_dual.dims == std::vector<long long>{1, 5, 24, 115} &&
                    predicted.dims == h_dual.dims && !rep.first_failure;
    report(5, "pentagon dual prefix [1,5,24,115] matches the series inverse; product test "
              "passes",
           ok, seconds_since(start), {"h_dual " + bracketed(h_dual.dims)});
}

void criterion_6()
{
    const auto start = clock_type::now();
    bool ok = true;
    std::vector<std::string> notes;

    const QuadraticSpace p5 = reduced_space(5, kPentagonOrder);
    const QuadraticSpace d5 = quadratic_dual(p5);
    const QuadraticSpace p6 = reduced_space(6, kHexagonOrder);
    const QuadraticSpace d6 = quadratic_dual(p6);

    struct Case {
        const char* name;
        const QuadraticSpace* space;
        int d_max;
    };
    for (const Case& c : {Case{"n=5 primal", &p5, 4}, Case{"n=5 dual", &d5, 3},
                          Case{"n=6 primal", &p6, 3}, Case{"n=6 dual", &d6, 3}}) {
        const auto rels = space_to_polys(*c.space);
        const DimensionProfile prof = profile_of(*c.space, c.d_max);
        for (int d = 2; d <= c.d_max; ++d) {
            long long words = 1;
            for (int i = 0; i < d; ++i)
                words *= c.space->dim_v;
            const long long oracle = words - ideal_dim_bruteforce(rels, c.space->dim_v, d);
            if (prof.dims[static_cast<size_t>(d)] != oracle) {
                ok = false;
                notes.push_back(std::string(c.name) + " degree " + std::to_string(d) +
                                ": rewriting " +
                                std::to_string(prof.dims[static_cast<size_t>(d)]) +
                                " vs oracle " + std::to_string(oracle));
            }
        }
    }
    if (ok)
        notes.push_back("rewriting and span-oracle dimensions agree on all four "
                        "presentations at every tested degree");
    report(6, "oracle equivalence across the four pipeline presentations", ok,
           seconds_since(start), notes);
}

void criterion_7()
{
    const auto start = clock_type::now();
    auto x = [](int i) { return Poly::var(((i % 5) + 5) % 5); };
    std::vector<Poly> family;
    for (int i = 0; i < 5; ++i)
        family.push_back(poly_mul(x(i), x(i + 1)));
    for (int i = 0; i < 5; ++i) {
        const Poly diag = x(i) + x(i + 2) - x(i + 1);
        for (int off : {0, -1, 2, 3})
            family.push_back(poly_mul(diag, x(i + off)));
    }
    const QuadraticSpace span = space_from_polys(5, family);
    bool ok = true;
    for (int i = 0; i < 5; ++i) {
        const Poly product =
            poly_mul(x(i) + x(i + 2) - x(i + 1), x(i - 3) + x(i - 1) - x(i - 2));
        ok &= space_contains(span, product);
    }
    report(7, "diagonal-by-diagonal products lie in the span of the simpler families", ok,
           seconds_since(start));
}

void criterion_8()
{
    const auto start = clock_type::now();
    const QuadraticSpace dual = quadratic_dual(reduced_space(5, kPentagonOrder));

    // frozen fixture: identity change, precedence x1 > ... > x5
    const bool identity_outcome = check_quadratic_gb(dual, MonomialOrder::identity(5));

    // recorded certificate: x4 -> x4 + x2, precedence x2 > x1 > x3 > x4 > x5
    MatrixQ m(5, 5);
    for (int i = 0; i < 5; ++i)
        m.set(i, i, Rational(1));
    m.set(1, 3, Rational(1));
    const QuadraticSpace moved = apply_linear_change(dual, m);
    const bool certified =
        check_quadratic_gb(moved, MonomialOrder(std::vector<VarId>{1, 0, 2, 3, 4}));

    const bool ok = certified && !identity_outcome;
    report(8, "recorded change of variables certifies the pentagon dual; identity change "
              "does not",
           ok, seconds_since(start),
           {std::string("identity fixture: ") + (identity_outcome ? "true" : "false") +
            ", recorded certificate: " + (certified ? "true" : "false")});
}

void criterion_9()
{
    const auto start = clock_type::now();
    std::mt19937 rng(20240801);
    bool ok = true;
    std::vector<std::string> notes;

    auto random_rels = [&](int nvars, int nrels) {
        std::uniform_int_distribution<int> var(0, nvars - 1);
        std::uniform_int_distribution<int> coef(-3, 3);
        std::vector<Poly> rels;
        for (int i = 0; i < nrels; ++i) {
            Poly p;
            for (int t = 0; t < 3; ++t)
                p.add_term(Word{var(rng), var(rng)}, Rational(coef(rng)));
            if (!p.is_zero())
                rels.push_back(std::move(p));
        }
        return rels;
    };

    for (int trial = 0; trial < 40 && ok; ++trial) {
        const int nvars = 2 + static_cast<int>(rng() % 5);  // up to 6 variables
        const int nrels = 1 + static_cast<int>(rng() % 10);
        std::vector<Poly> rels = random_rels(nvars, nrels);

        // duality involution
        const QuadraticSpace r = space_from_polys(nvars, rels);
        const QuadraticSpace dual = quadratic_dual(r);
        if (r.dim() + dual.dim() != nvars * nvars || !check_double_dual(r)) {
            ok = false;
            notes.push_back("duality involution failed at trial " + std::to_string(trial));
        }

        // RREF determinism under row shuffles
        MatrixQ m(static_cast<int>(rels.size()), nvars * nvars);
        for (size_t i = 0; i < rels.size(); ++i)
            m.set_row(static_cast<int>(i), poly_to_row(nvars, rels[i]));
        const RrefResult base = rref(m);
        std::shuffle(rels.begin(), rels.end(), rng);
        MatrixQ m2(static_cast<int>(rels.size()), nvars * nvars);
        for (size_t i = 0; i < rels.size(); ++i)
            m2.set_row(static_cast<int>(i), poly_to_row(nvars, rels[i]));
        if (!(rref(m2).rref == base.rref)) {
            ok = false;
            notes.push_back("RREF depended on row order at trial " + std::to_string(trial));
        }

        // rewrite-system uniqueness and normal-form idempotence to degree 4
        const MonomialOrder ord = MonomialOrder::identity(nvars);
        const RewriteSystem rs = truncated_buchberger(rels, ord, 4);
        std::shuffle(rels.begin(), rels.end(), rng);
        if (!(truncated_buchberger(rels, ord, 4).rules == rs.rules)) {
            ok = false;
            notes.push_back("rewrite system depended on input order at trial " +
                            std::to_string(trial));
        }
        std::uniform_int_distribution<int> var(0, nvars - 1);
        Poly probe;
        for (int t = 0; t < 5; ++t)
            probe.add_term(Word{var(rng), var(rng), var(rng), var(rng)}, Rational(t - 2));
        const Poly nf = normal_form(probe, rs);
        if (!(normal_form(nf, rs) == nf)) {
            ok = false;
            notes.push_back("normal form not idempotent at trial " + std::to_string(trial));
        }
    }
    if (ok)
        notes.push_back("40 randomized instances, all properties held");
    report(9, "randomized property suites (duality, RREF, normal forms, uniqueness)", ok,
           seconds_since(start), notes);
}

}  // namespace

int main()
{
    std::cout << "acceptance suite (exact arithmetic, wall-clock budgets enforced)\n";
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    if (g_failures == 0)
        std::cout << "all criteria passed\n";
    else
        std::cout << g_failures << " criterion(s) failed\n";
    return g_failures == 0 ? 0 : 1;
}
