// qalg: generate boundary presentations, eliminate linear relations, take
// quadratic duals, and compute Hilbert prefixes and the Koszulity test.

#include "qalg/duality.hpp"
#include "qalg/gb.hpp"
#include "qalg/io.hpp"
#include "qalg/keel.hpp"
#include "qalg/koszul.hpp"
#include "qalg/parallel.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace qalg;

namespace {

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

void emit(const Presentation& p, const std::string& out_path)
{
    if (out_path.empty())
        std::cout << dump_json(presentation_to_json(p));
    else
        save_presentation(p, out_path);
}

MonomialOrder order_from_flag(const Presentation& p, const std::string& order_csv)
{
    const int nvars = static_cast<int>(p.variables.size());
    if (order_csv.empty()) {
        // Keel files fall back to the diagonal-first precedence, anything
        // else to the declaration order.
        if (p.n >= 4 &&
            keel::generators(p.n).size() == static_cast<size_t>(nvars))
            return MonomialOrder(keel::default_elimination_precedence(p.n));
        return MonomialOrder::identity(nvars);
    }
    std::vector<VarId> prec;
    std::stringstream ss(order_csv);
    std::string name;
    while (std::getline(ss, name, ',')) {
        const auto it = std::find(p.variables.begin(), p.variables.end(), name);
        if (it == p.variables.end())
            throw std::invalid_argument("--order names unknown variable '" + name + "'");
        prec.push_back(static_cast<VarId>(it - p.variables.begin()));
    }
    if (prec.size() != static_cast<size_t>(nvars))
        throw std::invalid_argument("--order must list every variable exactly once");
    return MonomialOrder(std::move(prec));  // throws if not a permutation
}

Presentation load_reduced(const std::string& in_path, const char* cmd)
{
    Presentation p = load_presentation(in_path);
    if (!p.linear_relations.empty())
        throw std::invalid_argument(std::string(cmd) +
                                    ": input still has linear relations; run reduce first");
    return p;
}

int run_keel(int n, bool alias, const std::string& out_path)
{
    const Presentation p = keel::presentation(n, alias);
    emit(p, out_path);
    std::ostream& os = out_path.empty() ? std::cerr : std::cout;
    os << "generators: " << p.variables.size() << "\n"
       << "linear relations: " << p.linear_relations.size() << "\n"
       << "quadratic relations: " << p.quadratic_relations.size() << "\n";
    return 0;
}

int run_reduce(const std::string& in_path, const std::string& order_csv,
               const std::string& out_path)
{
    const Presentation p = load_presentation(in_path);
    if (p.linear_relations.empty()) {
        // already reduced: pass through unchanged
        const QuadraticSpace space =
            space_from_polys(static_cast<int>(p.variables.size()), p.quadratic_relations);
        emit(p, out_path);
        std::ostream& os = out_path.empty() ? std::cerr : std::cout;
        os << "kept variables: " << p.variables.size() << "\n"
           << "relation space dimension: " << space.dim() << "\n";
        return 0;
    }

    const MonomialOrder ord = order_from_flag(p, order_csv);
    const Substitution s = eliminate_linear(p, ord);
    const QuadraticSpace space = reduce_quadratics(p, s);

    Presentation out;
    out.n = p.n;
    for (VarId v : s.kept)
        out.variables.push_back(p.variables.at(static_cast<size_t>(v)));
    out.quadratic_relations = space_to_polys(space);
    emit(out, out_path);

    std::ostream& os = out_path.empty() ? std::cerr : std::cout;
    os << "kept variables: " << out.variables.size() << "\n"
       << "relation space dimension: " << space.dim() << "\n";
    return 0;
}

int run_dual(const std::string& in_path, const std::string& out_path)
{
    const Presentation p = load_reduced(in_path, "dual");
    const int nvars = static_cast<int>(p.variables.size());
    const QuadraticSpace dual = quadratic_dual(space_from_polys(nvars, p.quadratic_relations));

    Presentation out;
    out.n = p.n;
    out.variables = p.variables;
    out.quadratic_relations = space_to_polys(dual);
    emit(out, out_path);

    std::ostream& os = out_path.empty() ? std::cerr : std::cout;
    os << "dual relations: " << dual.dim() << "\n";
    return 0;
}

// default depth: the pentagon computations are decisive at degree 4, the
// hexagon ones at degree 3
int default_depth(const Presentation& p, int d_max)
{
    if (d_max >= 0)
        return d_max;
    return p.n == 5 ? 4 : 3;
}

int run_hilbert(const std::string& in_path, int d_max, bool oracle,
                const std::string& order_csv)
{
    const Presentation p = load_reduced(in_path, "hilbert");
    d_max = default_depth(p, d_max);
    const int nvars = static_cast<int>(p.variables.size());
    const QuadraticSpace space = space_from_polys(nvars, p.quadratic_relations);
    const MonomialOrder ord = order_csv.empty() ? MonomialOrder::identity(nvars)
                                                : order_from_flag(p, order_csv);

    if (oracle && d_max >= 2)
        bruteforce_guard(nvars, d_max);  // fail before the long computation

    const RewriteSystem rs =
        truncated_buchberger(space_to_polys(space), ord, std::max(d_max, 2));
    const DimensionProfile prof = dimension_profile(rs, d_max);
    std::cout << bracketed(prof.dims) << "\n";

    if (oracle) {
        std::vector<long long> odims = {1, nvars};
        const auto rels = space_to_polys(space);
        for (int d = 2; d <= d_max; ++d) {
            long long words = 1;
            for (int i = 0; i < d; ++i)
                words *= nvars;
            odims.push_back(words - ideal_dim_bruteforce(rels, nvars, d));
        }
        if (d_max < 1)
            odims.resize(static_cast<size_t>(d_max) + 1);
        std::cout << "oracle " << bracketed(odims) << "\n";
        if (odims != prof.dims) {
            std::cerr << "hilbert: oracle disagrees with the rewriting engine\n";
            return 1;
        }
    }
    return 0;
}

int run_koszul_check(const std::string& in_path, int d_max, const std::string& change_path,
                     const std::string& order_csv, const std::string& out_path)
{
    const Presentation p = load_reduced(in_path, "koszul-check");
    d_max = default_depth(p, d_max);
    const int nvars = static_cast<int>(p.variables.size());
    const QuadraticSpace space = space_from_polys(nvars, p.quadratic_relations);
    const QuadraticSpace dual = quadratic_dual(space);
    const MonomialOrder ord = order_csv.empty() ? MonomialOrder::identity(nvars)
                                                : order_from_flag(p, order_csv);

    const int gb_depth = std::max(d_max, 2);
    const DimensionProfile h_a =
        dimension_profile(truncated_buchberger(space_to_polys(space), ord, gb_depth), d_max);
    const DimensionProfile h_dual =
        dimension_profile(truncated_buchberger(space_to_polys(dual), ord, gb_depth), d_max);

    const KoszulReport rep = koszul_test(h_a, h_dual, d_max);

    KoszulVerdict verdict = KoszulVerdict::undetermined;
    if (rep.first_failure) {
        verdict = KoszulVerdict::not_koszul;
    }
    else {
        bool certified = check_quadratic_gb(dual, ord);
        if (!certified && !change_path.empty())
            certified = check_quadratic_gb(apply_linear_change(dual, load_matrix(change_path)), ord);
        if (certified)
            verdict = KoszulVerdict::pbw_koszul;
    }

    const nlohmann::json j = report_to_json(rep, verdict);
    if (out_path.empty())
        std::cout << dump_json(j);
    else
        save_json(j, out_path);

    std::ostream& os = out_path.empty() ? std::cerr : std::cout;
    os << "h_a " << bracketed(h_a.dims) << "\n"
       << "h_dual " << bracketed(h_dual.dims) << "\n"
       << "defects " << bracketed(rep.defects) << "\n"
       << "verdict: " << to_string(verdict);
    if (rep.first_failure)
        os << " (first failure at degree " << *rep.first_failure << ")";
    os << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"workbench for graded quadratic algebras over the rationals"};
    app.require_subcommand(1);
    bool serial = false;
    app.add_flag("--serial", serial, "use the serial reference kernels");

    int n = 0;
    bool alias = false;
    std::string in_path, out_path, order_csv, change_path;
    int d_max = -1;  // -1 = depend on the presentation
    bool oracle = false;

    CLI::App* keel_cmd = app.add_subcommand("keel", "generate the boundary presentation");
    keel_cmd->add_option("--n", n, "number of marked points (>= 4)")->required();
    keel_cmd->add_flag("--alias", alias, "use single-letter names (n=6 only)");
    keel_cmd->add_option("--out", out_path, "output presentation file");

    CLI::App* reduce_cmd =
        app.add_subcommand("reduce", "eliminate linearly dependent generators");
    reduce_cmd->add_option("--in", in_path, "input presentation")->required();
    reduce_cmd->add_option("--order", order_csv,
                           "comma-separated variable precedence, greatest first");
    reduce_cmd->add_option("--out", out_path, "output presentation file");

    CLI::App* dual_cmd = app.add_subcommand("dual", "compute the quadratic dual");
    dual_cmd->add_option("--in", in_path, "reduced presentation")->required();
    dual_cmd->add_option("--out", out_path, "output presentation file");

    CLI::App* hilbert_cmd =
        app.add_subcommand("hilbert", "Hilbert series prefix via rewriting");
    hilbert_cmd->add_option("--in", in_path, "reduced presentation")->required();
    hilbert_cmd->add_option("--d-max", d_max, "last degree to compute (default 4 for n=5, 3 otherwise)");
    hilbert_cmd->add_flag("--oracle", oracle, "cross-check with the span oracle");
    hilbert_cmd->add_option("--order", order_csv, "variable precedence for the rewriting");

    CLI::App* koszul_cmd =
        app.add_subcommand("koszul-check", "numerical Koszulity test plus PBW certificate");
    koszul_cmd->add_option("--in", in_path, "reduced presentation")->required();
    koszul_cmd->add_option("--d-max", d_max, "last degree to compare (default 4 for n=5, 3 otherwise)");
    koszul_cmd->add_option("--change", change_path,
                           "change-of-variables matrix to try for the certificate");
    koszul_cmd->add_option("--order", order_csv, "variable precedence for the certificate");
    koszul_cmd->add_option("--out", out_path, "report file");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    set_parallel(!serial);

    try {
        if (keel_cmd->parsed())
            return run_keel(n, alias, out_path);
        if (reduce_cmd->parsed())
            return run_reduce(in_path, order_csv, out_path);
        if (dual_cmd->parsed())
            return run_dual(in_path, out_path);
        if (hilbert_cmd->parsed())
            return run_hilbert(in_path, d_max, oracle, order_csv);
        if (koszul_cmd->parsed())
            return run_koszul_check(in_path, d_max, change_path, order_csv, out_path);
    }
    catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
