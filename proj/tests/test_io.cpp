#include "qalg/duality.hpp"
#include "qalg/io.hpp"
#include "qalg/keel.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace qalg;
using namespace qalg::testutil;
using nlohmann::json;

namespace {

bool same_presentation(const Presentation& a, const Presentation& b)
{
    return a.n == b.n && a.variables == b.variables &&
           a.linear_relations == b.linear_relations &&
           a.quadratic_relations == b.quadratic_relations;
}

Presentation reduced_pentagon()
{
    const Presentation p = keel::presentation(5);
    const Substitution s = eliminate_linear(p, order_by_names(p, kPentagonOrder));
    return reduced_presentation(p, s);
}

}  // namespace

TEST_CASE("presentation JSON round-trips, including rational coefficients")
{
    for (const Presentation& p :
         {keel::presentation(5), keel::presentation(6, true), reduced_pentagon()}) {
        const json j = presentation_to_json(p);
        CHECK(same_presentation(presentation_from_json(j), p));
    }
}

TEST_CASE("serialization is byte-identical across runs")
{
    const Presentation p = keel::presentation(5);
    const std::string once = dump_json(presentation_to_json(p));
    const std::string twice = dump_json(presentation_to_json(keel::presentation(5)));
    CHECK(once == twice);
    CHECK(once.back() == '\n');
    CHECK(once.find('\r') == std::string::npos);

    // parse and re-emit: still identical
    CHECK(dump_json(presentation_to_json(presentation_from_json(json::parse(once)))) == once);
}

TEST_CASE("dual presentations round-trip through files")
{
    const Presentation red = reduced_pentagon();
    const QuadraticSpace dual =
        quadratic_dual(space_from_polys(static_cast<int>(red.variables.size()),
                                        red.quadratic_relations));
    Presentation dp;
    dp.n = red.n;
    dp.variables = red.variables;
    dp.quadratic_relations = space_to_polys(dual);

    const std::string path = "io_roundtrip_tmp.json";
    save_presentation(dp, path);
    CHECK(same_presentation(load_presentation(path), dp));
    std::remove(path.c_str());
}

TEST_CASE("malformed presentations are rejected")
{
    CHECK_THROWS_AS(presentation_from_json(json::parse("[]")), parse_error);
    CHECK_THROWS_AS(presentation_from_json(json::parse(R"({"variables": ["x", "x"]})")),
                    parse_error);
    CHECK_THROWS_AS(presentation_from_json(json::parse(
                        R"({"variables": ["x"], "linear_relations": [[{"var": "y", "coef": "1"}]]})")),
                    parse_error);
    CHECK_THROWS_AS(presentation_from_json(json::parse(
                        R"({"variables": ["x"], "quadratic_relations": [[{"word": ["x"], "coef": "1"}]]})")),
                    parse_error);
    CHECK_THROWS_AS(presentation_from_json(json::parse(
                        R"({"variables": ["x"], "quadratic_relations": [[{"word": ["x","x"], "coef": "1/0"}]]})")),
                    parse_error);
    CHECK_THROWS_AS(load_presentation("no_such_file.json"), parse_error);
}

TEST_CASE("matrix files accept integers and rational strings")
{
    const MatrixQ m = matrix_from_json(json::parse(R"([[1, "1/2"], ["0", "-3"]])"));
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 2);
    CHECK(m.get(0, 0) == Rational(1));
    CHECK(m.get(0, 1) == Rational(1, 2));
    CHECK(m.get(1, 0) == 0);
    CHECK(m.get(1, 1) == Rational(-3));

    CHECK_THROWS_AS(matrix_from_json(json::parse(R"([[1, 2], [3]])")), parse_error);
    CHECK_THROWS_AS(matrix_from_json(json::parse("[]")), parse_error);
}

TEST_CASE("report JSON carries the verdict and the null first failure")
{
    KoszulReport rep;
    rep.h_a.dims = {1, 5, 1, 0};
    rep.h_dual.dims = {1, 5, 24, 115};
    rep.defects = {0, 0, 0, 0};
    const json j = report_to_json(rep, KoszulVerdict::pbw_koszul);
    CHECK(j.at("verdict") == "pbw_koszul");
    CHECK(j.at("first_failure").is_null());
    CHECK(j.at("h_dual") == json::parse("[1,5,24,115]"));

    rep.first_failure = 3;
    rep.defects = {0, 0, 0, -1};
    const json k = report_to_json(rep, KoszulVerdict::not_koszul);
    CHECK(k.at("first_failure") == 3);
    CHECK(k.at("defects")[3] == -1);
}
