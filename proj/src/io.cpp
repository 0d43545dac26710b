#include "qalg/io.hpp"

#include <fstream>
#include <map>

namespace qalg {

using nlohmann::json;

json presentation_to_json(const Presentation& p)
{
    json j;
    if (p.n > 0)
        j["n"] = p.n;
    j["variables"] = p.variables;

    auto name_of = [&](VarId v) { return p.variables.at(static_cast<size_t>(v)); };

    json lin = json::array();
    for (const Poly& rel : p.linear_relations) {
        json terms = json::array();
        for (const auto& [w, c] : rel.terms())
            terms.push_back({{"var", name_of(w.at(0))}, {"coef", to_string(c)}});
        lin.push_back(std::move(terms));
    }
    j["linear_relations"] = std::move(lin);

    json quad = json::array();
    for (const Poly& rel : p.quadratic_relations) {
        json terms = json::array();
        for (const auto& [w, c] : rel.terms())
            terms.push_back(
                {{"word", {name_of(w.at(0)), name_of(w.at(1))}}, {"coef", to_string(c)}});
        quad.push_back(std::move(terms));
    }
    j["quadratic_relations"] = std::move(quad);
    return j;
}

Presentation presentation_from_json(const json& j)
{
    if (!j.is_object())
        throw parse_error("presentation: not a JSON object");

    Presentation p;
    if (j.contains("n")) {
        if (!j.at("n").is_number_integer())
            throw parse_error("presentation: n must be an integer");
        p.n = j.at("n").get<int>();
    }
    if (!j.contains("variables") || !j.at("variables").is_array())
        throw parse_error("presentation: missing variables array");

    std::map<std::string, VarId> index;
    for (const auto& v : j.at("variables")) {
        if (!v.is_string())
            throw parse_error("presentation: variable names must be strings");
        const std::string name = v.get<std::string>();
        if (name.empty() || index.count(name))
            throw parse_error("presentation: duplicate or empty variable name");
        index.emplace(name, static_cast<VarId>(p.variables.size()));
        p.variables.push_back(name);
    }

    auto var_of = [&](const json& t) {
        const auto it = index.find(t.get<std::string>());
        if (it == index.end())
            throw parse_error("presentation: undeclared variable " + t.get<std::string>());
        return it->second;
    };

    if (j.contains("linear_relations")) {
        for (const auto& rel : j.at("linear_relations")) {
            Poly poly;
            for (const auto& term : rel) {
                if (!term.contains("var") || !term.contains("coef"))
                    throw parse_error("presentation: linear term needs var and coef");
                poly.add_term(Word{var_of(term.at("var"))},
                              parse_rational(term.at("coef").get<std::string>()));
            }
            p.linear_relations.push_back(std::move(poly));
        }
    }
    if (j.contains("quadratic_relations")) {
        for (const auto& rel : j.at("quadratic_relations")) {
            Poly poly;
            for (const auto& term : rel) {
                if (!term.contains("word") || !term.contains("coef") ||
                    !term.at("word").is_array() || term.at("word").size() != 2)
                    throw parse_error("presentation: quadratic term needs a 2-letter word");
                poly.add_term(Word{var_of(term.at("word").at(0)), var_of(term.at("word").at(1))},
                              parse_rational(term.at("coef").get<std::string>()));
            }
            p.quadratic_relations.push_back(std::move(poly));
        }
    }
    return p;
}

Presentation load_presentation(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open " + path);
    json j;
    try {
        in >> j;
    }
    catch (const json::exception& e) {
        throw parse_error(path + ": " + e.what());
    }
    return presentation_from_json(j);
}

void save_presentation(const Presentation& p, const std::string& path)
{
    save_json(presentation_to_json(p), path);
}

json report_to_json(const KoszulReport& rep, KoszulVerdict verdict)
{
    json j;
    j["h_a"] = rep.h_a.dims;
    j["h_dual"] = rep.h_dual.dims;
    j["defects"] = rep.defects;
    if (rep.first_failure)
        j["first_failure"] = *rep.first_failure;
    else
        j["first_failure"] = nullptr;
    j["verdict"] = to_string(verdict);
    return j;
}

MatrixQ matrix_from_json(const json& j)
{
    if (!j.is_array() || j.empty())
        throw parse_error("matrix: expected a non-empty array of rows");
    const int rows = static_cast<int>(j.size());
    const int cols = static_cast<int>(j.at(0).size());
    MatrixQ m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const auto& row = j.at(static_cast<size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw parse_error("matrix: ragged rows");
        for (int c = 0; c < cols; ++c) {
            const auto& e = row.at(static_cast<size_t>(c));
            Rational v;
            if (e.is_number_integer())
                v = parse_rational(std::to_string(e.get<long long>()));
            else if (e.is_string())
                v = parse_rational(e.get<std::string>());
            else
                throw parse_error("matrix: entries must be integers or rational strings");
            if (v != 0)
                m.set(i, c, v);
        }
    }
    return m;
}

MatrixQ load_matrix(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open " + path);
    json j;
    try {
        in >> j;
    }
    catch (const json::exception& e) {
        throw parse_error(path + ": " + e.what());
    }
    return matrix_from_json(j);
}

std::string dump_json(const json& j)
{
    return j.dump(2) + "\n";
}

void save_json(const json& j, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);  // keep LF endings everywhere
    if (!out)
        throw parse_error("cannot write " + path);
    out << dump_json(j);
}

}  // namespace qalg
