#include "qalg/keel.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qalg::keel {

namespace {

void check_n(int n)
{
    if (n < 4)
        throw std::invalid_argument("Keel presentation needs n >= 4");
}

std::vector<int> complement(const std::vector<int>& s, int n)
{
    std::vector<int> out;
    out.reserve(static_cast<size_t>(n) - s.size());
    size_t j = 0;
    for (int x = 1; x <= n; ++x) {
        if (j < s.size() && s[j] == x)
            ++j;
        else
            out.push_back(x);
    }
    return out;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b)
{
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (a[i] > b[j])
            ++j;
        else
            return false;
    }
    return true;
}

}  // namespace

SubsetClass canonical_class(std::vector<int> s, int n)
{
    check_n(n);
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("subset has repeated elements");
    if (!s.empty() && (s.front() < 1 || s.back() > n))
        throw std::invalid_argument("subset element out of range");
    const int size = static_cast<int>(s.size());
    if (size < 2 || size > n - 2)
        throw std::invalid_argument("subset size must be between 2 and n-2");
    if (std::binary_search(s.begin(), s.end(), n))
        s = complement(s, n);
    return SubsetClass{std::move(s), n};
}

std::vector<SubsetClass> generators(int n)
{
    check_n(n);
    // Canonical representatives are exactly the subsets of {1..n-1} of size
    // 2..n-2, enumerated by size then lexicographically.
    std::vector<SubsetClass> out;
    for (int size = 2; size <= n - 2; ++size) {
        std::vector<int> pick(static_cast<size_t>(size));
        // first subset 1,2,..,size
        for (int i = 0; i < size; ++i)
            pick[static_cast<size_t>(i)] = i + 1;
        while (true) {
            out.push_back(SubsetClass{pick, n});
            int i = size - 1;
            while (i >= 0 && pick[static_cast<size_t>(i)] == n - 1 - (size - 1 - i))
                --i;
            if (i < 0)
                break;
            ++pick[static_cast<size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
        }
    }
    return out;
}

bool crossing(const SubsetClass& a, const SubsetClass& b)
{
    if (a.n != b.n)
        throw std::invalid_argument("crossing: mismatched marker counts");
    const int n = a.n;
    const std::vector<int>& s = a.rep;
    const std::vector<int>& t = b.rep;
    if (subset_of(s, t) || subset_of(t, s))
        return false;
    if (disjoint(s, t))  // S inside T^C
        return false;
    if (s.size() + t.size() >= static_cast<size_t>(n) && subset_of(complement(t, n), s))
        return false;  // T^C inside S
    return true;
}

std::string display_name(const SubsetClass& c)
{
    std::string s = "d";
    const bool wide = c.n > 9;
    for (size_t i = 0; i < c.rep.size(); ++i) {
        if (wide && i)
            s += '_';
        s += std::to_string(c.rep[i]);
    }
    return s;
}

std::vector<Poly> linear_relations(int n)
{
    check_n(n);
    const std::vector<SubsetClass> gens = generators(n);
    std::map<SubsetClass, int> index;
    for (size_t i = 0; i < gens.size(); ++i)
        index.emplace(gens[i], static_cast<int>(i));

    // sum over subsets S with x,y in S and u,v not in S, as a vector over
    // generator classes
    auto pair_sum = [&](int x, int y, int u, int v) {
        Poly sum;
        std::vector<int> rest;
        for (int e = 1; e <= n; ++e)
            if (e != x && e != y && e != u && e != v)
                rest.push_back(e);
        const int m = static_cast<int>(rest.size());
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            std::vector<int> s{x, y};
            for (int b = 0; b < m; ++b)
                if (mask & (1u << b))
                    s.push_back(rest[static_cast<size_t>(b)]);
            const SubsetClass cls = canonical_class(std::move(s), n);
            sum.add_term(Word{index.at(cls)}, Rational(1));
        }
        return sum;
    };

    std::vector<Poly> rels;
    std::vector<int> q(4);
    for (q[0] = 1; q[0] <= n; ++q[0])
        for (q[1] = q[0] + 1; q[1] <= n; ++q[1])
            for (q[2] = q[1] + 1; q[2] <= n; ++q[2])
                for (q[3] = q[2] + 1; q[3] <= n; ++q[3]) {
                    const Poly ij_kl = pair_sum(q[0], q[1], q[2], q[3]);
                    const Poly ik_jl = pair_sum(q[0], q[2], q[1], q[3]);
                    const Poly il_jk = pair_sum(q[0], q[3], q[1], q[2]);
                    rels.push_back(ij_kl - ik_jl);
                    rels.push_back(ij_kl - il_jk);
                }
    return rels;
}

std::vector<Poly> quadratic_relations(int n)
{
    check_n(n);
    const std::vector<SubsetClass> gens = generators(n);
    std::vector<Poly> rels;
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j) {
            const VarId vi = static_cast<VarId>(i);
            const VarId vj = static_cast<VarId>(j);
            if (crossing(gens[i], gens[j])) {
                rels.push_back(Poly::term(Word{vi, vj}, Rational(1)));
                rels.push_back(Poly::term(Word{vj, vi}, Rational(1)));
            }
            else {
                Poly comm = Poly::term(Word{vi, vj}, Rational(1));
                comm.add_term(Word{vj, vi}, Rational(-1));
                rels.push_back(std::move(comm));
            }
        }
    return rels;
}

std::vector<std::string> letter_names(int n)
{
    if (n != 6)
        throw std::invalid_argument("letter aliases are defined for n=6 only");
    // Single letters a..y for the twenty-five n=6 classes.
    static const std::vector<std::pair<char, std::vector<int>>> table = {
        {'a', {1, 3}},    {'b', {2, 4}},    {'c', {3, 5}},    {'d', {4, 6}},
        {'e', {1, 5}},    {'f', {2, 6}},    {'g', {1, 2}},    {'h', {2, 3}},
        {'i', {3, 4}},    {'j', {4, 5}},    {'k', {5, 6}},    {'l', {1, 6}},
        {'m', {1, 4}},    {'n', {2, 5}},    {'o', {3, 6}},    {'p', {1, 2, 4}},
        {'q', {2, 3, 5}}, {'r', {3, 4, 6}}, {'s', {1, 4, 5}}, {'t', {2, 5, 6}},
        {'u', {1, 3, 6}}, {'v', {1, 2, 3}}, {'w', {2, 3, 4}}, {'x', {3, 4, 5}},
        {'y', {1, 3, 5}},
    };
    const std::vector<SubsetClass> gens = generators(6);
    std::vector<std::string> names(gens.size());
    for (const auto& [letter, subset] : table) {
        const SubsetClass cls = canonical_class(subset, 6);
        const auto it = std::find(gens.begin(), gens.end(), cls);
        names[static_cast<size_t>(it - gens.begin())] = std::string(1, letter);
    }
    return names;
}

std::vector<int> default_elimination_precedence(int n)
{
    const std::vector<SubsetClass> gens = generators(n);
    auto is_side = [n](const SubsetClass& c) {
        // Cyclically adjacent pair, either as the representative or as its
        // complement (the complement case covers pairs containing n).
        const std::vector<int>& r = c.rep;
        if (r.size() == 2 && r[1] - r[0] == 1)
            return true;
        if (r.size() == static_cast<size_t>(n - 2)) {
            const std::vector<int> pair = complement(r, n);
            if (pair[1] - pair[0] == 1 || (pair[0] == 1 && pair[1] == n))
                return true;
        }
        return false;
    };
    std::vector<int> diag, side;
    for (size_t i = 0; i < gens.size(); ++i)
        (is_side(gens[i]) ? side : diag).push_back(static_cast<int>(i));
    diag.insert(diag.end(), side.begin(), side.end());
    return diag;
}

Presentation presentation(int n, bool alias_letters)
{
    check_n(n);
    Presentation p;
    p.n = n;
    const std::vector<SubsetClass> gens = generators(n);
    if (alias_letters) {
        p.variables = letter_names(n);
    }
    else {
        p.variables.reserve(gens.size());
        for (const SubsetClass& g : gens)
            p.variables.push_back(display_name(g));
    }
    p.linear_relations = linear_relations(n);
    p.quadratic_relations = quadratic_relations(n);
    return p;
}

}  // namespace qalg::keel
