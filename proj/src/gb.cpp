#include "qalg/gb.hpp"

#include "qalg/matrix.hpp"
#include "qalg/parallel.hpp"

#include <algorithm>
#include <climits>
#include <queue>

namespace qalg {

int RewriteSystem::max_rule_degree() const
{
    int d = 0;
    for (const auto& [lw, tail] : rules)
        d = std::max(d, degree(lw));
    return d;
}

namespace {

using RuleMap = std::map<Word, Poly>;

int max_degree(const RuleMap& rules)
{
    int d = 0;
    for (const auto& [lw, tail] : rules)
        d = std::max(d, degree(lw));
    return d;
}

// Deterministic normal form: always rewrites the order-greatest word, at its
// leftmost reducible position, with the shortest matching rule. The popped
// words form a strictly decreasing chain, so words already emitted can never
// reappear.
Poly reduce(const Poly& p, const RuleMap& rules, const MonomialOrder& ord, int max_len)
{
    if (rules.empty())
        return p;
    std::map<Word, Rational, WordOrderGreater> work{WordOrderGreater{&ord}};
    for (const auto& [w, c] : p.terms())
        work.emplace(w, c);

    Poly out;
    while (!work.empty()) {
        auto top = work.begin();
        const Word w = top->first;
        const Rational c = top->second;
        work.erase(top);

        const Poly* tail = nullptr;
        size_t pos = 0, len = 0;
        for (size_t s = 0; s + 2 <= w.size() && !tail; ++s) {
            const size_t maxl = std::min(w.size() - s, static_cast<size_t>(max_len));
            for (size_t l = 2; l <= maxl; ++l) {
                auto it = rules.find(Word(w.begin() + static_cast<long>(s),
                                          w.begin() + static_cast<long>(s + l)));
                if (it != rules.end()) {
                    tail = &it->second;
                    pos = s;
                    len = l;
                    break;
                }
            }
        }
        if (!tail) {
            out.add_term(w, c);
            continue;
        }
        for (const auto& [t, tc] : tail->terms()) {
            Word nw;
            nw.reserve(w.size() - len + t.size());
            nw.insert(nw.end(), w.begin(), w.begin() + static_cast<long>(pos));
            nw.insert(nw.end(), t.begin(), t.end());
            nw.insert(nw.end(), w.begin() + static_cast<long>(pos + len), w.end());
            auto [it, inserted] = work.try_emplace(std::move(nw), c * tc);
            if (!inserted) {
                it->second += c * tc;
                if (it->second == 0)
                    work.erase(it);
            }
        }
    }
    return out;
}

void interreduce(RuleMap& rules, const MonomialOrder& ord)
{
    const int max_len = max_degree(rules);
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [lw, tail] : rules) {
            // A tail word has the degree of lw but differs from it, so the
            // rule never applies to its own tail.
            Poly nf = reduce(tail, rules, ord, max_len);
            if (!(nf == tail)) {
                tail = std::move(nf);
                changed = true;
            }
        }
    }
}

struct Obstruction {
    Word left;     // leading word rewritten at position 0
    Word right;    // leading word rewritten at the overlap position
    size_t overlap;  // shared letters: suffix of left == prefix of right
};

Poly s_polynomial(const Obstruction& ob, const RuleMap& rules)
{
    const Poly& tl = rules.at(ob.left);
    const Poly& tr = rules.at(ob.right);
    const Word suffix(ob.right.begin() + static_cast<long>(ob.overlap), ob.right.end());
    const Word prefix(ob.left.begin(), ob.left.end() - static_cast<long>(ob.overlap));
    return poly_mul(tl, Poly::term(suffix, Rational(1))) -
           poly_mul(Poly::term(prefix, Rational(1)), tr);
}

}  // namespace

Poly normal_form(const Poly& p, const RewriteSystem& rs)
{
    int deg = 0;
    for (const auto& [w, c] : p.terms())
        deg = std::max(deg, degree(w));
    if (deg > rs.complete_through)
        throw std::invalid_argument("normal_form: degree exceeds completeness bound");
    return reduce(p, rs.rules, rs.order, rs.max_rule_degree());
}

RewriteSystem truncated_buchberger(const std::vector<Poly>& relations, const MonomialOrder& ord,
                                   int d_max)
{
    if (d_max < 2)
        throw std::invalid_argument("truncated_buchberger: d_max must be at least 2");

    std::map<int, std::vector<Poly>> inputs_by_degree;
    for (const Poly& r : relations) {
        if (r.is_zero())
            continue;
        int deg = 0;
        if (!r.is_homogeneous(&deg))
            throw std::invalid_argument("truncated_buchberger: relation not homogeneous");
        if (deg < 2)
            throw inconsistent_presentation("degree-" + std::to_string(deg) + " relation");
        if (deg <= d_max)
            inputs_by_degree[deg].push_back(r);
    }

    RuleMap rules;
    for (int d = 2; d <= d_max; ++d) {
        // Obstructions of overlap degree d among the current leading words.
        std::vector<Obstruction> obs;
        for (const auto& [w1, t1] : rules)
            for (const auto& [w2, t2] : rules) {
                const size_t max_k = std::min(w1.size(), w2.size()) - 1;
                for (size_t k = 1; k <= max_k; ++k) {
                    if (w1.size() + w2.size() - k != static_cast<size_t>(d))
                        continue;
                    if (std::equal(w1.end() - static_cast<long>(k), w1.end(), w2.begin()))
                        obs.push_back({w1, w2, k});
                }
            }
        std::sort(obs.begin(), obs.end(), [&](const Obstruction& a, const Obstruction& b) {
            if (auto c = ord.compare(a.left, b.left); c != 0)
                return c < 0;
            if (auto c = ord.compare(a.right, b.right); c != 0)
                return c < 0;
            return a.overlap < b.overlap;
        });

        std::vector<Poly> cand;
        if (auto it = inputs_by_degree.find(d); it != inputs_by_degree.end())
            cand = it->second;
        for (const Obstruction& ob : obs)
            cand.push_back(s_polynomial(ob, rules));
        if (cand.empty())
            continue;

        // Parallel pre-reduction against the stratum-entry rules. Normal
        // forms modulo a fixed rule set are computed independently per
        // candidate, so this cannot change the serial outcome.
        const int max_len = max_degree(rules);
        const int ncand = static_cast<int>(cand.size());
        if (parallel_enabled()) {
#pragma omp parallel for schedule(dynamic)
            for (int i = 0; i < ncand; ++i)
                cand[static_cast<size_t>(i)] =
                    reduce(cand[static_cast<size_t>(i)], rules, ord, max_len);
        }
        else {
            for (int i = 0; i < ncand; ++i)
                cand[static_cast<size_t>(i)] =
                    reduce(cand[static_cast<size_t>(i)], rules, ord, max_len);
        }

        // Serial insertion; each candidate is re-reduced so rules added
        // earlier in the stratum take effect.
        for (Poly& p : cand) {
            Poly nf = reduce(p, rules, ord, std::max(max_degree(rules), d));
            if (nf.is_zero())
                continue;
            int deg = 0;
            nf.is_homogeneous(&deg);
            if (deg < 2)
                throw inconsistent_presentation("reduction produced a degree-" +
                                                std::to_string(deg) + " consequence");
            auto [lw, lc] = leading_term(nf, ord);
            Poly tail = Poly::term(lw, Rational(1)) - nf * (Rational(1) / lc);
            rules.emplace(std::move(lw), std::move(tail));
        }
    }

    interreduce(rules, ord);

    RewriteSystem rs;
    rs.order = ord;
    rs.complete_through = d_max;
    rs.rules = std::move(rules);
    return rs;
}

DimensionProfile dimension_profile(const RewriteSystem& rs, int d_max)
{
    if (d_max < 0)
        throw std::invalid_argument("dimension_profile: negative degree");
    if (d_max > rs.complete_through)
        throw std::invalid_argument("dimension_profile: d_max exceeds completeness bound");

    const int nvars = rs.order.nvars();

    // Aho-Corasick automaton over the leading words; a path of length d from
    // the root that never hits a matched state is exactly a normal word.
    struct Node {
        std::map<VarId, int> next;
        int fail = 0;
        bool hit = false;
    };
    std::vector<Node> trie(1);
    for (const auto& [lw, tail] : rs.rules) {
        int s = 0;
        for (VarId a : lw) {
            auto it = trie[static_cast<size_t>(s)].next.find(a);
            if (it == trie[static_cast<size_t>(s)].next.end()) {
                trie.push_back(Node{});
                it = trie[static_cast<size_t>(s)].next.emplace(a, static_cast<int>(trie.size()) - 1).first;
            }
            s = it->second;
        }
        trie[static_cast<size_t>(s)].hit = true;
    }

    const size_t nstates = trie.size();
    std::vector<std::vector<int>> go(nstates, std::vector<int>(static_cast<size_t>(nvars), 0));
    std::queue<int> bfs;
    for (VarId a = 0; a < nvars; ++a) {
        auto it = trie[0].next.find(a);
        if (it != trie[0].next.end()) {
            trie[static_cast<size_t>(it->second)].fail = 0;
            go[0][static_cast<size_t>(a)] = it->second;
            bfs.push(it->second);
        }
    }
    while (!bfs.empty()) {
        const int s = bfs.front();
        bfs.pop();
        const int f = trie[static_cast<size_t>(s)].fail;
        trie[static_cast<size_t>(s)].hit =
            trie[static_cast<size_t>(s)].hit || trie[static_cast<size_t>(f)].hit;
        for (VarId a = 0; a < nvars; ++a) {
            auto it = trie[static_cast<size_t>(s)].next.find(a);
            if (it == trie[static_cast<size_t>(s)].next.end()) {
                go[static_cast<size_t>(s)][static_cast<size_t>(a)] =
                    go[static_cast<size_t>(f)][static_cast<size_t>(a)];
            }
            else {
                trie[static_cast<size_t>(it->second)].fail = go[static_cast<size_t>(f)][static_cast<size_t>(a)];
                go[static_cast<size_t>(s)][static_cast<size_t>(a)] = it->second;
                bfs.push(it->second);
            }
        }
    }

    DimensionProfile profile;
    profile.dims.assign(static_cast<size_t>(d_max) + 1, 0);
    profile.dims[0] = 1;
    std::vector<long long> cnt(nstates, 0), nxt(nstates, 0);
    cnt[0] = 1;
    for (int d = 1; d <= d_max; ++d) {
        if (profile.dims[static_cast<size_t>(d) - 1] > LLONG_MAX / std::max(nvars, 1))
            throw resource_error("dimension_profile: count overflow");
        std::fill(nxt.begin(), nxt.end(), 0);
        long long total = 0;
        for (size_t s = 0; s < nstates; ++s) {
            if (cnt[s] == 0)
                continue;
            for (VarId a = 0; a < nvars; ++a) {
                const int t = go[s][static_cast<size_t>(a)];
                if (trie[static_cast<size_t>(t)].hit)
                    continue;
                nxt[static_cast<size_t>(t)] += cnt[s];
                total += cnt[s];
            }
        }
        profile.dims[static_cast<size_t>(d)] = total;
        cnt.swap(nxt);
    }
    return profile;
}

namespace {
constexpr long long kMaxWords = 400000;
}

void bruteforce_guard(int nvars, int d)
{
    long long words = 1;
    for (int i = 0; i < d; ++i) {
        words *= nvars;
        if (words > kMaxWords)
            throw resource_error("ideal_dim_bruteforce: word space too large");
    }
}

long long ideal_dim_bruteforce(const std::vector<Poly>& relations, int nvars, int d)
{
    if (nvars < 1 || d < 2)
        throw std::invalid_argument("ideal_dim_bruteforce: need nvars >= 1 and d >= 2");
    bruteforce_guard(nvars, d);
    long long words = 1;
    for (int i = 0; i < d; ++i)
        words *= nvars;

    for (const Poly& r : relations) {
        int deg = 0;
        if (!r.is_homogeneous(&deg) || (deg != 2 && deg != -1))
            throw std::invalid_argument("ideal_dim_bruteforce: relations must be quadratic");
        for (const auto& [w, c] : r.terms())
            if (w[0] < 0 || w[0] >= nvars || w[1] < 0 || w[1] >= nvars)
                throw std::invalid_argument("ideal_dim_bruteforce: variable out of range");
    }

    std::vector<long long> pw(static_cast<size_t>(d) + 1);
    pw[0] = 1;
    for (int i = 1; i <= d; ++i)
        pw[static_cast<size_t>(i)] = pw[static_cast<size_t>(i) - 1] * nvars;

    // One row per (relation, u, v): the vector of u*r*v in the degree-d word
    // space, built in parallel, then ranked.
    const int nrel = static_cast<int>(relations.size());
    long long shifts = 0;
    for (int s = 0; s + 2 <= d; ++s)
        shifts += pw[s] * pw[d - 2 - s];
    const long long total_rows = shifts * nrel;
    if (total_rows > 2 * kMaxWords)
        throw resource_error("ideal_dim_bruteforce: too many shifted relations");

    MatrixQ m(static_cast<int>(total_rows), static_cast<int>(pw[d]));
    const int nshift = static_cast<int>(shifts);

    auto build_row = [&](int rel, int shift_index) {
        // decode shift_index into (s, u, v)
        long long rest = shift_index;
        int s = 0;
        for (; s + 2 <= d; ++s) {
            const long long block = pw[s] * pw[d - 2 - s];
            if (rest < block)
                break;
            rest -= block;
        }
        const int t = d - 2 - s;
        const long long u = rest / pw[t];
        const long long v = rest % pw[t];
        SparseRow row;
        for (const auto& [w, c] : relations[static_cast<size_t>(rel)].terms()) {
            const long long col = ((u * nvars + w[0]) * nvars + w[1]) * pw[t] + v;
            row.emplace_back(static_cast<int>(col), c);
        }
        std::sort(row.begin(), row.end());
        m.set_row(rel * nshift + shift_index, std::move(row));
    };

    if (parallel_enabled()) {
#pragma omp parallel for schedule(static) collapse(2)
        for (int rel = 0; rel < nrel; ++rel)
            for (int sh = 0; sh < nshift; ++sh)
                build_row(rel, sh);
    }
    else {
        for (int rel = 0; rel < nrel; ++rel)
            for (int sh = 0; sh < nshift; ++sh)
                build_row(rel, sh);
    }

    return rank(m);
}

}  // namespace qalg
