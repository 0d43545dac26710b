#include "qalg/free_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qalg {

Word concat(const Word& u, const Word& v)
{
    Word w;
    w.reserve(u.size() + v.size());
    w.insert(w.end(), u.begin(), u.end());
    w.insert(w.end(), v.begin(), v.end());
    return w;
}

MonomialOrder::MonomialOrder(std::vector<VarId> precedence) : precedence_(std::move(precedence))
{
    const int n = static_cast<int>(precedence_.size());
    rank_.assign(static_cast<size_t>(n), -1);
    for (int r = 0; r < n; ++r) {
        const VarId v = precedence_[static_cast<size_t>(r)];
        if (v < 0 || v >= n || rank_[static_cast<size_t>(v)] != -1)
            throw std::invalid_argument("MonomialOrder: precedence is not a permutation");
        rank_[static_cast<size_t>(v)] = r;
    }
}

MonomialOrder MonomialOrder::identity(int nvars)
{
    std::vector<VarId> p(static_cast<size_t>(nvars));
    std::iota(p.begin(), p.end(), 0);
    return MonomialOrder(std::move(p));
}

std::strong_ordering MonomialOrder::compare(const Word& u, const Word& v) const
{
    if (u.size() != v.size())
        return u.size() <=> v.size();
    for (size_t i = 0; i < u.size(); ++i) {
        const int ru = rank_of(u[i]);
        const int rv = rank_of(v[i]);
        if (ru != rv)
            return rv <=> ru;  // lower rank = greater variable
    }
    return std::strong_ordering::equal;
}

std::strong_ordering compare_words(const Word& u, const Word& v, const MonomialOrder& ord)
{
    return ord.compare(u, v);
}

Poly Poly::unit()
{
    return term(Word{}, Rational(1));
}

Poly Poly::var(VarId v)
{
    return term(Word{v}, Rational(1));
}

Poly Poly::term(Word w, Rational c)
{
    Poly p;
    if (c != 0)
        p.terms_.emplace(std::move(w), std::move(c));
    return p;
}

void Poly::add_term(const Word& w, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& rhs)
{
    for (const auto& [w, c] : rhs.terms_)
        add_term(w, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs)
{
    for (const auto& [w, c] : rhs.terms_)
        add_term(w, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_)
        v *= c;
    return *this;
}

Poly Poly::operator-() const
{
    Poly p(*this);
    for (auto& [w, v] : p.terms_)
        v = -v;
    return p;
}

bool Poly::is_homogeneous(int* deg) const
{
    if (terms_.empty()) {
        if (deg)
            *deg = -1;
        return true;
    }
    const int d = degree(terms_.begin()->first);
    for (const auto& [w, c] : terms_)
        if (degree(w) != d)
            return false;
    if (deg)
        *deg = d;
    return true;
}

Poly poly_mul(const Poly& p, const Poly& q)
{
    Poly out;
    for (const auto& [u, a] : p.terms())
        for (const auto& [v, b] : q.terms())
            out.add_term(concat(u, v), a * b);
    return out;
}

Poly operator*(const Poly& p, const Poly& q)
{
    return poly_mul(p, q);
}

std::pair<Word, Rational> leading_term(const Poly& p, const MonomialOrder& ord)
{
    if (p.is_zero())
        throw std::invalid_argument("leading_term: zero polynomial");
    auto best = p.terms().begin();
    for (auto it = std::next(best); it != p.terms().end(); ++it)
        if (ord.greater(it->first, best->first))
            best = it;
    return {best->first, best->second};
}

std::string to_string(const Word& w, const std::vector<std::string>& names)
{
    if (w.empty())
        return "1";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += '*';
        s += names.at(static_cast<size_t>(w[i]));
    }
    return s;
}

std::string to_string(const Poly& p, const std::vector<std::string>& names)
{
    if (p.is_zero())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : p.terms()) {
        std::string cs = to_string(c);
        if (first) {
            first = false;
            if (cs == "1" && !w.empty())
                cs.clear();
            else if (cs == "-1" && !w.empty())
                cs = "-";
        }
        else {
            if (c > 0)
                s += " + ";
            else
                s += " - ";
            cs = to_string(c > 0 ? c : Rational(-c));
            if (cs == "1" && !w.empty())
                cs.clear();
        }
        s += cs;
        if (!w.empty()) {
            if (!cs.empty() && cs != "-")
                s += '*';
            s += to_string(w, names);
        }
    }
    return s;
}

}  // namespace qalg
