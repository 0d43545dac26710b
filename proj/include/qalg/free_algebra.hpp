#ifndef QALG_FREE_ALGEBRA_HPP
#define QALG_FREE_ALGEBRA_HPP

#include "qalg/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace qalg {

// All variables have degree 1, so the degree of a word is its length and the
// empty word is the unit.
using VarId = int;
using Word = std::vector<VarId>;

inline int degree(const Word& w) { return static_cast<int>(w.size()); }

Word concat(const Word& u, const Word& v);

// Degree-lexicographic order: shorter words first, equal lengths compared
// letterwise by a fixed variable precedence (listed greatest first).
class MonomialOrder {
public:
    MonomialOrder() = default;
    explicit MonomialOrder(std::vector<VarId> precedence);
    static MonomialOrder identity(int nvars);  // variable 0 greatest

    int nvars() const { return static_cast<int>(precedence_.size()); }
    const std::vector<VarId>& precedence() const { return precedence_; }
    int rank_of(VarId v) const { return rank_.at(static_cast<size_t>(v)); }

    std::strong_ordering compare(const Word& u, const Word& v) const;
    bool less(const Word& u, const Word& v) const { return compare(u, v) < 0; }
    bool greater(const Word& u, const Word& v) const { return compare(u, v) > 0; }

private:
    std::vector<VarId> precedence_;  // rank -> variable
    std::vector<int> rank_;          // variable -> rank, 0 = greatest
};

std::strong_ordering compare_words(const Word& u, const Word& v, const MonomialOrder& ord);

// Order-greater-first comparator for keyed containers.
struct WordOrderGreater {
    const MonomialOrder* ord = nullptr;
    bool operator()(const Word& a, const Word& b) const { return ord->greater(a, b); }
};

// Noncommutative polynomial with exact rational coefficients. Terms are kept
// in a structural map; no zero coefficients are ever stored.
class Poly {
public:
    using TermMap = std::map<Word, Rational>;

    Poly() = default;
    static Poly unit();
    static Poly var(VarId v);
    static Poly term(Word w, Rational c);

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Word& w, const Rational& c);

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Rational& c);
    Poly operator-() const;

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(Poly lhs, const Rational& c) { return lhs *= c; }
    friend Poly operator*(const Rational& c, Poly rhs) { return rhs *= c; }

    bool operator==(const Poly&) const = default;

    // True iff every term has the same degree; sets *deg if given (zero poly
    // reports degree -1).
    bool is_homogeneous(int* deg = nullptr) const;

private:
    TermMap terms_;
};

Poly poly_mul(const Poly& p, const Poly& q);
Poly operator*(const Poly& p, const Poly& q);

// Order-maximal term. Throws on the zero polynomial.
std::pair<Word, Rational> leading_term(const Poly& p, const MonomialOrder& ord);

std::string to_string(const Word& w, const std::vector<std::string>& names);
std::string to_string(const Poly& p, const std::vector<std::string>& names);

}  // namespace qalg

#endif
