#ifndef QALG_KEEL_HPP
#define QALG_KEEL_HPP

#include "qalg/free_algebra.hpp"

#include <string>
#include <vector>

namespace qalg {

// A boundary-divisor generator: a subset of {1..n} with 2 <= |S| <= n-2,
// taken modulo complementation. The canonical representative is the member
// of {S, S^C} that does not contain n.
struct SubsetClass {
    std::vector<int> rep;  // sorted, never contains n
    int n = 0;

    auto operator<=>(const SubsetClass&) const = default;
};

// Relations are polynomials over generator indices into `variables`.
struct Presentation {
    int n = 0;  // marker count when Keel-generated, 0 otherwise
    std::vector<std::string> variables;
    std::vector<Poly> linear_relations;     // homogeneous degree 1
    std::vector<Poly> quadratic_relations;  // homogeneous degree 2
};

namespace keel {

SubsetClass canonical_class(std::vector<int> s, int n);

// All classes sorted by (size, lexicographic). n=5 gives the ten delta_ij,
// n=6 the twenty-five generators of the hexagon computation.
std::vector<SubsetClass> generators(int n);

// True iff none of S<=T, T<=S, S and T disjoint, S union T = {1..n} holds;
// exactly the pairs whose product vanishes. Well-defined on classes.
bool crossing(const SubsetClass& a, const SubsetClass& b);

std::string display_name(const SubsetClass& c);

// Two relations per 4-element subset {i<j<k<l}: sum(ij|kl) - sum(ik|jl) and
// sum(ij|kl) - sum(il|jk).
std::vector<Poly> linear_relations(int n);

// Crossing pairs contribute both word orders as monomial relations; all other
// distinct pairs contribute a commutator.
std::vector<Poly> quadratic_relations(int n);

Presentation presentation(int n, bool alias_letters = false);

// The single-letter naming scheme a..y for the n=6 generators. Throws for
// any other n.
std::vector<std::string> letter_names(int n);

// Precedence (greatest first) listing non-adjacent ("diagonal") classes
// before cyclically adjacent ("side") classes; with no explicit order this
// reproduces the pentagon basis for n=5.
std::vector<int> default_elimination_precedence(int n);

}  // namespace keel

}  // namespace qalg

#endif
