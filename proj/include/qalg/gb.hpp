#ifndef QALG_GB_HPP
#define QALG_GB_HPP

#include "qalg/free_algebra.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace qalg {

struct inconsistent_presentation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rewriting rules oriented leading word -> tail (the relation is lw - tail,
// every tail word strictly order-smaller and of the same degree). Reduced:
// no leading word is a contiguous subword of another, tails are normal.
struct RewriteSystem {
    MonomialOrder order;
    int complete_through = 0;      // rules are trustworthy up to this degree
    std::map<Word, Poly> rules;

    int max_rule_degree() const;
};

// dims[d] = dim A_d, starting at degree 0.
struct DimensionProfile {
    std::vector<long long> dims;

    bool operator==(const DimensionProfile&) const = default;
};

// Repeatedly replaces occurrences of leading words (leftmost position,
// shortest rule first) until only normal words remain.
Poly normal_form(const Poly& p, const RewriteSystem& rs);

// Degree-truncated noncommutative Buchberger completion. Obstructions are
// processed stratum by stratum in increasing overlap degree; within a
// stratum candidates are pre-reduced in parallel against the rules known at
// stratum entry and then inserted serially, which leaves the result
// identical to the all-serial run. Since everything is homogeneous, the
// rules of degree <= d_max are final once their strata close.
RewriteSystem truncated_buchberger(const std::vector<Poly>& relations, const MonomialOrder& ord,
                                   int d_max);

// Normal-word counts per degree, via the automaton on proper prefixes of the
// leading words (Ufnarovski-style path counting).
DimensionProfile dimension_profile(const RewriteSystem& rs, int d_max);

// Independent oracle: rank of { u * r * v : |u| + 2 + |v| = d } inside the
// degree-d word space. dim A_d = nvars^d - result.
long long ideal_dim_bruteforce(const std::vector<Poly>& relations, int nvars, int d);

// Throws resource_error when nvars^d is too large to materialize.
void bruteforce_guard(int nvars, int d);

}  // namespace qalg

#endif
