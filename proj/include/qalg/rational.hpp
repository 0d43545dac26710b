#ifndef QALG_RATIONAL_HPP
#define QALG_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qalg {

// Exact rational scalar. GMP keeps values in lowest terms with a positive
// denominator, which is exactly the canonical form the rest of the code
// relies on.
using Rational = mpq_class;

struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses "5", "-3/2", "0". Throws parse_error on anything else.
Rational parse_rational(const std::string& text);

// Canonical form: "-3/2", "5", "0".
std::string to_string(const Rational& q);

}  // namespace qalg

#endif
