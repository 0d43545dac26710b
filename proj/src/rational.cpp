#include "qalg/rational.hpp"

#include <cctype>

namespace qalg {

Rational parse_rational(const std::string& text)
{
    if (text.empty())
        throw parse_error("empty rational literal");
    for (char ch : text)
        if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '-' && ch != '/')
            throw parse_error("bad rational literal: " + text);

    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw parse_error("bad rational literal: " + text);
    if (q.get_den() == 0)
        throw parse_error("zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

}  // namespace qalg
