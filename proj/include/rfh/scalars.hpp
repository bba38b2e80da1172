#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "rfh/errors.hpp"

namespace rfh {

// Exact scalars. All arithmetic in this project is exact; there is no
// floating point anywhere.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

enum class Ring { Z, Q };

inline const char* ring_name(Ring r) { return r == Ring::Z ? "Z" : "Q"; }

inline Ring ring_from_string(std::string_view s)
{
    if (s == "Z") return Ring::Z;
    if (s == "Q") return Ring::Q;
    throw Error(ErrorKind::ParseError, "unknown ring \"" + std::string(s) + "\" (expected Z or Q)");
}

inline bool is_integral(const Rat& x) { return denominator(x) == 1; }

inline Int to_int(const Rat& x)
{
    if (!is_integral(x))
        throw Error(ErrorKind::DomainError, "scalar is not an integer");
    return numerator(x);
}

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd_int(const Int& a, const Int& b)
{
    return boost::multiprecision::gcd(a, b);
}

/// Formats integers as plain decimal and non-integers as "p/q".
std::string scalar_to_string(const Rat& x);

/// Parses a decimal integer or a "p/q" string. Rejects anything else.
Rat scalar_from_string(std::string_view s);

} // namespace rfh
