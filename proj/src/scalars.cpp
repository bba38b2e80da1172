#include "rfh/scalars.hpp"

#include <cctype>

namespace rfh {

std::string scalar_to_string(const Rat& x)
{
    std::string s = numerator(x).str();
    if (!is_integral(x)) {
        s += '/';
        s += denominator(x).str();
    }
    return s;
}

namespace {

bool parse_int_token(std::string_view s, Int& out)
{
    if (s.empty()) return false;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') i = 1;
    if (i == s.size()) return false;
    for (std::size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    out = Int(std::string(s));
    return true;
}

} // namespace

Rat scalar_from_string(std::string_view s)
{
    auto slash = s.find('/');
    Int num, den;
    if (slash == std::string_view::npos) {
        if (!parse_int_token(s, num))
            throw Error(ErrorKind::ParseError,
                        "invalid scalar \"" + std::string(s) + "\" (expected decimal integer or p/q)");
        return Rat(num);
    }
    if (!parse_int_token(s.substr(0, slash), num) || !parse_int_token(s.substr(slash + 1), den))
        throw Error(ErrorKind::ParseError,
                    "invalid scalar \"" + std::string(s) + "\" (expected decimal integer or p/q)");
    if (den == 0)
        throw Error(ErrorKind::ParseError, "invalid scalar \"" + std::string(s) + "\": zero denominator");
    return Rat(num) / Rat(den);
}

} // namespace rfh
