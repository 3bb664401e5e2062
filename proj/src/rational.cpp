#include "stabkit/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace stabkit {

std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str(10);
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && body.front() == '-') body.remove_prefix(1);
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    mpz_class p(std::string(num), 10), q(std::string(den), 10);
    if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    if (text.front() == '-') p = -p;
    Rational r(p, q);
    r.canonicalize();
    return r;
}

}  // namespace stabkit
