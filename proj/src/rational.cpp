#include "cdp/rational.hpp"

#include <cctype>

#include "cdp/errors.hpp"

namespace cdp {

namespace {

bool valid_integer(std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!valid_integer(num) || !valid_integer(den))
        throw InputError("malformed rational '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw InputError("zero denominator in rational '" + std::string(text) + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string rational_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_str();
}

}  // namespace cdp
