#include "fuzzpolar/rational.hpp"

#include <regex>

namespace fuzzpolar {

std::optional<Rational> parse_rational(const std::string& text) {
    static const std::regex re(R"(^-?[0-9]+(/[1-9][0-9]*)?$)");
    if (!std::regex_match(text, re)) return std::nullopt;
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer n(text.substr(0, slash));
    Integer d(text.substr(slash + 1));
    return Rational(n, d);
}

std::string format_rational(const Rational& r) {
    std::string s = num(r).str();
    if (den(r) != 1) {
        s += '/';
        s += den(r).str();
    }
    return s;
}

} // namespace fuzzpolar
