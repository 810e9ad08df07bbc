#include "rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace coposit {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::optional<BigInt> parse_int(const std::string& s) {
    std::string t = s;
    bool neg = false;
    if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
        neg = t[0] == '-';
        t = t.substr(1);
    }
    if (!all_digits(t)) return std::nullopt;
    BigInt v(t);
    return neg ? -v : v;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) return std::nullopt;

    if (auto slash = s.find('/'); slash != std::string::npos) {
        auto num = parse_int(s.substr(0, slash));
        auto den = parse_int(s.substr(slash + 1));
        if (!num || !den || *den == 0) return std::nullopt;
        return Rational(*num, *den);
    }

    // decimal with optional exponent: [-]ddd[.ddd][e[-]dd]
    std::string mant = s;
    long expo = 0;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
        mant = s.substr(0, e);
        std::string es = s.substr(e + 1);
        auto ev = parse_int(es);
        if (!ev) return std::nullopt;
        if (*ev > 4096 || *ev < -4096) return std::nullopt;
        expo = static_cast<long>(*ev);
    }
    std::string digits = mant;
    long frac_digits = 0;
    if (auto dot = mant.find('.'); dot != std::string::npos) {
        digits = mant.substr(0, dot) + mant.substr(dot + 1);
        frac_digits = static_cast<long>(mant.size() - dot - 1);
    }
    auto num = parse_int(digits);
    if (!num) return std::nullopt;
    long net = expo - frac_digits;
    BigInt scale = 1;
    for (long i = 0; i < std::labs(net); ++i) scale *= 10;
    if (net >= 0) return Rational(*num * scale, 1);
    return Rational(*num, scale);
}

std::string rational_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

std::optional<BigInt> exact_kth_root(const BigInt& n, unsigned k) {
    if (n < 0) return std::nullopt;
    if (n == 0 || n == 1) return n;
    BigInt r = static_cast<BigInt>(std::llround(std::pow(static_cast<double>(n), 1.0 / k)));
    if (r < 1) r = 1;
    while (boost::multiprecision::pow(r, k) > n) --r;
    while (boost::multiprecision::pow(r + 1, k) <= n) ++r;
    if (boost::multiprecision::pow(r, k) == n) return r;
    return std::nullopt;
}

std::optional<Rational> exact_fourth_root(const Rational& r) {
    if (r < 0) return std::nullopt;
    auto n = exact_kth_root(numerator(r), 4);
    auto d = exact_kth_root(denominator(r), 4);
    if (!n || !d) return std::nullopt;
    return Rational(*n, *d);
}

}  // namespace coposit
