#include "idealflow/scalar.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <system_error>

namespace idealflow {

double to_double(const Rational& x) { return x.get_d(); }

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) {
        throw DomainError("cannot convert non-finite float to rational");
    }
    Rational r;
    mpq_set_d(r.get_mpq_t(), x);  // exact: doubles are dyadic rationals
    return r;
}

std::string format_scalar(const Rational& x) {
    if (x.get_den() == 1) {
        return x.get_num().get_str();
    }
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string format_scalar(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc()) {
        std::snprintf(buf, sizeof(buf), "%.17g", x);
        return buf;
    }
    return std::string(buf, ptr);
}

namespace {

bool is_integer_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view token) {
    const auto slash = token.find('/');
    std::string_view num = token.substr(0, slash);
    if (!is_integer_token(num)) {
        throw DomainError("invalid rational literal '" + std::string(token) + "'");
    }
    Integer p(std::string(num), 10);
    if (slash == std::string_view::npos) {
        return Rational(p);
    }
    std::string_view den = token.substr(slash + 1);
    if (!is_integer_token(den) || den[0] == '-' || den[0] == '+') {
        throw DomainError("invalid rational literal '" + std::string(token) + "'");
    }
    Integer q(std::string(den), 10);
    if (q == 0) {
        throw DomainError("zero denominator in '" + std::string(token) + "'");
    }
    Rational r(p, q);
    r.canonicalize();
    return r;
}

double parse_double(std::string_view token) {
    if (token.empty() || token.find('/') != std::string_view::npos) {
        throw DomainError("invalid float literal '" + std::string(token) + "'");
    }
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw DomainError("invalid float literal '" + std::string(token) + "'");
    }
    return value;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

}  // namespace idealflow
