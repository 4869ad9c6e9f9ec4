#include "derivsamp/rational.hpp"

#include "derivsamp/error.hpp"

#include <cctype>

namespace derivsamp {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    Rational out;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw InvalidArgument("malformed rational '" + std::string(text) + "'");
        BigInt d{std::string(den)};
        if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
        out = Rational(BigInt(std::string(num)), d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto ip = s.substr(0, dot);
        auto fp = s.substr(dot + 1);
        if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty()))
            throw InvalidArgument("malformed decimal '" + std::string(text) + "'");
        BigInt scale = 1;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
        BigInt whole = ip.empty() ? BigInt(0) : BigInt(std::string(ip));
        BigInt frac = fp.empty() ? BigInt(0) : BigInt(std::string(fp));
        out = Rational(whole * scale + frac, scale);
    } else {
        if (!all_digits(s)) throw InvalidArgument("malformed rational '" + std::string(text) + "'");
        out = Rational(BigInt(std::string(s)));
    }
    out.canonicalize();
    return negative ? Rational(-out) : out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

BigInt factorial(long n) {
    if (n < 0) throw InvalidArgument("factorial of a negative number");
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

Rational pow(const Rational& base, unsigned exponent) {
    Rational out;
    mpz_pow_ui(mpq_numref(out.get_mpq_t()), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(mpq_denref(out.get_mpq_t()), base.get_den_mpz_t(), exponent);
    return out;
}

}  // namespace derivsamp
