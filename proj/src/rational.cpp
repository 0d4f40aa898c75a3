#include "yangian/rational.hpp"

#include <stdexcept>

namespace yangian {

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) ++i;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    std::string num(text.substr(0, slash));
    if (!valid_int(num, true)) throw std::invalid_argument("malformed rational: " + std::string(text));
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    Rational out;
    if (slash == std::string_view::npos) {
        out = Rational(mpz_class(num));
    } else {
        std::string den(text.substr(slash + 1));
        if (!valid_int(den, false)) throw std::invalid_argument("malformed rational: " + std::string(text));
        mpz_class d(den);
        if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
        out = Rational(mpz_class(num), d);
        out.canonicalize();
    }
    return out;
}

Rational binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(out);
}

Rational power(const Rational& c, long k) {
    Rational out = 1;
    for (long i = 0; i < k; ++i) out *= c;
    return out;
}

}  // namespace yangian
