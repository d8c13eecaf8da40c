#include "cubic7/exactnum/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "cubic7/errors.hpp"

namespace cubic7 {

bool is_integral(const Rational& q) { return q.get_den() == 1; }

Integer floor_of(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil_of(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty rational");
    std::size_t slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (!valid_int(num) || !valid_int(den)) throw ParseError("bad rational '" + s + "'");
    Integer n(num), d(den);
    if (d == 0) throw DivisionByZero("rational with zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

Integer isqrt(const Integer& n) {
    if (sgn(n) < 0) throw MathError("isqrt of negative integer");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const Integer& n, Integer* root) {
    if (sgn(n) < 0) return false;
    Integer r = isqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

std::vector<long> factor(long n) {
    std::vector<long> out;
    n = std::labs(n);
    for (long p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

long squarefree_part(long n) {
    if (n == 0) return 0;
    long out = n < 0 ? -1 : 1;
    auto ps = factor(n);
    for (std::size_t i = 0; i < ps.size();) {
        std::size_t j = i;
        while (j < ps.size() && ps[j] == ps[i]) ++j;
        if ((j - i) % 2 == 1) out *= ps[i];
        i = j;
    }
    return out;
}

}  // namespace cubic7
