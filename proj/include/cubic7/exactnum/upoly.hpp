#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cubic7/errors.hpp"
#include "cubic7/exactnum/rational.hpp"

namespace cubic7 {

// Dense univariate polynomial over a field; coeffs()[i] multiplies x^i.
template <class T>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly constant(const T& v) { return UPoly(std::vector<T>{v}); }
    static UPoly monomial(const T& v, int k) {
        std::vector<T> c(static_cast<std::size_t>(k) + 1, T{});
        c[static_cast<std::size_t>(k)] = v;
        return UPoly(std::move(c));
    }
    static UPoly x() { return monomial(T{1}, 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    T coeff(int i) const {
        return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : T{};
    }
    const T& leading() const { return c_.back(); }
    const std::vector<T>& coeffs() const { return c_; }

    T eval(const T& at) const {
        T acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
        return acc;
    }

    UPoly derivative() const {
        std::vector<T> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * T(static_cast<long>(i)));
        return UPoly(std::move(d));
    }

    UPoly operator-() const {
        std::vector<T> r;
        for (const auto& v : c_) r.push_back(-v);
        return UPoly(std::move(r));
    }
    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T{});
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return UPoly(std::move(r));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T{});
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return UPoly(std::move(r));
    }
    friend UPoly operator*(const T& s, const UPoly& a) {
        std::vector<T> r;
        for (const auto& v : a.c_) r.push_back(s * v);
        return UPoly(std::move(r));
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

private:
    void trim() {
        using cubic7::is_zero;
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

template <class T>
std::pair<UPoly<T>, UPoly<T>> divmod(const UPoly<T>& a, const UPoly<T>& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<T> rem = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {UPoly<T>(), a};
    std::vector<T> quo(static_cast<std::size_t>(a.degree() - db + 1), T{});
    T inv_lead = T{1} / b.leading();
    for (int k = a.degree() - db; k >= 0; --k) {
        T q = rem[static_cast<std::size_t>(k + db)] * inv_lead;
        quo[static_cast<std::size_t>(k)] = q;
        using cubic7::is_zero;
        if (is_zero(q)) continue;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k + j)] =
                rem[static_cast<std::size_t>(k + j)] - q * b.coeffs()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {UPoly<T>(std::move(quo)), UPoly<T>(std::move(rem))};
}

template <class T>
UPoly<T> monic(const UPoly<T>& p) {
    if (p.is_zero()) return p;
    return (T{1} / p.leading()) * p;
}

template <class T>
UPoly<T> gcd(UPoly<T> a, UPoly<T> b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

// Returns (g, s) with g = gcd(a, m) monic and s*a = g mod m.
template <class T>
std::pair<UPoly<T>, UPoly<T>> xgcd_inverse(const UPoly<T>& a, const UPoly<T>& m) {
    UPoly<T> r0 = m, r1 = a, s0, s1 = UPoly<T>::constant(T{1});
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        UPoly<T> s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.is_zero()) return {r0, s0};
    T inv = T{1} / r0.leading();
    return {inv * r0, inv * s0};
}

using QPoly = UPoly<Rational>;

std::string to_string(const QPoly& p, const std::string& var = "x");
QPoly parse_qpoly(std::string_view text, char var);
QPoly squarefree(const QPoly& p);

// Sturm chain of a squarefree polynomial.
std::vector<QPoly> sturm_chain(const QPoly& p);
// Number of distinct real roots in (lo, hi].
int count_roots(const std::vector<QPoly>& chain, const Rational& lo, const Rational& hi);

}  // namespace cubic7
