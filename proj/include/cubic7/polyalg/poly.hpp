#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cubic7/exactnum/algebraic.hpp"

namespace cubic7 {

constexpr int kMaxVariables = 8;

// Exponent vector; variables beyond the polynomial's count stay zero.
struct Monomial {
    std::array<std::uint8_t, kMaxVariables> exps{};

    Monomial() = default;
    Monomial(std::initializer_list<int> e);
    static Monomial variable(int i);

    int operator[](int i) const { return exps[static_cast<std::size_t>(i)]; }
    int degree() const;
    Monomial operator*(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return exps == o.exps; }
    std::string to_string(int nvars) const;
};

// Graded lexicographic order with x1 > x2 > ...; sorts larger monomials first.
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// All monomials of the given degree, largest first.
std::vector<Monomial> monomials_of_degree(int degree, int nvars);

// Sparse polynomial with no stored zero coefficients.
class Poly {
public:
    using TermMap = std::map<Monomial, AlgebraicNumber, GrlexDescending>;

    explicit Poly(int nvars = 6) : nvars_(nvars) {}
    static Poly variable(int nvars, int i);
    static Poly constant(int nvars, const AlgebraicNumber& c);
    static Poly term(int nvars, const Monomial& m, const AlgebraicNumber& c);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    AlgebraicNumber coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const AlgebraicNumber& c);

    int total_degree() const;
    bool is_homogeneous(int degree) const;

    Poly derivative(int i) const;
    AlgebraicNumber eval(const std::vector<AlgebraicNumber>& point) const;
    // Replaces x_i by images[i].
    Poly substitute(const std::vector<Poly>& images) const;
    Poly pow(int e) const;
    // Field holding every coefficient.
    FieldPtr coefficient_field() const;

    std::string to_string() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const AlgebraicNumber& s, const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    int nvars_;
    TermMap terms_;
};

// Homogeneous cubic in 6 or 7 variables.
using CubicForm = Poly;

// Terms like "3/2*x1^2*x2", constants zetaN, omega, sqrtN, sqrt-N and
// parenthesised subexpressions.
Poly parse_poly(std::string_view text, int nvars);

// Scalar c with a = c*b, if any.
std::optional<AlgebraicNumber> proportionality(const Poly& a, const Poly& b);

}  // namespace cubic7
