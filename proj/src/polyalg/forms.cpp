#include "cubic7/polyalg/forms.hpp"

#include <map>

namespace cubic7 {

namespace {

Poly lift(const Poly& p, const FieldPtr& f) {
    Poly r(p.nvars());
    for (const auto& [m, c] : p.terms()) r.add_term(m, coerce(c, f));
    return r;
}

Poly cubic(int i, int j, int k) {
    Monomial m;
    m.exps[static_cast<std::size_t>(i)]++;
    m.exps[static_cast<std::size_t>(j)]++;
    m.exps[static_cast<std::size_t>(k)]++;
    return Poly::term(6, m, AlgebraicNumber(1));
}

}  // namespace

Poly act(const NumberMatrix& a, const Poly& f) {
    int n = f.nvars();
    if (!a.square() || static_cast<int>(a.rows()) != n) throw DimensionMismatch("matrix size differs from variable count");
    FieldPtr field = compose_fields(common_field(a), f.coefficient_field());
    std::vector<Poly> images;
    for (int i = 0; i < n; ++i) {
        Poly y(n);
        for (int j = 0; j < n; ++j) {
            const auto& c = a(static_cast<std::size_t>(j), static_cast<std::size_t>(i));
            if (!c.is_zero()) y.add_term(Monomial::variable(j), coerce(c, field));
        }
        images.push_back(std::move(y));
    }
    return lift(f, field).substitute(images);
}

std::vector<Poly> invariant_subspace(const std::vector<NumberMatrix>& generators, int degree, int nvars) {
    auto basis = monomials_of_degree(degree, nvars);
    std::map<Monomial, std::size_t, GrlexDescending> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    std::size_t dim = basis.size();
    NumberMatrix stacked(dim * std::max<std::size_t>(generators.size(), 1), dim);
    for (std::size_t g = 0; g < generators.size(); ++g) {
        for (std::size_t j = 0; j < dim; ++j) {
            Poly image = act(generators[g], Poly::term(nvars, basis[j], AlgebraicNumber(1)));
            for (const auto& [m, c] : image.terms()) stacked(g * dim + index.at(m), j) = c;
            stacked(g * dim + j, j) = stacked(g * dim + j, j) - AlgebraicNumber(1);
        }
    }
    auto kernel = kernel_basis(stacked);
    if (kernel.empty()) return {};
    NumberMatrix rows(kernel.size(), dim);
    for (std::size_t r = 0; r < kernel.size(); ++r)
        for (std::size_t j = 0; j < dim; ++j) rows(r, j) = kernel[r][j];
    auto echelon = row_echelon(rows);
    std::vector<Poly> out;
    for (std::size_t r = 0; r < echelon.pivots.size(); ++r) {
        Poly p(nvars);
        for (std::size_t j = 0; j < dim; ++j) p.add_term(basis[j], echelon.reduced(r, j));
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<Poly> jacobian(const Poly& f) {
    std::vector<Poly> out;
    for (int i = 0; i < f.nvars(); ++i) out.push_back(f.derivative(i));
    return out;
}

NumberMatrix hessian_at(const Poly& f, int chart, const std::vector<AlgebraicNumber>& p) {
    int n = f.nvars();
    if (static_cast<int>(p.size()) != n || chart < 0 || chart >= n) throw DimensionMismatch("point or chart out of range");
    const AlgebraicNumber& pivot = p[static_cast<std::size_t>(chart)];
    if (pivot.is_zero()) throw ChartVanishes("coordinate " + std::to_string(chart + 1) + " of the point is zero");
    std::vector<AlgebraicNumber> q;
    for (const auto& v : p) q.push_back(v / pivot);
    std::vector<int> others;
    for (int i = 0; i < n; ++i)
        if (i != chart) others.push_back(i);
    NumberMatrix h(others.size(), others.size());
    for (std::size_t r = 0; r < others.size(); ++r) {
        Poly dr = f.derivative(others[r]);
        for (std::size_t c = r; c < others.size(); ++c) {
            h(r, c) = dr.derivative(others[c]).eval(q);
            h(c, r) = h(r, c);
        }
    }
    return h;
}

bool euler_relation_holds(const Poly& f) {
    int d = f.total_degree();
    if (d < 0) return true;
    Poly sum(f.nvars());
    for (int i = 0; i < f.nvars(); ++i) sum = sum + Poly::variable(f.nvars(), i) * f.derivative(i);
    return sum == AlgebraicNumber(d) * f;
}

bool gradient_vanishes(const Poly& f, const std::vector<AlgebraicNumber>& p) {
    for (const auto& g : jacobian(f))
        if (!g.eval(p).is_zero()) return false;
    return true;
}

std::vector<Poly> c7_monomials() {
    std::vector<Poly> out;
    for (int i = 0; i < 6; ++i) out.push_back(cubic(i, i, (i + 1) % 6));
    out.push_back(cubic(0, 2, 4));
    out.push_back(cubic(1, 3, 5));
    return out;
}

std::vector<Poly> f21_basis() {
    auto m = c7_monomials();
    return {m[0] + m[2] + m[4], m[1] + m[3] + m[5], m[6], m[7]};
}

Poly l27_f1() {
    Poly sum(6), cubes(6);
    for (int i = 0; i < 6; ++i) {
        Poly x = Poly::variable(6, i);
        sum = sum + x;
        cubes = cubes + x.pow(3);
    }
    return cubes - sum.pow(3);
}

Poly l27_f2() {
    std::vector<Poly> x;
    Poly sum(6);
    for (int i = 0; i < 6; ++i) {
        x.push_back(Poly::variable(6, i));
        sum = sum + x.back();
    }
    x.push_back(-sum);
    static const int triples[7][3] = {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {1, 5, 6}, {1, 3, 7}, {4, 5, 7}, {2, 6, 7}};
    Poly out(6);
    for (const auto& t : triples) out = out + x[t[0] - 1] * x[t[1] - 1] * x[t[2] - 1];
    return out;
}

Poly f_ab(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return family_embed({FamilyTag::F21, {AlgebraicNumber(1), AlgebraicNumber(1), a, b}});
}

Poly family_embed(const FamilyPoint& p) {
    std::vector<Poly> basis;
    switch (p.tag) {
        case FamilyTag::C7:
            basis = c7_monomials();
            break;
        case FamilyTag::F21:
            basis = f21_basis();
            break;
        case FamilyTag::L27:
            basis = {l27_f1(), l27_f2()};
            break;
    }
    if (p.coeffs.size() != basis.size()) throw DimensionMismatch("family point has the wrong number of coefficients");
    bool all_zero = true;
    for (const auto& c : p.coeffs) all_zero = all_zero && c.is_zero();
    if (all_zero) throw MathError("family point has all coefficients zero");
    Poly out(6);
    for (std::size_t i = 0; i < basis.size(); ++i) out = out + p.coeffs[i] * basis[i];
    return out;
}

FamilyPoint f21_to_c7(const FamilyPoint& p) {
    if (p.tag != FamilyTag::F21 || p.coeffs.size() != 4) throw DimensionMismatch("expected an F21 point");
    const auto& c = p.coeffs;
    return {FamilyTag::C7, {c[0], c[1], c[0], c[1], c[0], c[1], c[2], c[3]}};
}

std::optional<FamilyPoint> c7_coordinates(const Poly& f) {
    if (f.nvars() != 6) return std::nullopt;
    auto basis = c7_monomials();
    FamilyPoint p{FamilyTag::C7, {}};
    Poly rebuilt(6);
    for (const auto& b : basis) {
        p.coeffs.push_back(f.coeff(b.terms().begin()->first));
        rebuilt = rebuilt + p.coeffs.back() * b;
    }
    if (rebuilt != f) return std::nullopt;
    return p;
}

std::optional<FamilyPoint> f21_coordinates(const Poly& f) {
    auto c7 = c7_coordinates(f);
    if (!c7) return std::nullopt;
    const auto& c = c7->coeffs;
    if (c[0] != c[2] || c[0] != c[4] || c[1] != c[3] || c[1] != c[5]) return std::nullopt;
    return FamilyPoint{FamilyTag::F21, {c[0], c[1], c[6], c[7]}};
}

}  // namespace cubic7
