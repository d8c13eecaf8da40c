#include "cubic7/singular/singular.hpp"

#include <map>

#include "cubic7/exactnum/upoly.hpp"
#include "cubic7/groups/catalog.hpp"
#include "cubic7/groups/family_action.hpp"

namespace cubic7 {

namespace {

AlgebraicNumber omega_power(long e) { return root_of_unity(3, e, cyclotomic(3)); }

FieldPtr field_of(const AlgebraicNumber& x) { return x.field(); }

NumberPoly monic_squarefree(const NumberPoly& p) {
    if (p.degree() <= 0) return p;
    NumberPoly g = gcd(p, p.derivative());
    return monic(divmod(p, g).first);
}

}  // namespace

AlgebraicNumber discriminant_G(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    FieldPtr f = compose_fields(field_of(a), field_of(b));
    AlgebraicNumber x = coerce(a, f), y = coerce(b, f);
    AlgebraicNumber xy = x * y;
    return xy * xy - AlgebraicNumber(6) * xy + AlgebraicNumber(4) * x + AlgebraicNumber(4) * y - AlgebraicNumber(3);
}

int CurveMembership::count() const { return on_twist[0] + on_twist[1] + on_twist[2]; }

CurveMembership discriminant_curve(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    FieldPtr f = compose_fields(compose_fields(field_of(a), field_of(b)), cyclotomic(3));
    AlgebraicNumber x = coerce(a, f), y = coerce(b, f);
    CurveMembership m;
    for (int j = 0; j < 3; ++j) {
        AlgebraicNumber w = coerce(omega_power(-j), f);
        m.on_twist[static_cast<std::size_t>(j)] = discriminant_G(w * x, w * y).is_zero();
    }
    return m;
}

std::vector<SingularPoint> singular_points(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    FieldPtr field = compose_fields(compose_fields(field_of(a), field_of(b)), cyclotomic(21));
    AlgebraicNumber x = coerce(a, field), y = coerce(b, field);
    Poly form = f_ab(a, b);
    std::vector<SingularPoint> out;
    for (int k = 0; k < 3; ++k) {
        AlgebraicNumber wk = coerce(omega_power(k), field);
        // a + 2 tau + w^k tau^2 = 0 and b tau^2 + 2 w^k tau + 1 = 0.
        NumberPoly first(std::vector<AlgebraicNumber>{x, AlgebraicNumber(2), wk});
        NumberPoly second(std::vector<AlgebraicNumber>{AlgebraicNumber(1), AlgebraicNumber(2) * wk, y});
        NumberPoly common = monic_squarefree(gcd(first, second));
        if (common.degree() <= 0) continue;
        if (common.degree() > 1) throw MathError("tau equations share two distinct roots");
        AlgebraicNumber tau = -common.coeff(0);
        for (int l = 0; l < 7; ++l) {
            AlgebraicNumber z = root_of_unity(7, l, field);
            AlgebraicNumber zi = z.inverse();
            AlgebraicNumber t = zi * tau;
            AlgebraicNumber wi = wk.inverse();
            SingularPoint p;
            p.coords = {AlgebraicNumber(1), t, wk * z, t * wk * zi * zi, wi * zi * zi, t * wi * zi * zi * zi};
            p.parametrized = true;
            p.k = k;
            p.l = l;
            p.t = t;
            if (!gradient_vanishes(form, p.coords))
                throw MathError("parametrized point fails the gradient check at k=" + std::to_string(k) +
                                ", l=" + std::to_string(l));
            bool duplicate = false;
            for (const auto& q : out) duplicate = duplicate || q.coords == p.coords;
            if (!duplicate) out.push_back(std::move(p));
        }
    }
    return out;
}

std::string to_string(SingularityTag tag) {
    switch (tag) {
        case SingularityTag::A1: return "A1";
        case SingularityTag::A2: return "A2";
        case SingularityTag::higher_order: return "higher_order";
        case SingularityTag::higher_corank: return "higher_corank";
        case SingularityTag::nonisolated: return "nonisolated";
    }
    return "unknown";
}

SingularityClass classify_affine(const Poly& f, const std::vector<AlgebraicNumber>& p) {
    int n = f.nvars();
    if (static_cast<int>(p.size()) != n) throw DimensionMismatch("point length differs from variable count");
    if (!f.eval(p).is_zero()) throw NotSingular("point is not on the hypersurface");
    if (!gradient_vanishes(f, p)) throw NotSingular("gradient does not vanish at the point");
    std::size_t dim = static_cast<std::size_t>(n);
    NumberMatrix h(dim, dim);
    for (int i = 0; i < n; ++i) {
        Poly di = f.derivative(i);
        for (int j = i; j < n; ++j) {
            h(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = di.derivative(j).eval(p);
            h(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = h(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        }
    }
    std::size_t r = rank(h);
    int corank = n - static_cast<int>(r);
    SingularityClass c{SingularityTag::A1, corank, r, std::nullopt};
    if (corank == 0) return c;
    if (corank > 1) {
        c.tag = SingularityTag::higher_corank;
        return c;
    }
    auto v = kernel_basis(h).front();
    std::vector<Poly> line;
    for (std::size_t i = 0; i < dim; ++i)
        line.push_back(Poly::constant(1, p[i]) + v[i] * Poly::variable(1, 0));
    Poly restricted = f.substitute(line);
    AlgebraicNumber cubic = restricted.coeff(Monomial{3});
    c.cubic_term = cubic;
    c.tag = cubic.is_zero() ? SingularityTag::higher_order : SingularityTag::A2;
    return c;
}

SingularityClass classify(const CubicForm& f, const std::vector<AlgebraicNumber>& p) {
    int n = f.nvars();
    if (static_cast<int>(p.size()) != n) throw DimensionMismatch("point length differs from variable count");
    int chart = -1;
    for (int i = 0; i < n && chart < 0; ++i)
        if (!p[static_cast<std::size_t>(i)].is_zero()) chart = i;
    if (chart < 0) throw NotSingular("zero vector is not a projective point");
    if (!gradient_vanishes(f, p)) throw NotSingular("gradient does not vanish at the point");
    std::vector<Poly> images;
    std::vector<AlgebraicNumber> q;
    AlgebraicNumber pivot = p[static_cast<std::size_t>(chart)];
    for (int i = 0, j = 0; i < n; ++i) {
        if (i == chart) {
            images.push_back(Poly::constant(n - 1, 1));
            continue;
        }
        images.push_back(Poly::variable(n - 1, j++));
        q.push_back(p[static_cast<std::size_t>(i)] / pivot);
    }
    return classify_affine(f.substitute(images), q);
}

ZeroPatternReport zero_pattern_check(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    Poly form = f_ab(a, b);
    auto grad = jacobian(form);
    ZeroPatternReport report;
    for (unsigned mask = 1; mask < 63; ++mask) {
        ++report.patterns_checked;
        std::vector<Poly> images;
        std::vector<int> live;
        for (int i = 0; i < 6; ++i) {
            bool zero = mask & (1u << i);
            images.push_back(zero ? Poly(6) : Poly::variable(6, i));
            if (!zero) live.push_back(i);
        }
        // Equations of degree 3 in the nonzero variables; every such monomial is nonzero at a solution.
        std::vector<Poly> equations;
        for (int i = 0; i < 6; ++i) {
            Poly g = grad[static_cast<std::size_t>(i)].substitute(images);
            if (g.is_zero()) continue;
            if (mask & (1u << i)) {
                for (int j : live) equations.push_back(Poly::variable(6, j) * g);
            } else {
                equations.push_back(Poly::variable(6, i) * g);
            }
        }
        std::map<Monomial, std::size_t, GrlexDescending> unknowns;
        for (const auto& e : equations)
            for (const auto& [m, c] : e.terms()) unknowns.emplace(m, 0);
        if (unknowns.empty()) {
            report.unresolved.push_back(mask);
            continue;
        }
        std::size_t idx = 0;
        for (auto& [m, i] : unknowns) i = idx++;
        NumberMatrix system(equations.size(), unknowns.size());
        for (std::size_t r = 0; r < equations.size(); ++r)
            for (const auto& [m, c] : equations[r].terms()) system(r, unknowns.at(m)) = c;
        auto kernel = kernel_basis(system);
        bool excluded = false;
        for (std::size_t u = 0; u < unknowns.size() && !excluded; ++u) {
            bool forced_zero = true;
            for (const auto& v : kernel) forced_zero = forced_zero && v[u].is_zero();
            excluded = forced_zero;
        }
        if (!excluded) report.unresolved.push_back(mask);
    }
    return report;
}

std::optional<std::array<AlgebraicNumber, 2>> ab_plane_coordinates(const FamilyPoint& p) {
    if (p.tag != FamilyTag::F21 || p.coeffs.size() != 4) throw DimensionMismatch("expected an F21 point");
    const auto& c = p.coeffs;
    if (c[0].is_zero() || c[1].is_zero()) return std::nullopt;
    AlgebraicNumber t = c[0] / c[1];
    auto moved = induced_family_action(torus(t)).matrix() * c;
    if (moved[0] != moved[1]) throw MathError("torus normalization failed");
    AlgebraicNumber s = moved[0].inverse();
    return std::array<AlgebraicNumber, 2>{s * moved[2], s * moved[3]};
}

}  // namespace cubic7
