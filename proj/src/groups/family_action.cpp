#include "cubic7/groups/family_action.hpp"

#include <map>
#include <sstream>

#include "cubic7/groups/catalog.hpp"

namespace cubic7 {

namespace {

bool parallel(const std::vector<AlgebraicNumber>& u, const std::vector<AlgebraicNumber>& v) {
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (u[i] * v[j] != u[j] * v[i]) return false;
    return true;
}

NumberPoly shifted(const AlgebraicNumber& c, int power) { return NumberPoly::monomial(c, power); }

NumberPoly squarefree_part(const NumberPoly& p) {
    if (p.degree() <= 0) return p;
    NumberPoly g = gcd(p, p.derivative());
    return monic(divmod(p, g).first);
}

}  // namespace

ProjectiveMatrix induced_family_action(const ProjectiveMatrix& g) {
    if (g.dim() != 6) throw DimensionMismatch("family action needs a 6x6 matrix");
    auto basis = f21_basis();
    NumberMatrix r(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        auto coords = f21_coordinates(act(g.matrix(), basis[i]));
        if (!coords) throw NotInNormalizer("image of basis form " + std::to_string(i + 1) + " leaves the F21 family");
        for (std::size_t j = 0; j < 4; ++j) r(j, i) = coords->coeffs[j];
    }
    return ProjectiveMatrix(std::move(r));
}

std::array<int, 4> torus_weights() {
    auto basis = f21_basis();
    std::array<int, 4> w{};
    for (std::size_t i = 0; i < 4; ++i) {
        bool first = true;
        for (const auto& [m, c] : basis[i].terms()) {
            int weight = m.exps[1] + m.exps[3] + m.exps[5];
            if (first) {
                w[i] = weight;
                first = false;
            } else if (weight != w[i]) {
                throw MathError("basis form is not a torus eigenvector");
            }
        }
    }
    return w;
}

std::string CosetLabel::name() const {
    return "k^" + std::to_string(k_power) + " gtau^" + std::to_string(tau_power);
}

std::vector<std::pair<CosetLabel, ProjectiveMatrix>> normalizer_coset_reps() {
    std::vector<std::pair<CosetLabel, ProjectiveMatrix>> out;
    auto k = k_element(), tau = gtau();
    for (int n = 0; n < 3; ++n)
        for (int e = 0; e < 2; ++e) out.emplace_back(CosetLabel{n, e}, k.pow(n) * tau.pow(e));
    return out;
}

StabilizerReport stabilizer_check(const FamilyPoint& p) { return stabilizer_check(p, normalizer_coset_reps()); }

StabilizerReport stabilizer_check(const FamilyPoint& p,
                                  const std::vector<std::pair<CosetLabel, ProjectiveMatrix>>& reps) {
    if (p.tag != FamilyTag::F21 || p.coeffs.size() != 4) throw DimensionMismatch("stabilizer check expects an F21 point");
    bool nonzero = false;
    for (const auto& c : p.coeffs) nonzero = nonzero || !c.is_zero();
    if (!nonzero) throw MathError("zero form has no projective class");
    const auto& c = p.coeffs;
    auto w = torus_weights();
    auto f21 = build_f21();

    StabilizerReport report;
    for (const auto& [label, rep] : reps) {
        CosetSolution sol{label, false, NumberPoly::constant(1), {}, {}};
        auto v = induced_family_action(rep).matrix() * c;
        NumberPoly g;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j)
                g = gcd(g, shifted(v[i] * c[j], w[i]) - shifted(v[j] * c[i], w[j]));
        if (g.is_zero()) {
            sol.whole_torus = true;
            sol.condition = NumberPoly();
            report.infinite = true;
            report.cosets.push_back(std::move(sol));
            continue;
        }
        while (g.degree() > 0 && g.coeff(0).is_zero()) g = divmod(g, NumberPoly::x()).first;
        g = squarefree_part(g);
        sol.condition = g;
        if (g.degree() == 1) {
            sol.roots.push_back(-g.coeff(0) / g.coeff(1));
        } else if (g.degree() > 1) {
            report.all_roots_found = false;
        }
        for (const auto& t : sol.roots) {
            ProjectiveMatrix x = torus(t) * rep;
            ProjectiveMatrix acc = x;
            int order = -1;
            for (int m = 1; m <= 42; ++m, acc = acc * x)
                if (f21.contains(acc)) {
                    order = m;
                    break;
                }
            sol.orders.push_back(order);
            report.max_order = std::max(report.max_order, order);
        }
        report.quotient_order += static_cast<std::size_t>(std::max(g.degree(), 0));
        report.cosets.push_back(std::move(sol));
    }
    if (report.infinite) report.quotient_order = 0;
    return report;
}

std::string StabilizerReport::summary() const {
    std::ostringstream out;
    if (infinite) {
        out << "positive-dimensional stabilizer";
    } else {
        out << "|Stab/F21| = " << quotient_order << ", max order " << max_order;
    }
    for (const auto& s : cosets) {
        if (!s.whole_torus && s.condition.degree() <= 0) continue;
        out << "; " << s.label.name() << ": ";
        if (s.whole_torus) {
            out << "all t";
            continue;
        }
        for (std::size_t i = 0; i < s.roots.size(); ++i)
            out << (i ? ", " : "") << "t = " << s.roots[i].display() << " (order " << s.orders[i] << ")";
        if (s.roots.empty()) out << s.condition.degree() << " roots";
    }
    return out.str();
}

std::optional<std::array<AlgebraicNumber, 2>> pencil_coordinates(const Poly& h) {
    static const Poly f1 = l27_f1(), f2 = l27_f2();
    std::map<Monomial, std::size_t, GrlexDescending> index;
    for (const Poly* q : {&f1, &f2, &h})
        for (const auto& [m, c] : q->terms()) index.emplace(m, index.size());
    NumberMatrix a(index.size(), 2);
    std::vector<AlgebraicNumber> rhs(index.size());
    for (const auto& [m, c] : f1.terms()) a(index.at(m), 0) = c;
    for (const auto& [m, c] : f2.terms()) a(index.at(m), 1) = c;
    for (const auto& [m, c] : h.terms()) rhs[index.at(m)] = c;
    auto x = solve(a, rhs);
    if (!x) return std::nullopt;
    return std::array<AlgebraicNumber, 2>{(*x)[0], (*x)[1]};
}

PencilStabilizer pencil_stabilizer(const FamilyPoint& p) {
    if (p.tag != FamilyTag::L27 || p.coeffs.size() != 2) throw DimensionMismatch("pencil stabilizer expects an L27 point");
    if (p.coeffs[0].is_zero() && p.coeffs[1].is_zero()) throw MathError("zero form has no projective class");
    static const Poly f1 = l27_f1(), f2 = l27_f2();
    auto group = build_l27_c2();
    std::vector<ProjectiveMatrix> images;
    for (const auto& g : group.generators()) {
        NumberMatrix r(2, 2);
        std::size_t col = 0;
        for (const Poly* f : {&f1, &f2}) {
            auto coords = pencil_coordinates(act(g.matrix(), *f));
            if (!coords) throw NotInNormalizer("generator moves the pencil");
            r(0, col) = (*coords)[0];
            r(1, col) = (*coords)[1];
            ++col;
        }
        images.push_back(ProjectiveMatrix(std::move(r)));
    }
    auto image = MatrixGroup::generate(std::move(images), group.order());
    std::size_t kernel = group.order() / image.order();
    std::size_t fixing = 0;
    for (const auto& e : image.elements())
        if (parallel(e.matrix() * p.coeffs, p.coeffs)) ++fixing;
    std::size_t stab = kernel * fixing;
    return PencilStabilizer{group.order(), stab, stab == group.order()};
}

}  // namespace cubic7
