#include "cubic7/singular/pencil.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "cubic7/groups/catalog.hpp"
#include "cubic7/groups/family_action.hpp"

namespace cubic7 {

namespace {

const ProjectiveMatrix& cached_S() {
    static std::once_flag once;
    static std::optional<ProjectiveMatrix> s;
    std::call_once(once, [] { s.emplace(build_S()); });
    return *s;
}

std::vector<Poly> quadratic_monomials() {
    auto z = [](int i) { return Poly::variable(3, i); };
    return {z(0) * z(0), z(1) * z(1), z(2) * z(2), z(0) * z(1), z(0) * z(2), z(1) * z(2)};
}

const char* const kQuadraticNames[] = {"z1^2", "z2^2", "z3^2", "z1z2", "z1z3", "z2z3"};

// Quoted assignment: z2z3, z1^2, z1z3, z2^2, z1z3, z3^2.
constexpr std::array<int, 6> kQuotedSlots{5, 0, 4, 1, 4, 2};

AlgebraicNumber table_lambda(int sign) {
    return AlgebraicNumber(Rational(3, 4)) * (AlgebraicNumber(1) + AlgebraicNumber(sign) * sqrt_of(-7));
}

}  // namespace

FamilyPoint pencil_to_f21(const AlgebraicNumber& lambda) {
    Poly member = l27_f1() + lambda * l27_f2();
    auto coords = f21_coordinates(act(cached_S().matrix(), member));
    if (!coords) throw NotInNormalizer("S does not move the pencil member into the F21 family");
    return *coords;
}

FamilyPoint determinantal_target() { return FamilyPoint{FamilyTag::F21, {1, 0, -2, -1}}; }

std::vector<Poly> SurfaceParametrization::coordinates() const {
    auto q = quadratic_monomials();
    std::vector<Poly> out;
    for (int s : slots) out.push_back(q[static_cast<std::size_t>(s)]);
    return out;
}

std::string SurfaceParametrization::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < slots.size(); ++i) out += (i ? ", " : "") + std::string(kQuadraticNames[slots[i]]);
    return out + "]";
}

std::vector<SurfaceParametrization> singular_surface_parametrizations(const CubicForm& f) {
    auto grad = jacobian(f);
    auto q = quadratic_monomials();
    std::array<int, 6> perm{};
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<SurfaceParametrization> out;
    do {
        std::vector<Poly> images;
        for (int s : perm) images.push_back(q[static_cast<std::size_t>(s)]);
        bool singular = true;
        for (const auto& g : grad) {
            if (!g.substitute(images).is_zero()) {
                singular = false;
                break;
            }
        }
        if (singular) out.push_back(SurfaceParametrization{perm});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

DeterminantalCheck determinantal_check(const FamilyPoint& f21) {
    DeterminantalCheck out{false, false, false};
    auto c = f21.coeffs;
    if (c.size() != 4) throw DimensionMismatch("expected an F21 point");
    if (c[0].is_zero() && !c[1].is_zero()) {
        c = induced_family_action(gtau()).matrix() * c;
        out.used_gtau = true;
    }
    if (!c[0].is_zero() && c[1].is_zero() && !c[2].is_zero()) {
        AlgebraicNumber t = -c[2] / (AlgebraicNumber(2) * c[0]);
        auto moved = induced_family_action(torus(t)).matrix() * c;
        auto target = determinantal_target().coeffs;
        AlgebraicNumber scale = moved[0];
        bool same = true;
        for (std::size_t i = 0; i < 4; ++i) same = same && moved[i] == scale * target[i];
        out.reaches_target = same;
    }
    if (out.reaches_target) out.surface_singular = !singular_surface_parametrizations(family_embed(determinantal_target())).empty();
    return out;
}

std::vector<TableRow> l27_table_scan() {
    struct Spec {
        AlgebraicNumber lambda;
        std::string expected;
    };
    std::vector<Spec> specs{{table_lambda(1), "determinantal"},
                            {table_lambda(-1), "determinantal"},
                            {Rational(-3, 10), "7 nodes"},
                            {AlgebraicNumber(-15), "7 nodes"},
                            {Rational(-3, 2), "14 nodes"},
                            {AlgebraicNumber(-3), "14 nodes"}};
    std::vector<TableRow> rows;
    for (const auto& s : specs) {
        TableRow row{"f1 + (" + s.lambda.display() + ")*f2", s.lambda, s.expected, "", 0, false};
        FamilyPoint p = pencil_to_f21(s.lambda);
        auto ab = ab_plane_coordinates(p);
        if (ab) {
            auto points = singular_points((*ab)[0], (*ab)[1]);
            Poly form = f_ab((*ab)[0], (*ab)[1]);
            bool all_nodes = true;
            for (const auto& pt : points) all_nodes = all_nodes && classify(form, pt.coords).tag == SingularityTag::A1;
            row.singular_count = points.size();
            if (points.empty()) {
                row.computed = "smooth";
            } else if (all_nodes) {
                row.computed = std::to_string(points.size()) + " nodes";
            } else {
                row.computed = std::to_string(points.size()) + " points, not all nodes";
            }
        } else {
            auto det = determinantal_check(p);
            row.computed = det.reaches_target && det.surface_singular ? "determinantal" : "unrecognized";
        }
        row.matches = row.computed == row.expected;
        rows.push_back(std::move(row));
    }
    return rows;
}

Poly klein_sextic() {
    auto z = [](int i) { return Poly::variable(3, i); };
    return z(0).pow(5) * z(2) + z(1).pow(5) * z(0) + z(2).pow(5) * z(1) -
           AlgebraicNumber(5) * z(0).pow(2) * z(1).pow(2) * z(2).pow(2);
}

VeroneseResult veronese_sextic() {
    const auto& s = cached_S();
    auto g = scaling_g();
    Poly x1 = act(g.matrix(), act(s.matrix(), l27_f1() + table_lambda(-1) * l27_f2()));
    auto target = family_embed(determinantal_target());
    bool reaches = proportionality(x1, target).has_value();

    auto valid = singular_surface_parametrizations(target);
    if (valid.empty()) throw ParametrizationMismatch("no quadratic monomial assignment parametrizes the singular surface");
    auto differences = [](const SurfaceParametrization& p) {
        std::vector<int> d;
        for (int i = 0; i < 6; ++i)
            if (p.slots[static_cast<std::size_t>(i)] != kQuotedSlots[static_cast<std::size_t>(i)]) d.push_back(i);
        return d;
    };
    auto best = std::min_element(valid.begin(), valid.end(), [&](const auto& a, const auto& b) {
        return differences(a).size() < differences(b).size();
    });
    SurfaceParametrization chosen = *best;
    auto coords = chosen.coordinates();
    auto sextic = klein_sextic();

    VeroneseResult out{reaches, valid, chosen, differences(chosen), target.substitute(coords).is_zero(),
                       false, false, AlgebraicNumber(0), AlgebraicNumber(0)};
    auto restrict_to = [&](const Poly& f, bool& ok, AlgebraicNumber& scale) {
        auto r = act(g.matrix(), act(s.matrix(), f)).substitute(coords);
        auto c = proportionality(r, sextic);
        ok = c.has_value() && !c->is_zero();
        if (ok) scale = *c;
    };
    restrict_to(l27_f1(), out.f1_gives_sextic, out.f1_scale);
    restrict_to(l27_f2(), out.f2_gives_sextic, out.f2_scale);
    return out;
}

}  // namespace cubic7
