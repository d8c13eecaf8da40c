#include "cubic7/cli/harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "cubic7/arithgrp/hilbert.hpp"
#include "cubic7/gitstab/stability.hpp"
#include "cubic7/groups/catalog.hpp"
#include "cubic7/groups/family_action.hpp"
#include "cubic7/polyalg/forms.hpp"
#include "cubic7/singular/pencil.hpp"
#include "cubic7/singular/singular.hpp"

namespace cubic7 {

namespace {

using json = nlohmann::json;
using Certificate = std::vector<std::pair<std::string, std::string>>;

Check verdict(std::string id, std::string citation, bool ok, Certificate cert = {}) {
    return {std::move(id), std::move(citation), ok ? Verdict::pass : Verdict::fail, "", std::move(cert)};
}

Check flag(std::string id, std::string citation, std::string explanation, Certificate cert = {}) {
    return {std::move(id), std::move(citation), Verdict::flagged, std::move(explanation), std::move(cert)};
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string part;
    while (std::getline(in, part, sep)) {
        part = trim(part);
        if (!part.empty()) out.push_back(part);
    }
    return out;
}

template <typename T>
std::string join(const std::vector<T>& v, const std::string& sep) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
    return out.str();
}

std::string int_matrix_string(const IntMatrix& m) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? ", " : "") << m(i, j);
        out << "]";
    }
    out << "]";
    return out.str();
}

json int_matrix_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
        rows.push_back(row);
    }
    return rows;
}

json number_matrix_json(const NumberMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).display());
        rows.push_back(row);
    }
    return rows;
}

std::string ints(const std::vector<Integer>& v) {
    std::vector<std::string> s;
    for (const auto& x : v) s.push_back(x.get_str());
    return "(" + join(s, ",") + ")";
}

SupportPattern pattern_of(GitFamily family, std::initializer_list<int> slots) {
    unsigned m = 0;
    for (int s : slots) m |= 1u << (s - 1);
    return {family, m};
}

FamilyPoint f21_point(std::vector<AlgebraicNumber> c) { return FamilyPoint{FamilyTag::F21, std::move(c)}; }

// ---- suites ----

std::vector<Check> suite_invariant_spaces(const SuiteConfig&) {
    std::vector<Check> out;
    auto c7 = invariant_subspace({g7().matrix()}, 3, 6);
    auto f21 = invariant_subspace({g7().matrix(), g3().matrix()}, 3, 6);
    auto matches = [](const std::vector<Poly>& basis, const std::vector<Poly>& expected) {
        if (basis.size() != expected.size()) return false;
        for (const auto& e : expected) {
            bool found = false;
            for (const auto& b : basis) found = found || proportionality(b, e).has_value();
            if (!found) return false;
        }
        return true;
    };
    auto listing = [](const std::vector<Poly>& basis) {
        std::vector<std::string> s;
        for (const auto& p : basis) s.push_back(p.to_string());
        return join(s, "; ");
    };
    out.push_back(verdict("c7-dimension", "cubic forms invariant under the order 7 element span 8 dimensions",
                          c7.size() == 8, {{"dimension", std::to_string(c7.size())}}));
    out.push_back(verdict("c7-basis", "the order 7 invariants are the eight listed monomials", matches(c7, c7_monomials()),
                          {{"basis", listing(c7)}}));
    out.push_back(verdict("f21-dimension", "cubic forms invariant under F21 span 4 dimensions", f21.size() == 4,
                          {{"dimension", std::to_string(f21.size())}}));
    out.push_back(verdict("f21-basis", "the F21 invariants are the four listed orbit sums", matches(f21, f21_basis()),
                          {{"basis", listing(f21)}}));
    return out;
}

std::vector<Check> suite_invariant_ring(const SuiteConfig& config) {
    std::vector<Check> out;
    long top = config.bound("invariant-ring", 12);
    AlgebraicNumber w = zeta(3);
    NumberMatrix gen(2, 2);
    gen(0, 1) = w;
    gen(1, 0) = w;
    gen(0, 0) = AlgebraicNumber(0);
    gen(1, 1) = AlgebraicNumber(0);
    Poly s = parse_poly("x1 + x2", 2), d = parse_poly("x1 - x2", 2);
    Poly x = s.pow(3), y = d.pow(6), z = s * d.pow(2);
    bool invariant = act(gen, x) == x && act(gen, y) == y && act(gen, z) == z;
    out.push_back(verdict("generators-invariant", "(a+b)^3, (a-b)^6, (a+b)(a-b)^2 are invariant under (a,b) -> (wb, wa)",
                          invariant, {{"x", x.to_string()}, {"y", y.to_string()}, {"z", z.to_string()}}));
    out.push_back(verdict("relation", "the three generators satisfy xy = z^3", x * y == z.pow(3)));
    // Hilbert function of C[x,y,z]/(xy - z^3) with weights (3,6,3): normal monomials have z-degree below 3.
    bool dims_match = true;
    std::vector<std::string> dims;
    for (long n = 1; n <= top; ++n) {
        std::size_t expected = 0;
        for (long k = 0; k < 3; ++k)
            for (long j = 0; 6 * j + 3 * k <= n; ++j)
                if ((n - 6 * j - 3 * k) % 3 == 0) ++expected;
        std::size_t got = invariant_subspace({gen}, static_cast<int>(n), 2).size();
        dims.push_back(std::to_string(got));
        dims_match = dims_match && got == expected;
    }
    out.push_back(verdict("hilbert-function", "invariant dimensions per degree match the quotient ring C[x,y,z]/(xy - z^3)",
                          dims_match, {{"dimensions", join(dims, ",")}}));
    return out;
}

std::vector<Check> suite_git(GitFamily family) {
    std::vector<Check> out;
    auto entries = git_sweep(family);
    std::size_t expected = family == GitFamily::C7 ? 256 : 16;
    out.push_back(verdict("pattern-count", "every support pattern of the family is covered", entries.size() == expected,
                          {{"patterns", std::to_string(entries.size())}}));
    std::size_t agree = 0, certified = 0, witnesses = 0;
    std::string first_disagreement;
    for (const auto& e : entries) {
        if (e.oracle == e.closed_form) ++agree;
        else if (first_disagreement.empty()) first_disagreement = e.pattern.to_string();
        for (auto [w, strict] : {std::pair{e.unstable_witness, true}, std::pair{e.nonstable_witness, false}}) {
            if (!w) continue;
            ++witnesses;
            if (certificate_holds(e.pattern, *w, strict)) ++certified;
        }
    }
    Certificate cert{{"agreeing", std::to_string(agree)}};
    if (!first_disagreement.empty()) cert.push_back({"first_disagreement", first_disagreement});
    std::string name = family == GitFamily::C7 ? "C7" : "F21";
    out.push_back(verdict("oracle-vs-closed-form", "the LP oracle classification equals the closed form stability criterion for " + name,
                          agree == entries.size(), cert));
    out.push_back(verdict("witnesses", "every destabilizing one-parameter subgroup found is a valid certificate", certified == witnesses,
                          {{"witnesses", std::to_string(witnesses)}}));
    if (family == GitFamily::C7) {
        OnePS r1{{-25, -1, 3, 1, -1, 23}}, r2{{-8, -5, 10, 1, -2, 4}};
        out.push_back(verdict("quoted-unstable-certificate",
                              "(-25,-1,3,1,-1,23) strictly destabilizes the support missing a1 and a7",
                              certificate_holds(pattern_of(GitFamily::C7, {2, 3, 4, 5, 6, 8}), r1, true),
                              {{"weights", r1.to_string()}}));
        out.push_back(verdict("quoted-nonstable-certificate", "(-8,-5,10,1,-2,4) weakly destabilizes the support missing a1",
                              certificate_holds(pattern_of(GitFamily::C7, {2, 3, 4, 5, 6, 7, 8}), r2, false),
                              {{"weights", r2.to_string()}}));
    }
    return out;
}

std::vector<Check> suite_singular(const SuiteConfig& config) {
    std::vector<Check> out;
    auto pts = singular_points(1, 1);
    bool all_quoted = pts.size() == 7;
    for (int l = 0; l < 7 && all_quoted; ++l) {
        auto z = [l](int e) { return root_of_unity(7, e * l, cyclotomic(7)); };
        std::vector<AlgebraicNumber> q{1, -z(6), z(1), -z(4), z(5), -z(3)};
        bool found = false;
        for (const auto& p : pts) found = found || p.coords == q;
        all_quoted = all_quoted && found;
    }
    out.push_back(verdict("a2-points", "the gradient of F_{1,1} vanishes exactly at the 7 quoted points", all_quoted,
                          {{"points", std::to_string(pts.size())}}));
    Poly f11 = f_ab(1, 1);
    bool all_a2 = !pts.empty();
    for (const auto& p : pts) all_a2 = all_a2 && classify(f11, p.coords).tag == SingularityTag::A2;
    out.push_back(verdict("a2-class", "each singular point of F_{1,1} is of type A2", all_a2));

    long count = config.bound("singular", 50);
    std::mt19937 rng(config.seed);
    std::uniform_int_distribution<int> num(-7, 7), den(1, 4), branch(0, 2);
    long agree = 0, on_curve = 0, seven = 0;
    for (long trial = 0; trial < count; ++trial) {
        AlgebraicNumber a, b;
        if (trial % 2 == 0) {
            Rational tau(num(rng), den(rng));
            tau.canonicalize();
            if (tau == 0) tau = 2;
            AlgebraicNumber wk = root_of_unity(3, branch(rng), cyclotomic(3));
            AlgebraicNumber t(tau);
            a = AlgebraicNumber(-2) * t - wk * t * t;
            b = AlgebraicNumber(-2) * wk / t - (t * t).inverse();
        } else {
            Rational x(num(rng), den(rng)), y(num(rng), den(rng));
            x.canonicalize();
            y.canonicalize();
            a = x;
            b = y;
        }
        auto m = discriminant_curve(a, b);
        auto sp = singular_points(a, b);
        if (!sp.empty() == (m.count() > 0)) ++agree;
        if (m.count() == 1) {
            ++on_curve;
            if (sp.size() == 7) ++seven;
        }
    }
    out.push_back(verdict("sweep", "on a seeded random sweep F_{a,b} is singular exactly on a twist of the discriminant curve",
                          agree == count && seven == on_curve && on_curve > 0,
                          {{"points", std::to_string(count)}, {"on_curve", std::to_string(on_curve)},
                           {"seed", std::to_string(config.seed)}}));
    auto nodal = singular_points(Rational(3, 4), 0);
    bool a1 = nodal.size() == 7;
    for (const auto& p : nodal) a1 = a1 && classify(f_ab(Rational(3, 4), 0), p.coords).tag == SingularityTag::A1;
    out.push_back(verdict("a1-points", "a point on the curve off the A2 orbit has exactly 7 singular points, all A1", a1,
                          {{"a", "3/4"}, {"b", "0"}, {"points", std::to_string(nodal.size())}}));
    return out;
}

std::vector<Check> suite_l27(const SuiteConfig&) {
    std::vector<Check> out;
    auto e = build_E();
    out.push_back(verdict("e-square", "E^2 = (162)(457)", e.square_matches));
    out.push_back(verdict("e-normalizes", "E normalizes L2(7)", e.normalizes_l27));
    auto f1 = l27_f1(), f2 = l27_f2();
    auto r2 = sqrt_of(2);
    out.push_back(verdict("e-prime-f1", "E' sends f1 to (3 sqrt2 / 2) f2",
                          act(e.prime.matrix(), f1) == AlgebraicNumber(Rational(3, 2)) * r2 * f2));
    out.push_back(verdict("e-prime-f2", "E' sends f2 to (sqrt2 / 3) f1",
                          act(e.prime.matrix(), f2) == AlgebraicNumber(Rational(1, 3)) * r2 * f1));
    auto s = build_S();
    bool intertwines = (s * g7_model() * s.inverse()).matrix() == g7().matrix() &&
                       (s * g3_model() * s.inverse()).matrix() == g3().matrix();
    out.push_back(verdict("s-intertwiner", "S conjugates the permutation model generators to g7 and g3", intertwines));
    for (const auto& c : conjugation_identities())
        out.push_back(verdict("identity:" + c.name, "conjugation identity " + c.name, c.holds));
    for (const auto& row : l27_table_scan())
        out.push_back(verdict("pencil-row:" + row.equation, "singular member of the L2(7) pencil has the listed singular locus",
                              row.matches, {{"expected", row.expected}, {"computed", row.computed}}));
    auto v = veronese_sextic();
    out.push_back(verdict("sextic-f1", "restricting f1 to the Veronese surface gives the Klein sextic up to scalar",
                          v.f1_gives_sextic, {{"scale", v.f1_scale.display()}}));
    out.push_back(verdict("sextic-f2", "restricting f2 to the Veronese surface gives the same sextic up to scalar",
                          v.f2_gives_sextic, {{"scale", v.f2_scale.display()}}));
    out.push_back(verdict("veronese-in-fourfold", "the Veronese surface lies in the determinantal fourfold", v.locus_in_fourfold));
    if (v.differing_slots.empty()) {
        out.push_back(verdict("veronese-parametrization", "the quoted monomial parametrization is correct", true));
    } else {
        std::vector<std::string> slots;
        for (int i : v.differing_slots) slots.push_back(std::to_string(i));
        out.push_back(flag("veronese-parametrization", "the quoted monomial parametrization is correct",
                           "quoted list repeats z1z3 and omits z1z2; derived assignment differs in slot(s) " + join(slots, ","),
                           {{"derived", v.chosen.to_string()}}));
    }
    return out;
}

std::vector<Check> suite_lattices(const SuiteConfig& config) {
    std::vector<Check> out;
    auto diag = [](const Lattice& l) {
        auto d = smith_normal_form(l.gram()).d;
        std::vector<Integer> v;
        for (std::size_t i = 0; i < d.rows(); ++i) v.push_back(abs(d(i, i)));
        return v;
    };
    auto d1 = diag(transcendental_rank3()), d2 = diag(transcendental_rank4());
    out.push_back(verdict("snf-t1", "Smith form of the rank 3 Gram matrix is diag(1,7,84)",
                          d1 == std::vector<Integer>{1, 7, 84}, {{"diagonal", ints(d1)}}));
    out.push_back(verdict("snf-t2", "Smith form of the rank 4 Gram matrix is diag(1,7,7,21)",
                          d2 == std::vector<Integer>{1, 7, 7, 21}, {{"diagonal", ints(d2)}}));
    std::vector<std::tuple<std::string, Lattice, int>> milgram{{"t1", transcendental_rank3(), 7},
                                                               {"t2", transcendental_rank4(), 0},
                                                               {"u", hyperbolic_plane(), 0},
                                                               {"a2", a2_lattice(), 2}};
    for (const auto& [name, l, phase] : milgram) {
        auto r = milgram_phase(l);
        out.push_back(verdict("milgram-" + name, "Gauss sum phase of the discriminant form equals the signature mod 8",
                              r.matches && r.phase == phase,
                              {{"phase", std::to_string(r.phase)}, {"signature_mod8", std::to_string(r.signature_mod8)}}));
    }
    long bound = config.bound("lattices", 200);
    auto hit = isotropic_search(transcendental_rank3(), bound, config.parallelism);
    out.push_back(verdict("t1-anisotropic-box", "the rank 3 lattice has no isotropic vector in the search box", !hit,
                          {{"bound", std::to_string(bound)}, {"hit", hit ? ints(*hit) : "none"}}));
    auto half = half_norm_form(transcendental_rank3());
    out.push_back(verdict("t1-mod4", "the half norm form of the rank 3 lattice has no primitive zero mod 4",
                          local_obstruction(half, 4), {{"form", "-x1^2 + x1*x2 + 5*x2^2 - 14*x3^2"}}));
    auto quat = parse_quadratic_form("x1^2 - 21*x2^2 - 6*x3^2 + 126*x4^2", 4);
    out.push_back(verdict("quaternion-mod49", "the reduced norm form has no primitive zero mod 49", local_obstruction(quat, 49)));
    return out;
}

std::vector<Check> suite_table2(const SuiteConfig& config) {
    std::vector<Check> out;
    auto r = verify_table2(config.bound("table2", 6));
    for (const auto& row : r.rows) {
        std::string t = to_string(row.representative.type);
        out.push_back(verdict("member" + t, "the listed representative is an integral member of the group", row.member,
                              {{"representative", row.representative.to_string()},
                               {"image", int_matrix_string(gamma2_member(row.representative))}}));
        out.push_back(verdict("z3" + t, "the listed Z/3 column matches the discriminant action",
                              (row.z3 == Z3Action::preserves) == row.quoted_preserves, {{"computed", to_string(row.z3)}}));
        if (row.quoted_label == row.computed_label) {
            out.push_back(verdict("label" + t, "the listed coset label matches the composition law", true,
                                  {{"label", to_string(row.computed_label)}}));
        } else {
            out.push_back(flag("label" + t, "the listed coset label matches the composition law",
                               "two rows share the listed label " + to_string(row.quoted_label) + "; products give " +
                                   to_string(row.computed_label),
                               {{"quoted", to_string(row.quoted_label)}, {"computed", to_string(row.computed_label)}}));
        }
    }
    out.push_back(verdict("elementary-abelian", "coset labels compose as an elementary abelian group of order 8", r.labels_form_group));
    out.push_back(verdict("z3-column", "the Z/3 column agrees row by row", r.z3_column_matches));
    out.push_back(verdict("closure", "products of sampled identity coset members stay in that coset", r.cosets_closed));
    out.push_back(verdict("normal", "conjugating the identity coset by each representative stays in it", r.normal));
    auto scan = rank3_isometry_scan(3);
    out.push_back(verdict("box-completeness", "every SO+ isometry with entries at most 3 comes from exactly one typed element",
                          scan.special == scan.retyped && scan.stray_retypes == 0 && scan.special > 0,
                          {{"isometries", std::to_string(scan.isometries)}, {"special", std::to_string(scan.special)},
                           {"retyped", std::to_string(scan.retyped)}}));
    return out;
}

std::vector<Check> suite_table3(const SuiteConfig& config) {
    std::vector<Check> out;
    auto r = verify_table3(static_cast<unsigned>(config.bound("table3", 20)));
    const Z3Action expected[] = {Z3Action::preserves, Z3Action::negates, Z3Action::negates, Z3Action::preserves};
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        const auto& row = r.rows[i];
        out.push_back(verdict("row" + to_string(row.representative.type), "the listed pair maps to an integral isometry",
                              preserves_gram(row.image, transcendental_rank4()) && row.z3 == expected[i],
                              {{"representative", row.representative.to_string()}, {"image", int_matrix_string(row.image)},
                               {"z3", to_string(row.z3)}}));
    }
    out.push_back(verdict("klein-four", "the four types compose as a Klein four group", r.klein_four));
    out.push_back(verdict("normal", "the identity coset is normalized by each representative", r.normal));
    out.push_back(verdict("excluded-residues", "no residue class mod 4 of the (2,42,6,14) orbit meets parity, norm and determinant rule",
                          r.excluded_residues == 0, {{"survivors", std::to_string(r.excluded_residues)}}));
    out.push_back(verdict("excluded-box", "no small (2,42,6,14) octuple yields a member", r.excluded_rejected));
    return out;
}

std::vector<Check> suite_hilbert(const SuiteConfig& config) {
    std::vector<Check> out;
    long count = config.bound("hilbert", 100);
    auto sample = hilbert_sample(static_cast<unsigned>(count), 40, config.seed);
    std::size_t members = 0, round_trips = 0;
    for (const auto& m : sample) {
        if (!hilbert_member(m)) continue;
        ++members;
        auto rt = hilbert_roundtrip(m);
        if (rt.identity_coset && rt.round_trips && preserves_gram(rt.image, transcendental_rank4())) ++round_trips;
    }
    out.push_back(verdict("roundtrip", "seeded Hilbert group elements map into the identity coset and back",
                          static_cast<long>(sample.size()) == count && members == sample.size() && round_trips == sample.size(),
                          {{"count", std::to_string(sample.size())}, {"seed", std::to_string(config.seed)}}));
    auto h = sample_rank4_identity(static_cast<unsigned>(count), config.seed);
    std::size_t pulled = 0;
    for (const auto& e : h) {
        auto [h1, h2] = e.pair();
        NumberMatrix m = hilbert_preimage(h1);
        if (hilbert_member(m) && hilbert_map(m).second == h2) ++pulled;
    }
    out.push_back(verdict("pullback", "sampled identity coset elements pull back to matrices meeting the four ideal conditions",
                          pulled == h.size(), {{"count", std::to_string(h.size())}}));
    return out;
}

std::vector<Check> suite_quaternion(const SuiteConfig& config) {
    std::vector<Check> out;
    long box = config.bound("quaternion", 6);
    auto units = quaternion_units(box);
    std::size_t embedded = 0;
    for (const auto& u : units) {
        try {
            auto e = quaternion_embed(u);
            if (e.even_coords && e.element.type == rank3_identity_type()) ++embedded;
        } catch (const MathError&) {
        }
    }
    out.push_back(verdict("units-embed", "every box enumerated norm one unit embeds into type (1,21,6,14) with even coordinates",
                          !units.empty() && embedded == units.size(),
                          {{"units", std::to_string(units.size())}, {"first", units.empty() ? "none" : units[0].to_string()}}));
    out.push_back(verdict("mod3", "every norm 4 solution of u^2-21v^2-6w^2+14x^2 in the box has 3 | x", mod3_lemma(20),
                          {{"box", "20"}}));
    return out;
}

std::vector<Check> suite_involutions(const SuiteConfig&) {
    auto r = involution_checks();
    return {verdict("p-o-plus", "P preserves the rank 4 form and its orientation", r.p_in_o_plus),
            verdict("p-square", "P is an involution", r.p_squared_identity),
            verdict("p-det", "P has determinant -1", r.p_det == -1, {{"det", r.p_det.get_str()}}),
            verdict("minus-id", "-Id negates the Z/3 part of the rank 3 discriminant", r.minus_id_rank3 == Z3Action::negates),
            verdict("f-hat", "the F-hat pair maps to an integral involution of determinant 1",
                    r.f_hat_integral && r.f_hat_involution && r.f_hat_det == 1 && r.f_hat_o_plus,
                    {{"z3", to_string(r.f_hat_z3)}})};
}

std::vector<Check> suite_stabilizers(const SuiteConfig&) {
    std::vector<Check> out;
    auto generic = stabilizer_check(f21_point({1, 2, 3, 5}));
    out.push_back(verdict("generic", "a generic F21 member has stabilizer exactly F21",
                          !generic.infinite && generic.quotient_order == 1, {{"summary", generic.summary()}}));
    auto inv = stabilizer_check(f21_point({1, 2, 3, 24}));
    out.push_back(verdict("involution", "[1,a,b,a^3 b] gains an extra involution",
                          inv.quotient_order == 2 && inv.max_order == 2 && inv.all_roots_found, {{"summary", inv.summary()}}));
    auto six = stabilizer_check(f21_point({1, 1, 0, 0}));
    out.push_back(verdict("order-six", "[1,1,0,0] gains an extra element of order 6",
                          six.quotient_order == 6 && six.max_order == 6 && six.all_roots_found, {{"summary", six.summary()}}));
    auto pencil = pencil_stabilizer(FamilyPoint{FamilyTag::L27, {1, 1}});
    out.push_back(verdict("pencil-generic", "a generic pencil member has no symmetry beyond L2(7)",
                          pencil.stabilizer_order == 168 && !pencil.extra_involution,
                          {{"order", std::to_string(pencil.stabilizer_order)}}));
    auto c = AlgebraicNumber(Rational(3, 2)) * sqrt_of(2);
    bool special = true;
    for (auto v : {c, -c}) {
        auto p = pencil_stabilizer(FamilyPoint{FamilyTag::L27, {1, v}});
        special = special && p.stabilizer_order == 336 && p.extra_involution;
    }
    out.push_back(verdict("pencil-special", "the members at +-(3 sqrt2 / 2) gain the involution E'", special));
    return out;
}

std::vector<SuiteInfo> build_registry() {
    return {
        {"invariant-spaces", "invariant cubic forms of C7 and F21", 0, suite_invariant_spaces},
        {"invariant-ring", "C6 quotient of the (a,b)-plane is the cubic surface xy = z^3", 12, suite_invariant_ring},
        {"git-c7", "GIT stability of C7 support patterns", 0, [](const SuiteConfig&) { return suite_git(GitFamily::C7); }},
        {"git-f21", "GIT stability of F21 support patterns", 0, [](const SuiteConfig&) { return suite_git(GitFamily::F21); }},
        {"singular", "singular loci of F_{a,b} and the discriminant curve", 50, suite_singular},
        {"l27", "L2(7) pencil, the extra element E and the Veronese sextic", 0, suite_l27},
        {"lattices", "transcendental lattices, discriminant forms and anisotropy", 200, suite_lattices},
        {"table2", "coset table of the rank 3 arithmetic group", 6, suite_table2},
        {"table3", "coset table of the rank 4 arithmetic group", 20, suite_table3},
        {"hilbert", "Hilbert modular group identification", 100, suite_hilbert},
        {"quaternion", "quaternion order embedding", 6, suite_quaternion},
        {"involutions", "the involutions P and F-hat", 0, suite_involutions},
        {"stabilizers", "automorphism groups along the F21 family and the L2(7) pencil", 0, suite_stabilizers},
    };
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

Rational parse_rational(const std::string& text) {
    try {
        Rational q(trim(text));
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("not a rational number: " + text);
    }
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        default: return "flagged";
    }
}

long SuiteConfig::bound(const std::string& suite, long fallback) const {
    auto it = search_bounds.find(suite);
    if (it != search_bounds.end()) return it->second;
    return bound_override > 0 ? bound_override : fallback;
}

SuiteConfig parse_config(const std::string& text) {
    SuiteConfig c;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        auto positive = [&](const std::string& v) {
            long n = 0;
            try {
                n = std::stol(v);
            } catch (const std::exception&) {
                throw ParseError("line " + std::to_string(lineno) + ": " + key + " needs an integer");
            }
            if (n <= 0) throw ParseError("line " + std::to_string(lineno) + ": " + key + " must be positive");
            return n;
        };
        if (key == "suites") c.suites = split(value, ',');
        else if (key == "seed") c.seed = static_cast<unsigned>(positive(value));
        else if (key == "bound") c.bound_override = positive(value);
        else if (key.rfind("bound.", 0) == 0) c.search_bounds[key.substr(6)] = positive(value);
        else if (key == "out") c.output_path = value;
        else if (key == "format") c.format = value;
        else if (key == "workers") c.parallelism = static_cast<unsigned>(positive(value));
        else if (key == "strict") c.strict = value == "true" || value == "1";
        else if (key == "timing") c.timing = value == "true" || value == "1";
        else throw ParseError("line " + std::to_string(lineno) + ": unknown key " + key);
    }
    if (c.format != "json" && c.format != "csv") throw ParseError("format must be json or csv");
    for (const auto& s : c.suites) find_suite(s);
    return c;
}

SuiteConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

bool Report::passed(bool strict) const {
    for (const auto& c : checks)
        if (c.verdict == Verdict::fail || (strict && c.verdict == Verdict::flagged)) return false;
    return true;
}

std::size_t Report::count(Verdict v) const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [v](const Check& c) { return c.verdict == v; }));
}

const std::vector<SuiteInfo>& suite_registry() {
    static const std::vector<SuiteInfo> registry = build_registry();
    return registry;
}

const SuiteInfo& find_suite(const std::string& name) {
    for (const auto& s : suite_registry())
        if (s.name == name) return s;
    throw UnknownSuite(name);
}

Report run_suite(const std::string& name, const SuiteConfig& config) {
    const auto& info = find_suite(name);
    auto start = std::chrono::steady_clock::now();
    Report r{name, config.seed, {}, {}};
    try {
        r.checks = info.run(config);
    } catch (const std::exception& e) {
        r.checks.push_back(verdict("suite-error", info.citation, false, {{"error", e.what()}}));
    }
    for (auto& c : r.checks)
        if (c.citation.empty()) c.citation = info.citation;
    r.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return r;
}

std::vector<Report> run_suites(const SuiteConfig& config) {
    for (const auto& s : config.suites) find_suite(s);
    std::vector<Report> reports(config.suites.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < reports.size(); i = next++) reports[i] = run_suite(config.suites[i], config);
    };
    unsigned n = std::max(1u, std::min<unsigned>(config.parallelism, static_cast<unsigned>(reports.size())));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return reports;
}

std::string reports_json(const std::vector<Report>& reports, bool timing) {
    json out = json::array();
    for (const auto& r : reports) {
        json checks = json::array();
        for (const auto& c : r.checks) {
            json cert = json::object();
            for (const auto& [k, v] : c.certificate) cert[k] = v;
            json entry{{"id", c.id}, {"citation", c.citation}, {"verdict", to_string(c.verdict)}, {"certificate", cert}};
            if (!c.explanation.empty()) entry["explanation"] = c.explanation;
            checks.push_back(entry);
        }
        json report{{"suite", r.suite}, {"seed", r.seed}, {"checks", checks}};
        if (timing) report["wall_time_ms"] = r.wall_time.count();
        out.push_back(report);
    }
    return out.dump(2) + "\n";
}

std::string reports_csv(const std::vector<Report>& reports) {
    std::ostringstream out;
    out << "suite,id,verdict,citation,explanation\n";
    for (const auto& r : reports)
        for (const auto& c : r.checks)
            out << csv_field(r.suite) << ',' << csv_field(c.id) << ',' << to_string(c.verdict) << ',' << csv_field(c.citation)
                << ',' << csv_field(c.explanation) << '\n';
    return out.str();
}

std::string plane_label(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    for (int j = 0; j < 3; ++j) {
        AlgebraicNumber w = root_of_unity(3, j, cyclotomic(3));
        if (a == w && b == w) return "A2 orbit";
    }
    auto m = discriminant_curve(a, b);
    std::vector<std::string> curves;
    for (int j = 0; j < 3; ++j)
        if (m.on_twist[static_cast<std::size_t>(j)]) curves.push_back(std::to_string(j));
    if (curves.empty()) return "smooth";
    return "twist curve " + join(curves, "+");
}

std::string f21_label(const std::vector<AlgebraicNumber>& c) {
    if (c.size() != 4) throw DimensionMismatch("expected four F21 coefficients");
    if (c[0].is_zero() && c[1].is_zero() && !c[2].is_zero() && c[2] == c[3]) return "boundary point [0,0,1,1]";
    if (!c[0].is_zero() && c[1].is_zero() && c[3] == -c[0]) return "boundary curve [1,0,t,-1]";
    auto ab = ab_plane_coordinates(f21_point(c));
    if (!ab) return "outside chart";
    return plane_label((*ab)[0], (*ab)[1]);
}

PlaneGrid parse_grid(const std::string& text) {
    auto parts = split(text, ',');
    if (parts.size() != 5) throw ParseError("grid needs a0,a1,b0,b1,step");
    PlaneGrid g{parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]), parse_rational(parts[3]),
                parse_rational(parts[4])};
    if (g.step <= 0 || g.a1 < g.a0 || g.b1 < g.b0) throw ParseError("grid needs a0 <= a1, b0 <= b1 and step > 0");
    return g;
}

std::vector<PlanePoint> export_plane(const PlaneGrid& g) {
    std::vector<PlanePoint> out;
    for (Rational a = g.a0; a <= g.a1; a += g.step)
        for (Rational b = g.b0; b <= g.b1; b += g.step) out.push_back({a, b, plane_label(a, b)});
    return out;
}

std::string plane_csv(const std::vector<PlanePoint>& points) {
    std::ostringstream out;
    out << "a,b,label\n";
    for (const auto& p : points) out << p.a << ',' << p.b << ',' << csv_field(p.label) << '\n';
    return out.str();
}

std::string plane_svg(const PlaneGrid& g, const std::vector<PlanePoint>& points) {
    const double size = 480, pad = 20;
    double a0 = g.a0.get_d(), a1 = g.a1.get_d(), b0 = g.b0.get_d(), b1 = g.b1.get_d();
    double wa = std::max(a1 - a0, 1e-9), wb = std::max(b1 - b0, 1e-9);
    auto px = [&](double a) { return pad + (a - a0) / wa * size; };
    auto py = [&](double b) { return pad + (b1 - b) / wb * size; };
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size + 2 * pad << "\" height=\"" << size + 2 * pad << "\">\n";
    // Real branch of the discriminant curve: a = -2t - t^2, b = -2/t - 1/t^2.
    for (double sign : {-1.0, 1.0}) {
        out << "<polyline fill=\"none\" stroke=\"black\" points=\"";
        for (int i = 1; i <= 400; ++i) {
            double t = sign * (0.02 * i);
            double a = -2 * t - t * t, b = -2 / t - 1 / (t * t);
            if (a < a0 || a > a1 || b < b0 || b > b1) continue;
            out << px(a) << ',' << py(b) << ' ';
        }
        out << "\"/>\n";
    }
    for (const auto& p : points) {
        std::string color = p.label == "smooth" ? "#9bb" : p.label == "A2 orbit" ? "#d22" : "#22d";
        out << "<circle cx=\"" << px(p.a.get_d()) << "\" cy=\"" << py(p.b.get_d()) << "\" r=\"2\" fill=\"" << color
            << "\"><title>" << p.a << "," << p.b << ": " << p.label << "</title></circle>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string git_sweep_json(bool f21) {
    json out = json::array();
    for (const auto& e : git_sweep(f21 ? GitFamily::F21 : GitFamily::C7)) {
        json entry{{"pattern", e.pattern.to_string()},
                   {"classification", to_string(e.oracle)},
                   {"closed_form", to_string(e.closed_form)}};
        entry["unstable_witness"] = e.unstable_witness ? json(e.unstable_witness->to_string()) : json(nullptr);
        entry["nonstable_witness"] = e.nonstable_witness ? json(e.nonstable_witness->to_string()) : json(nullptr);
        out.push_back(entry);
    }
    return out.dump(2) + "\n";
}

std::string git_sweep_csv(bool f21) {
    std::ostringstream out;
    out << "pattern,classification,closed_form,unstable_witness,nonstable_witness\n";
    for (const auto& e : git_sweep(f21 ? GitFamily::F21 : GitFamily::C7))
        out << csv_field(e.pattern.to_string()) << ',' << to_string(e.oracle) << ',' << to_string(e.closed_form) << ','
            << csv_field(e.unstable_witness ? e.unstable_witness->to_string() : "") << ','
            << csv_field(e.nonstable_witness ? e.nonstable_witness->to_string() : "") << '\n';
    return out.str();
}

std::string singular_sweep(unsigned count, unsigned seed, bool csv) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-7, 7), den(1, 4), branch(0, 2);
    json rows = json::array();
    std::ostringstream text;
    text << "a,b,twist0,twist1,twist2,singular,classes\n";
    for (unsigned trial = 0; trial < count; ++trial) {
        AlgebraicNumber a, b;
        if (trial % 2 == 0) {
            Rational tau(num(rng), den(rng));
            tau.canonicalize();
            if (tau == 0) tau = 2;
            AlgebraicNumber wk = root_of_unity(3, branch(rng), cyclotomic(3));
            AlgebraicNumber t(tau);
            a = AlgebraicNumber(-2) * t - wk * t * t;
            b = AlgebraicNumber(-2) * wk / t - (t * t).inverse();
        } else {
            Rational x(num(rng), den(rng)), y(num(rng), den(rng));
            x.canonicalize();
            y.canonicalize();
            a = x;
            b = y;
        }
        auto m = discriminant_curve(a, b);
        auto pts = singular_points(a, b);
        Poly f = f_ab(a, b);
        std::vector<std::string> classes;
        for (const auto& p : pts) classes.push_back(to_string(classify(f, p.coords).tag));
        std::sort(classes.begin(), classes.end());
        classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
        rows.push_back(json{{"a", a.display()},
                            {"b", b.display()},
                            {"on_twist", {m.on_twist[0], m.on_twist[1], m.on_twist[2]}},
                            {"singular", pts.size()},
                            {"classes", classes}});
        text << csv_field(a.display()) << ',' << csv_field(b.display()) << ',' << m.on_twist[0] << ',' << m.on_twist[1] << ','
             << m.on_twist[2] << ',' << pts.size() << ',' << csv_field(join(classes, ";")) << '\n';
    }
    return csv ? text.str() : rows.dump(2) + "\n";
}

std::string lattice_report_json(const Lattice& l) {
    auto a = discriminant_group(l);
    json out = json::parse(discriminant_json(l, a));
    auto m = milgram_phase(l);
    out["signature"] = {l.signature().first, l.signature().second};
    out["determinant"] = l.determinant().get_str();
    out["milgram"] = {{"phase", m.phase}, {"signature_mod8", m.signature_mod8}, {"matches", m.matches}};
    return out.dump(2) + "\n";
}

std::string table2_json() {
    auto r = verify_table2();
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back(json{{"type", to_string(row.representative.type)},
                            {"representative", row.representative.to_string()},
                            {"matrix", number_matrix_json(row.representative.matrix())},
                            {"image", int_matrix_json(gamma2_member(row.representative))},
                            {"member", row.member},
                            {"z3", to_string(row.z3)},
                            {"quoted_preserves", row.quoted_preserves},
                            {"quoted_label", to_string(row.quoted_label)},
                            {"computed_label", to_string(row.computed_label)}});
    json out{{"rows", rows},
             {"labels_form_group", r.labels_form_group},
             {"z3_column_matches", r.z3_column_matches},
             {"cosets_closed", r.cosets_closed},
             {"normal", r.normal},
             {"flagged", r.flagged}};
    return out.dump(2) + "\n";
}

std::string table3_json() {
    auto r = verify_table3();
    json rows = json::array();
    for (const auto& row : r.rows) {
        auto [h1, h2] = row.representative.pair();
        rows.push_back(json{{"type", to_string(row.representative.type)},
                            {"representative", row.representative.to_string()},
                            {"h1", number_matrix_json(h1)},
                            {"h2", number_matrix_json(h2)},
                            {"image", int_matrix_json(row.image)},
                            {"z3", to_string(row.z3)}});
    }
    json out{{"rows", rows},
             {"klein_four", r.klein_four},
             {"normal", r.normal},
             {"excluded_rejected", r.excluded_rejected},
             {"excluded_residue_survivors", r.excluded_residues}};
    return out.dump(2) + "\n";
}

std::string hilbert_roundtrip_json(unsigned count, long height, unsigned seed) {
    json rows = json::array();
    bool all = true;
    for (const auto& m : hilbert_sample(count, height, seed)) {
        bool member = hilbert_member(m);
        json row{{"matrix", number_matrix_json(m)}, {"member", member}};
        if (member) {
            auto rt = hilbert_roundtrip(m);
            row["element"] = rt.element.to_string();
            row["image"] = int_matrix_json(rt.image);
            row["identity_coset"] = rt.identity_coset;
            row["round_trips"] = rt.round_trips;
            all = all && rt.identity_coset && rt.round_trips;
        } else {
            all = false;
        }
        rows.push_back(row);
    }
    json out{{"seed", seed}, {"height", height}, {"count", rows.size()}, {"all_round_trip", all}, {"samples", rows}};
    return out.dump(2) + "\n";
}

std::string quat_embed_json(long box) {
    json rows = json::array();
    for (const auto& u : quaternion_units(box)) {
        auto e = quaternion_embed(u);
        rows.push_back(json{{"unit", u.to_string()},
                            {"element", e.element.to_string()},
                            {"image", int_matrix_json(e.image)},
                            {"even_coords", e.even_coords}});
    }
    json out{{"box", box}, {"units", rows}, {"mod3_lemma_box20", mod3_lemma(20)}};
    return out.dump(2) + "\n";
}

}  // namespace cubic7
