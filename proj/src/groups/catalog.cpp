#include "cubic7/groups/catalog.hpp"

#include <cctype>
#include <fstream>
#include <mutex>

namespace cubic7 {

namespace {

NumberMatrix diagonal(const std::vector<AlgebraicNumber>& d) {
    NumberMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

AlgebraicNumber zeta7_power(long e) { return root_of_unity(7, e, cyclotomic(7)); }

}  // namespace

std::vector<int> parse_cycles(std::string_view cycles, int n) {
    std::vector<int> sigma(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) sigma[static_cast<std::size_t>(i)] = i;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) { throw ParseError("cycle notation '" + std::string(cycles) + "': " + why); };
    while (pos < cycles.size()) {
        char ch = cycles[pos];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++pos;
            continue;
        }
        if (ch != '(') fail("expected '('");
        auto close = cycles.find(')', pos);
        if (close == std::string_view::npos) fail("unclosed cycle");
        std::string_view body = cycles.substr(pos + 1, close - pos - 1);
        bool commas = body.find(',') != std::string_view::npos;
        std::vector<int> cyc;
        std::string token;
        auto flush = [&] {
            if (token.empty()) return;
            int v = std::stoi(token);
            if (v < 1 || v > n) fail("point " + token + " out of range");
            if (seen[static_cast<std::size_t>(v - 1)]) fail("point " + token + " repeated");
            seen[static_cast<std::size_t>(v - 1)] = true;
            cyc.push_back(v - 1);
            token.clear();
        };
        for (char c : body) {
            if (std::isdigit(static_cast<unsigned char>(c))) {
                token += c;
                if (!commas) flush();
            } else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
                flush();
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
        }
        flush();
        for (std::size_t i = 0; i < cyc.size(); ++i)
            sigma[static_cast<std::size_t>(cyc[i])] = cyc[(i + 1) % cyc.size()];
        pos = close + 1;
    }
    return sigma;
}

NumberMatrix permutation_matrix(std::string_view cycles, int n) {
    auto sigma = parse_cycles(cycles, n);
    NumberMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) m(static_cast<std::size_t>(sigma[static_cast<std::size_t>(j)]), static_cast<std::size_t>(j)) = 1;
    return m;
}

bool is_permutation_matrix(const NumberMatrix& m) {
    if (!m.square()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        int ones = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero()) continue;
            if (!m(i, j).is_one()) return false;
            ++ones;
        }
        if (ones != 1) return false;
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
        int ones = 0;
        for (std::size_t i = 0; i < m.rows(); ++i) ones += !m(i, j).is_zero();
        if (ones != 1) return false;
    }
    return true;
}

NumberMatrix transition_matrix() {
    NumberMatrix t(7, 7, AlgebraicNumber(-1));
    for (std::size_t i = 0; i < 6; ++i) t(i, i) = 6;
    for (std::size_t i = 0; i < 7; ++i) t(i, 6) = 1;
    return t;
}

NumberMatrix psi_inverse(const NumberMatrix& m7) {
    if (m7.rows() != 7 || m7.cols() != 7) throw DimensionMismatch("psi_inverse expects a 7x7 matrix");
    static const NumberMatrix t = transition_matrix();
    static const NumberMatrix t_inv = *inverse(t);
    NumberMatrix c = t_inv * m7 * t;
    for (std::size_t i = 0; i < 6; ++i)
        if (!c(6, i).is_zero() || !c(i, 6).is_zero()) throw DimensionMismatch("matrix does not preserve the splitting");
    NumberMatrix out(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) out(i, j) = c(i, j);
    return out;
}

NumberMatrix psi(const NumberMatrix& m6) {
    if (m6.rows() != 6 || m6.cols() != 6) throw DimensionMismatch("psi expects a 6x6 matrix");
    NumberMatrix block = NumberMatrix::identity(7);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) block(i, j) = m6(i, j);
    NumberMatrix t = transition_matrix();
    return t * block * *inverse(t);
}

ProjectiveMatrix g7() {
    std::vector<AlgebraicNumber> d;
    for (long e : {1, 5, 4, 6, 2, 3}) d.push_back(zeta7_power(e));
    return ProjectiveMatrix(diagonal(d));
}

ProjectiveMatrix g3() { return ProjectiveMatrix(permutation_matrix("(135)(246)", 6)); }

ProjectiveMatrix gtau() { return ProjectiveMatrix(permutation_matrix("(123456)", 6)); }

ProjectiveMatrix k_element() {
    AlgebraicNumber w = root_of_unity(3, 1, cyclotomic(3));
    return ProjectiveMatrix(diagonal({1, 1, w, w, w * w, w * w}));
}

ProjectiveMatrix torus(const AlgebraicNumber& t) {
    if (t.is_zero()) throw DivisionByZero("torus parameter must be nonzero");
    return ProjectiveMatrix(diagonal({1, t, 1, t, 1, t}));
}

AlgebraicNumber s_constant() {
    return AlgebraicNumber(-2) * zeta7_power(5) - AlgebraicNumber(2) * zeta7_power(3) - zeta7_power(1) - AlgebraicNumber(1);
}

ProjectiveMatrix scaling_g() { return torus(s_constant().inverse()); }

ProjectiveMatrix involution_P() {
    return ProjectiveMatrix(NumberMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}, {0, 0, -1, 0}});
}

MatrixGroup build_c7() {
    auto g = MatrixGroup::generate({g7()}, 7);
    if (g.order() != 7) throw ClosureFailure("C7 closed at order " + std::to_string(g.order()));
    return g;
}

MatrixGroup build_f21() {
    auto g = MatrixGroup::generate({g7(), g3()}, 21);
    if (g.order() != 21) throw ClosureFailure("F21 closed at order " + std::to_string(g.order()));
    return g;
}

MatrixGroup build_l27() {
    std::vector<ProjectiveMatrix> gens{ProjectiveMatrix(psi_inverse(permutation_matrix("(12)(36)", 7))),
                                       ProjectiveMatrix(psi_inverse(permutation_matrix("(1234567)", 7)))};
    auto g = MatrixGroup::generate(std::move(gens), 168);
    if (g.order() != 168) throw ClosureFailure("L2(7) closed at order " + std::to_string(g.order()));
    return g;
}

namespace {

NumberMatrix e_model_matrix() {
    AlgebraicNumber r2 = sqrt_of(2);
    AlgebraicNumber a = AlgebraicNumber(Rational(2, 7)) * r2 + AlgebraicNumber(Rational(1, 7));
    AlgebraicNumber b = AlgebraicNumber(Rational(-3, 14)) * r2 + AlgebraicNumber(Rational(1, 7));
    NumberMatrix g = permutation_matrix("(1234567)", 7);
    std::vector<NumberMatrix> powers{NumberMatrix::identity(7)};
    for (int i = 1; i < 7; ++i) powers.push_back(powers.back() * g);
    NumberMatrix a_part = powers[0] + powers[4] + powers[6];
    NumberMatrix b_part = powers[1] + powers[2] + powers[3] + powers[5];
    return permutation_matrix("(243756)", 7) * (a * a_part + b * b_part);
}

}  // namespace

ProjectiveMatrix e_prime() {
    static std::once_flag once;
    static std::optional<ProjectiveMatrix> cached;
    std::call_once(once, [] { cached.emplace(psi_inverse(e_model_matrix())); });
    return *cached;
}

EReport build_E() {
    NumberMatrix model = e_model_matrix();
    ProjectiveMatrix prime = e_prime();
    auto l27 = build_l27();
    return EReport{model, prime, model * model == permutation_matrix("(162)(457)", 7), l27.normalized_by(prime),
                   is_permutation_matrix(model)};
}

MatrixGroup build_l27_c2() {
    auto l27 = build_l27();
    auto gens = l27.generators();
    gens.push_back(e_prime());
    auto g = MatrixGroup::generate(std::move(gens), 336);
    if (g.order() != 336) throw ClosureFailure("L2(7) x| C2 closed at order " + std::to_string(g.order()));
    return g;
}

ProjectiveMatrix g7_model() { return ProjectiveMatrix(psi_inverse(permutation_matrix("(1234567)", 7))); }

ProjectiveMatrix g3_model() { return ProjectiveMatrix(psi_inverse(permutation_matrix("(235)(476)", 7))); }

ProjectiveMatrix build_S() {
    const NumberMatrix a7 = g7().matrix(), a3 = g3().matrix();
    const NumberMatrix b7 = g7_model().matrix(), b3 = g3_model().matrix();
    NumberMatrix sum(6, 6);
    NumberMatrix a3i = NumberMatrix::identity(6), b3i = NumberMatrix::identity(6);
    for (int i = 0; i < 3; ++i) {
        NumberMatrix a7j = NumberMatrix::identity(6), b7j = NumberMatrix::identity(6);
        for (int j = 0; j < 7; ++j) {
            sum = sum + *inverse(a3i * a7j) * b3i * b7j;
            a7j = a7j * a7;
            b7j = b7j * b7;
        }
        a3i = a3i * a3;
        b3i = b3i * b3;
    }
    if (determinant(sum).is_zero()) throw SingularS("averaging sum is singular");
    return ProjectiveMatrix(std::move(sum));
}

std::vector<IdentityCheck> conjugation_identities() {
    std::vector<IdentityCheck> out;
    auto c7 = g7(), c3 = g3(), tau = gtau(), k = k_element();
    out.push_back({"gtau g7 gtau^-1 = g7^3", tau * c7 * tau.inverse() == c7.pow(3)});
    out.push_back({"g3 g7 g3^-1 = g7^2", c3 * c7 * c3.inverse() == c7.pow(2)});
    AlgebraicNumber w = root_of_unity(3, 1, cyclotomic(3));
    out.push_back({"omega g3 = k g3 k^-1", w * c3.matrix() == (k * c3 * k.inverse()).matrix()});

    auto f21 = build_f21();
    out.push_back({"gtau normalizes F21", f21.normalized_by(tau)});
    out.push_back({"k normalizes F21", f21.normalized_by(k)});
    for (int t : {2, 3, 5})
        out.push_back({"diag(1," + std::to_string(t) + ",...) normalizes F21", f21.normalized_by(torus(t))});

    auto e = build_E();
    out.push_back({"E^2 = (162)(457)", e.square_matches});
    out.push_back({"E normalizes L2(7)", e.normalizes_l27});
    out.push_back({"E is not a permutation matrix", !e.is_permutation});

    auto s = build_S();
    auto s_inv = s.inverse();
    out.push_back({"S g7' S^-1 = g7", (s * g7_model() * s_inv).matrix() == g7().matrix()});
    out.push_back({"S g3' S^-1 = g3", (s * g3_model() * s_inv).matrix() == g3().matrix()});

    auto p = involution_P();
    out.push_back({"P^2 = Id", (p * p).matrix() == NumberMatrix::identity(4)});
    out.push_back({"det P = -1", determinant(p.matrix()) == AlgebraicNumber(-1)});
    return out;
}

ProjectiveMatrix catalog_element(std::string_view name) {
    if (name == "g7") return g7();
    if (name == "g3") return g3();
    if (name == "gtau") return gtau();
    if (name == "k") return k_element();
    if (name == "E") return e_prime();
    if (name == "P") return involution_P();
    if (name == "S") return build_S();
    if (name == "g") return scaling_g();
    if (!name.empty() && name.front() == '(') return ProjectiveMatrix(psi_inverse(permutation_matrix(name, 7)));
    throw ParseError("unknown catalog element '" + std::string(name) + "'");
}

std::vector<ProjectiveMatrix> load_generators(std::istream& in) {
    std::vector<ProjectiveMatrix> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        out.push_back(catalog_element(std::string_view(line).substr(first, last - first + 1)));
    }
    return out;
}

std::vector<ProjectiveMatrix> load_generators_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open generator file " + path);
    return load_generators(in);
}

}  // namespace cubic7
