#include "cubic7/arithgrp/tube_domain.hpp"

#include <algorithm>
#include <random>
#include <mutex>

namespace cubic7 {

namespace {

AlgebraicNumber half(const AlgebraicNumber& x) { return x * AlgebraicNumber(Rational(1, 2)); }

NumberMatrix square2(const AlgebraicNumber& a, const AlgebraicNumber& b, const AlgebraicNumber& c,
                     const AlgebraicNumber& d) {
    NumberMatrix m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

AlgebraicNumber det2(const NumberMatrix& h) { return h(0, 0) * h(1, 1) - h(0, 1) * h(1, 0); }

void require_sl2(const NumberMatrix& h) {
    if (h.rows() != 2 || h.cols() != 2) throw DimensionMismatch("expected a 2x2 matrix");
    if (!det2(h).is_one()) throw NotUnimodular("determinant is " + det2(h).display());
}

struct Basis {
    NumberMatrix b, b_inv;
};

const Basis& rank3_basis() {
    static std::once_flag once;
    static Basis basis;
    std::call_once(once, [] {
        AlgebraicNumber r21 = root(21) / AlgebraicNumber(42), h(Rational(1, 2));
        NumberMatrix b(3, 3, AlgebraicNumber(0));
        b(0, 0) = -r21 - h;
        b(0, 2) = -r21 + h;
        b(1, 0) = AlgebraicNumber(-2) * r21;
        b(1, 2) = AlgebraicNumber(-2) * r21;
        b(2, 1) = root(14) / AlgebraicNumber(14);
        basis = {b, *inverse(b)};
    });
    return basis;
}

const Basis& rank4_basis() {
    static std::once_flag once;
    static Basis basis;
    std::call_once(once, [] {
        AlgebraicNumber r21 = root(21) / AlgebraicNumber(42), h(Rational(1, 2));
        NumberMatrix b(4, 4, AlgebraicNumber(0));
        b(0, 0) = -r21 - h;
        b(0, 3) = -r21 + h;
        b(1, 0) = AlgebraicNumber(-2) * r21;
        b(1, 3) = AlgebraicNumber(-2) * r21;
        b(2, 1) = 1;
        b(3, 2) = AlgebraicNumber(Rational(-1, 7));
        basis = {b, *inverse(b)};
    });
    return basis;
}

std::optional<long> integer_value(const Rational& q) {
    if (!is_integral(q)) return std::nullopt;
    return Integer(q).get_si();
}

// c * sqrt(d) with d in the allowed set, or zero.
struct Radical {
    long coeff = 0;
    long radicand = 1;
};
std::optional<Radical> single_radical(const AlgebraicNumber& x) {
    auto parts = radical_parts(x);
    if (parts.empty()) return Radical{};
    if (parts.size() != 1) return std::nullopt;
    auto c = integer_value(parts.begin()->second);
    if (!c) return std::nullopt;
    return Radical{*c, parts.begin()->first};
}

std::vector<TypeQuad> klein_orbit(const TypeQuad& t) {
    return {t, {t[1], t[0], t[3], t[2]}, {t[2], t[3], t[0], t[1]}, {t[3], t[2], t[1], t[0]}};
}

struct Frame {
    std::vector<RatVector> vectors;
    Matrix<Rational> gram_inverse;  // of the frame Gram
};

Frame negative_frame(const Lattice& l) {
    std::size_t n = l.rank();
    std::vector<RatVector> candidates;
    auto unit = [n](std::size_t i) {
        RatVector v(n, Rational(0));
        v[i] = 1;
        return v;
    };
    for (std::size_t i = 0; i < n; ++i) candidates.push_back(unit(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (int s : {1, -1}) {
                auto v = unit(i);
                v[j] = s;
                candidates.push_back(v);
            }
    Frame f;
    for (const auto& c : candidates) {
        RatVector v = c;
        for (const auto& w : f.vectors) {
            Rational k = l.pairing(v, w) / l.pairing(w, w);
            for (std::size_t i = 0; i < n; ++i) v[i] -= k * w[i];
        }
        if (l.pairing(v, v) < 0) f.vectors.push_back(v);
        if (f.vectors.size() == 2) break;
    }
    if (f.vectors.size() != 2 || l.signature().second != 2) throw MathError("lattice has no negative definite 2-frame");
    Matrix<Rational> g(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) g(i, j) = l.pairing(f.vectors[i], f.vectors[j]);
    f.gram_inverse = *inverse(g);
    return f;
}

RatVector act_on(const IntMatrix& m, const RatVector& v) {
    RatVector out(m.rows(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += Rational(m(i, j)) * v[j];
    return out;
}

bool in_lattice(const RatVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& c) { return is_integral(c); });
}

// Representatives of the eight rank 3 cosets with the quoted table columns.
struct Table2Data {
    TypedElementRank3 rep;
    bool preserves;
    Label label;
};
const std::vector<Table2Data>& table2_data() {
    static const std::vector<Table2Data> data{
        {{{1, 21, 6, 14}, {2, 0, 0, 0}}, true, {0, 0, 0}},
        {{{21, 1, 14, 6}, {1, 3, 1, 1}}, false, {1, 0, 0}},
        {{{6, 14, 1, 21}, {3, 1, 6, 0}}, false, {0, 1, 0}},
        {{{14, 6, 21, 1}, {0, 0, 0, 2}}, true, {1, 1, 0}},
        {{{2, 42, 3, 7}, {0, 0, 1, 1}}, true, {0, 0, 1}},
        {{{42, 2, 7, 3}, {0, 2, 3, 5}}, false, {0, 1, 1}},
        {{{3, 7, 2, 42}, {2, 0, 2, 0}}, false, {0, 1, 1}},
        {{{7, 3, 42, 2}, {1, 1, 0, 0}}, true, {1, 1, 1}},
    };
    return data;
}

const TypedElementRank3& rank3_representative(const TypeQuad& t) {
    for (const auto& d : table2_data())
        if (d.rep.type == t) return d.rep;
    throw MathError("no representative for type " + to_string(t));
}

const std::vector<TypedElementRank4>& table3_data() {
    static const std::vector<TypedElementRank4> data{
        {{1, 21, 3, 7}, {2, 2, 0, 0, 0, 0, 0, 0}},
        {{21, 1, 7, 3}, {0, 0, 2, -2, 0, 0, 0, 0}},
        {{3, 7, 1, 21}, {0, 0, 0, 0, 2, -2, 0, 0}},
        {{7, 3, 21, 1}, {0, 0, 0, 0, 0, 0, 2, 2}},
    };
    return data;
}

const TypedElementRank4& rank4_representative(const TypeQuad& t) {
    for (const auto& d : table3_data())
        if (d.type == t) return d;
    throw MathError("no representative for type " + to_string(t));
}

enum class Rank4Failure { none, unknown_type, parity, norm, determinant };

Rank4Failure rank4_precheck(const TypedElementRank4& e) {
    auto known = rank4_types();
    auto excluded = rank4_excluded_types();
    if (std::find(known.begin(), known.end(), e.type) == known.end() &&
        std::find(excluded.begin(), excluded.end(), e.type) == excluded.end())
        return Rank4Failure::unknown_type;
    const auto& c = e.coords;
    for (std::size_t i = 0; i < 2; ++i) {
        if ((c[i] - c[2 + i]) % 2 != 0) return Rank4Failure::parity;
        if ((c[4 + i] - c[6 + i]) % 2 != 0) return Rank4Failure::parity;
    }
    if (e.norm() != 4) return Rank4Failure::norm;
    if (!e.determinant_rule()) return Rank4Failure::determinant;
    return Rank4Failure::none;
}

}  // namespace

FieldPtr tube_field() { return multiquadratic({2, 3, 7}); }

AlgebraicNumber root(long d) {
    if (d <= 0 || 42 % d != 0) throw MathError("sqrt(" + std::to_string(d) + ") is outside the tube field");
    if (d == 1) return coerce(AlgebraicNumber(1), tube_field());
    return coerce(sqrt_of(d), tube_field());
}

std::map<long, Rational> radical_parts(const AlgebraicNumber& x) {
    AlgebraicNumber y = coerce(x, tube_field());
    const auto& f = *y.field();
    auto disp = f.power_to_display() * y.coords();
    std::map<long, Rational> out;
    for (std::size_t m = 0; m < disp.size(); ++m) {
        Rational c = disp[m] * Rational(f.display_scales()[m]);
        if (c != 0) out[f.display_radicands()[m]] += c;
    }
    return out;
}

NumberMatrix to_number_matrix(const IntMatrix& m) {
    return m.map([](const Integer& v) { return coerce(AlgebraicNumber(v), tube_field()); });
}

std::optional<IntMatrix> as_integer_matrix(const NumberMatrix& m) {
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_rational()) return std::nullopt;
            Rational q = m(i, j).to_rational();
            if (!is_integral(q)) return std::nullopt;
            out(i, j) = Integer(q);
        }
    return out;
}

NumberMatrix phi1(const NumberMatrix& h) {
    require_sl2(h);
    const auto &a = h(0, 0), &b = h(0, 1), &c = h(1, 0), &d = h(1, 1);
    NumberMatrix m(3, 3);
    m(0, 0) = a * a;
    m(0, 1) = AlgebraicNumber(2) * a * b;
    m(0, 2) = b * b;
    m(1, 0) = a * c;
    m(1, 1) = a * d + b * c;
    m(1, 2) = b * d;
    m(2, 0) = c * c;
    m(2, 1) = AlgebraicNumber(2) * c * d;
    m(2, 2) = d * d;
    const auto& basis = rank3_basis();
    return basis.b * m * basis.b_inv;
}

NumberMatrix phi2(const NumberMatrix& h1, const NumberMatrix& h2) {
    require_sl2(h1);
    require_sl2(h2);
    NumberMatrix k(4, 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t p = 0; p < 2; ++p)
                for (std::size_t q = 0; q < 2; ++q) k(2 * i + p, 2 * j + q) = h1(i, j) * h2(p, q);
    const auto& basis = rank4_basis();
    return basis.b * k * basis.b_inv;
}

NumberMatrix sl2_inverse(const NumberMatrix& h) { return square2(h(1, 1), -h(0, 1), -h(1, 0), h(0, 0)); }

bool preserves_gram(const IntMatrix& m, const Lattice& l) {
    if (m.rows() != l.rank() || m.cols() != l.rank()) return false;
    return m.transpose() * l.gram() * m == l.gram();
}

IntMatrix isometry_inverse(const IntMatrix& m, const Lattice& l) {
    if (!preserves_gram(m, l)) throw NotIsometry("matrix does not preserve the Gram form");
    auto g = l.gram().map([](const Integer& v) { return Rational(v); });
    auto mt = m.transpose().map([](const Integer& v) { return Rational(v); });
    auto inv = *inverse(g) * mt * g;
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Integer(inv(i, j));
    return out;
}

bool in_o_plus(const IntMatrix& m, const Lattice& l) {
    if (!preserves_gram(m, l)) throw NotIsometry("matrix does not preserve the Gram form");
    Frame f = negative_frame(l);
    Matrix<Rational> k(2, 2);
    for (std::size_t j = 0; j < 2; ++j) {
        RatVector image = act_on(m, f.vectors[j]);
        std::vector<Rational> pair{l.pairing(f.vectors[0], image), l.pairing(f.vectors[1], image)};
        for (std::size_t i = 0; i < 2; ++i) k(i, j) = f.gram_inverse(i, 0) * pair[0] + f.gram_inverse(i, 1) * pair[1];
    }
    return determinant(k) > 0;
}

std::string to_string(Z3Action a) { return a == Z3Action::preserves ? "preserves" : "negates"; }

RatVector three_part_generator(const Lattice& l) {
    auto a = discriminant_group(l);
    for (std::size_t i = 0; i < a.invariant_factors.size(); ++i) {
        const Integer& f = a.invariant_factors[i];
        if (f % 3 != 0) continue;
        RatVector g = a.generators[i];
        for (auto& c : g) c *= Rational(Integer(f / 3));
        return g;
    }
    throw MathError("discriminant group has no 3-part");
}

Z3Action z3_action(const IntMatrix& m, const Lattice& l) {
    if (!preserves_gram(m, l)) throw NotIsometry("matrix does not preserve the Gram form");
    RatVector g = three_part_generator(l);
    RatVector image = act_on(m, g);
    RatVector diff(g.size()), sum(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        diff[i] = image[i] - g[i];
        sum[i] = image[i] + g[i];
    }
    if (in_lattice(diff)) return Z3Action::preserves;
    if (in_lattice(sum)) return Z3Action::negates;
    throw MathError("image of the 3-part generator is not +-itself");
}

std::string to_string(const TypeQuad& t) {
    return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + "," +
           std::to_string(t[3]) + ")";
}

std::string to_string(const Label& l) {
    return "(" + std::to_string(l[0]) + "," + std::to_string(l[1]) + "," + std::to_string(l[2]) + ")";
}

NumberMatrix TypedElementRank3::matrix() const {
    auto term = [&](std::size_t i) { return AlgebraicNumber(coords[i]) * root(type[i]); };
    return square2(half(term(0) + term(1)), half(term(2) + term(3)), half(term(2) - term(3)), half(term(0) - term(1)));
}

long TypedElementRank3::norm() const {
    const auto& c = coords;
    return c[0] * c[0] * type[0] - c[1] * c[1] * type[1] - c[2] * c[2] * type[2] + c[3] * c[3] * type[3];
}

std::string TypedElementRank3::to_string() const {
    std::string s = "type " + cubic7::to_string(type) + " coords (";
    for (std::size_t i = 0; i < 4; ++i) s += (i ? "," : "") + std::to_string(coords[i]);
    return s + ")";
}

std::vector<TypeQuad> rank3_types() {
    auto a = klein_orbit({1, 21, 6, 14});
    auto b = klein_orbit({2, 42, 3, 7});
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

TypeQuad rank3_identity_type() { return {1, 21, 6, 14}; }

bool rank3_parity_rule(const TypedElementRank3& e) {
    const auto& c = e.coords;
    return (c[0] - c[1]) % 2 == 0 && (c[2] - c[3]) % 2 == 0;
}

IntMatrix gamma2_member(const TypedElementRank3& e) {
    auto types = rank3_types();
    if (std::find(types.begin(), types.end(), e.type) == types.end())
        throw MathError("type " + to_string(e.type) + " is not admissible");
    if (e.norm() != 4) throw NormNotFour(e.to_string() + " has norm " + std::to_string(e.norm()));
    auto image = as_integer_matrix(phi1(e.matrix()));
    if (!image) throw NonIntegralImage(e.to_string());
    Lattice t = transcendental_rank3();
    if (!preserves_gram(*image, t)) throw NotIsometry(e.to_string() + " does not preserve the Gram form");
    if (!in_o_plus(*image, t)) throw MathError(e.to_string() + " leaves the O+ component");
    return *image;
}

std::optional<TypedElementRank3> rank3_retype(const IntMatrix& m) {
    if (m.rows() != 3 || m.cols() != 3) return std::nullopt;
    const auto& basis = rank3_basis();
    NumberMatrix a = basis.b_inv * to_number_matrix(m) * basis.b;
    AlgebraicNumber two(2);
    AlgebraicNumber ab = half(a(0, 1)), ac = a(1, 0), bd = a(1, 2), cd = half(a(2, 1));
    AlgebraicNumber ad = half(a(1, 1) + AlgebraicNumber(1)), bc = half(a(1, 1) - AlgebraicNumber(1));
    // Squares and pairwise products of u = a+d, v = a-d, w = b+c, x = b-c.
    std::array<AlgebraicNumber, 4> sq{a(0, 0) + two * ad + a(2, 2), a(0, 0) - two * ad + a(2, 2),
                                      a(0, 2) + two * bc + a(2, 0), a(0, 2) - two * bc + a(2, 0)};
    std::array<std::array<AlgebraicNumber, 4>, 4> prod;
    prod[0][1] = a(0, 0) - a(2, 2);
    prod[0][2] = ab + ac + bd + cd;
    prod[0][3] = ab - ac + bd - cd;
    prod[1][2] = ab + ac - bd - cd;
    prod[1][3] = ab - ac - bd + cd;
    prod[2][3] = a(0, 2) - a(2, 0);
    for (std::size_t i = 0; i < 4; ++i) {
        prod[i][i] = sq[i];
        for (std::size_t j = 0; j < i; ++j) prod[i][j] = prod[j][i];
    }
    std::size_t lead = 0;
    while (lead < 4 && sq[lead].is_zero()) ++lead;
    if (lead == 4) return std::nullopt;
    auto lead_radical = single_radical(sq[lead]);
    if (!lead_radical || lead_radical->radicand != 1 || lead_radical->coeff <= 0) return std::nullopt;
    long n = lead_radical->coeff;
    long rad = squarefree_part(n);
    Integer scale;
    if (!is_perfect_square(Integer(n / rad), &scale)) return std::nullopt;
    AlgebraicNumber lead_value = AlgebraicNumber(scale) * root(rad);

    std::array<Radical, 4> parts;
    for (std::size_t i = 0; i < 4; ++i) {
        auto r = single_radical(prod[lead][i] / lead_value);
        if (!r) return std::nullopt;
        parts[i] = *r;
    }
    for (const auto& t : rank3_types()) {
        bool fits = true;
        for (std::size_t i = 0; i < 4; ++i) fits = fits && (parts[i].coeff == 0 || parts[i].radicand == t[i]);
        if (!fits) continue;
        // Entries of h are half of u, v, w, x combinations; coordinates double them.
        TypedElementRank3 e{t, {parts[0].coeff, parts[1].coeff, parts[2].coeff, parts[3].coeff}};
        if (e.norm() != 4) return std::nullopt;
        auto image = as_integer_matrix(phi1(e.matrix()));
        if (!image || *image != m) return std::nullopt;
        return e;
    }
    return std::nullopt;
}

TypeQuad rank3_compose(const TypeQuad& a, const TypeQuad& b) {
    IntMatrix m = gamma2_member(rank3_representative(a)) * gamma2_member(rank3_representative(b));
    auto e = rank3_retype(m);
    if (!e) throw MathError("product of representatives did not retype");
    return e->type;
}

const std::vector<TypedElementRank3>& enumerate_rank3(const TypeQuad& t, long radius) {
    static std::mutex mu;
    static std::map<std::pair<TypeQuad, long>, std::vector<TypedElementRank3>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(t, radius);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<TypedElementRank3> out;
    for (long u = -radius; u <= radius; ++u)
        for (long v = -radius; v <= radius; ++v)
            for (long w = -radius; w <= radius; ++w) {
                long rest = 4 - u * u * t[0] + v * v * t[1] + w * w * t[2];
                if (rest < 0 || rest % t[3] != 0) continue;
                Integer x;
                if (!is_perfect_square(Integer(rest / t[3]), &x) || x > radius) continue;
                for (long sx : {1L, -1L}) {
                    TypedElementRank3 e{t, {u, v, w, sx * x.get_si()}};
                    if (as_integer_matrix(phi1(e.matrix()))) out.push_back(e);
                    if (x == 0) break;
                }
            }
    return cache.emplace(key, std::move(out)).first->second;
}

IsometryBoxScan rank3_isometry_scan(long box) {
    Lattice l = transcendental_rank3();
    const IntMatrix& g = l.gram();
    std::vector<IntVector> vecs;
    for (long a = -box; a <= box; ++a)
        for (long b = -box; b <= box; ++b)
            for (long c = -box; c <= box; ++c) vecs.push_back({Integer(a), Integer(b), Integer(c)});
    auto pair = [&](const IntVector& x, const IntVector& y) {
        Integer s = 0;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) s += x[i] * g(i, j) * y[j];
        return s;
    };
    std::vector<std::vector<IntVector>> columns(3);
    for (const auto& v : vecs)
        for (std::size_t j = 0; j < 3; ++j)
            if (pair(v, v) == g(j, j)) columns[j].push_back(v);
    IsometryBoxScan scan;
    for (const auto& c0 : columns[0])
        for (const auto& c1 : columns[1]) {
            if (pair(c0, c1) != g(0, 1)) continue;
            for (const auto& c2 : columns[2]) {
                if (pair(c0, c2) != g(0, 2) || pair(c1, c2) != g(1, 2)) continue;
                IntMatrix m(3, 3);
                for (std::size_t i = 0; i < 3; ++i) {
                    m(i, 0) = c0[i];
                    m(i, 1) = c1[i];
                    m(i, 2) = c2[i];
                }
                ++scan.isometries;
                auto e = rank3_retype(m);
                if (integer_determinant(m) == 1 && in_o_plus(m, l)) {
                    ++scan.special;
                    if (e && gamma2_member(*e) == m) ++scan.retyped;
                } else if (e) {
                    ++scan.stray_retypes;
                }
            }
        }
    return scan;
}

Table2Report verify_table2(long sample_radius) {
    Table2Report report;
    Lattice t = transcendental_rank3();
    std::map<TypeQuad, Label> computed;
    const TypeQuad basis[3] = {{21, 1, 14, 6}, {6, 14, 1, 21}, {2, 42, 3, 7}};
    for (int l = 0; l < 8; ++l) {
        IntMatrix m = IntMatrix::identity(3);
        for (int i = 0; i < 3; ++i)
            if (l >> i & 1) m = m * gamma2_member(rank3_representative(basis[i]));
        auto e = rank3_retype(m);
        if (!e) throw MathError("label product did not retype");
        computed[e->type] = {l & 1, l >> 1 & 1, l >> 2 & 1};
    }
    report.labels_form_group = computed.size() == 8;
    for (const auto& x : rank3_types())
        for (const auto& y : rank3_types()) {
            if (!computed.count(x) || !computed.count(y)) continue;
            Label sum;
            for (int i = 0; i < 3; ++i) sum[i] = (computed[x][i] + computed[y][i]) % 2;
            report.labels_form_group = report.labels_form_group && computed[rank3_compose(x, y)] == sum;
        }

    report.z3_column_matches = true;
    for (const auto& d : table2_data()) {
        Table2Row row;
        row.representative = d.rep;
        IntMatrix image = gamma2_member(d.rep);
        row.member = true;
        row.z3 = z3_action(image, t);
        row.quoted_preserves = d.preserves;
        row.quoted_label = d.label;
        row.computed_label = computed[d.rep.type];
        if ((row.z3 == Z3Action::preserves) != d.preserves) {
            report.z3_column_matches = false;
            report.flagged.push_back("type " + to_string(d.rep.type) + ": quoted z3 column disagrees");
        }
        if (row.computed_label != d.label)
            report.flagged.push_back("type " + to_string(d.rep.type) + ": quoted label " + to_string(d.label) +
                                     ", computed " + to_string(row.computed_label));
        report.rows.push_back(row);
    }

    const auto& h = enumerate_rank3(rank3_identity_type(), sample_radius);
    std::vector<IntMatrix> images;
    for (const auto& e : h) images.push_back(gamma2_member(e));
    report.cosets_closed = true;
    for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t j = 0; j < images.size(); j += 3) {
            auto p = rank3_retype(images[i] * images[j]);
            report.cosets_closed = report.cosets_closed && p && p->type == rank3_identity_type();
        }
    report.normal = true;
    for (const auto& d : table2_data()) {
        IntMatrix r = gamma2_member(d.rep);
        IntMatrix r_inv = isometry_inverse(r, t);
        for (const auto& m : images) {
            auto c = rank3_retype(r * m * r_inv);
            report.normal = report.normal && c && c->type == rank3_identity_type();
            auto left = rank3_retype(r * m);
            report.cosets_closed = report.cosets_closed && left && left->type == d.rep.type;
        }
    }
    return report;
}

std::pair<NumberMatrix, NumberMatrix> TypedElementRank4::pair() const {
    const auto& c = coords;
    auto term = [&](long k, std::size_t slot) { return AlgebraicNumber(k) * root(type[slot]); };
    AlgebraicNumber s7 = root(7), inv7 = root(7) / AlgebraicNumber(7);
    NumberMatrix h1 = square2(half(term(c[0], 0) + term(c[2], 1)), inv7 * half(term(c[4], 2) + term(c[6], 3)),
                              s7 * half(term(c[5], 2) - term(c[7], 3)), half(term(c[1], 0) - term(c[3], 1)));
    NumberMatrix h2 = square2(half(term(c[1], 0) + term(c[3], 1)), s7 * half(term(c[5], 2) + term(c[7], 3)),
                              inv7 * half(term(c[4], 2) - term(c[6], 3)), half(term(c[0], 0) - term(c[2], 1)));
    return {h1, h2};
}

long TypedElementRank4::norm() const {
    const auto& c = coords;
    return c[0] * c[1] * type[0] - c[2] * c[3] * type[1] - c[4] * c[5] * type[2] + c[6] * c[7] * type[3];
}

bool TypedElementRank4::determinant_rule() const {
    const auto& c = coords;
    return c[0] * c[3] - c[1] * c[2] == c[4] * c[7] - c[5] * c[6];
}

std::string TypedElementRank4::to_string() const {
    std::string s = "type " + cubic7::to_string(type) + " coords (";
    for (std::size_t i = 0; i < 8; ++i) s += (i ? "," : "") + std::to_string(coords[i]);
    return s + ")";
}

std::vector<TypeQuad> rank4_types() { return klein_orbit({1, 21, 3, 7}); }

std::vector<TypeQuad> rank4_excluded_types() { return klein_orbit({2, 42, 6, 14}); }

IntMatrix gammaprime_member(const TypedElementRank4& e) {
    switch (rank4_precheck(e)) {
        case Rank4Failure::unknown_type: throw MathError("type " + to_string(e.type) + " is not admissible");
        case Rank4Failure::parity: throw ParityViolation(e.to_string());
        case Rank4Failure::norm: throw NormNotFour(e.to_string() + " has norm " + std::to_string(e.norm()));
        case Rank4Failure::determinant: throw DeterminantMismatch(e.to_string());
        case Rank4Failure::none: break;
    }
    auto [h1, h2] = e.pair();
    auto image = as_integer_matrix(phi2(h1, h2));
    if (!image) throw NonIntegralImage(e.to_string());
    if (integer_determinant(*image) != 1) throw DeterminantMismatch(e.to_string() + " image has determinant != 1");
    Lattice t = transcendental_rank4();
    if (!preserves_gram(*image, t)) throw NotIsometry(e.to_string());
    if (!in_o_plus(*image, t)) throw MathError(e.to_string() + " leaves the O+ component");
    return *image;
}

std::optional<TypedElementRank4> rank4_retype(const NumberMatrix& h1, const NumberMatrix& h2) {
    AlgebraicNumber two(2), s7 = root(7);
    // Doubled entries of h1 split into two radicals each.
    std::array<std::map<long, Rational>, 4> parts{
        radical_parts(two * h1(0, 0)), radical_parts(two * h1(1, 1)), radical_parts(two * s7 * h1(0, 1)),
        radical_parts(two * h1(1, 0) / s7)};
    auto all = rank4_types();
    auto excluded = rank4_excluded_types();
    all.insert(all.end(), excluded.begin(), excluded.end());
    for (const auto& t : all) {
        auto take = [&](const std::map<long, Rational>& p, long r1, long r2, long& c1, long& c2) {
            for (const auto& [r, c] : p)
                if (r != r1 && r != r2) return false;
            auto get = [&](long r, long& out) {
                auto it = p.find(r);
                Rational v = it == p.end() ? Rational(0) : it->second;
                auto iv = integer_value(v);
                if (!iv) return false;
                out = *iv;
                return true;
            };
            return get(r1, c1) && get(r2, c2);
        };
        TypedElementRank4 e{t, {}};
        auto& c = e.coords;
        long neg_b2 = 0, neg_d2 = 0;
        if (!take(parts[0], t[0], t[1], c[0], c[2]) || !take(parts[1], t[0], t[1], c[1], neg_b2) ||
            !take(parts[2], t[2], t[3], c[4], c[6]) || !take(parts[3], t[2], t[3], c[5], neg_d2))
            continue;
        c[3] = -neg_b2;
        c[7] = -neg_d2;
        auto [g1, g2] = e.pair();
        if (g1 == h1 && g2 == h2) return e;
        if (g1 == -h1 && g2 == -h2) {
            for (auto& v : c) v = -v;
            return e;
        }
    }
    return std::nullopt;
}

TypeQuad rank4_compose(const TypeQuad& a, const TypeQuad& b) {
    auto [a1, a2] = rank4_representative(a).pair();
    auto [b1, b2] = rank4_representative(b).pair();
    auto e = rank4_retype(a1 * b1, a2 * b2);
    if (!e) throw MathError("product of representatives did not retype");
    return e->type;
}

Table3Report verify_table3(unsigned samples) {
    Table3Report report;
    Lattice t = transcendental_rank4();
    for (const auto& rep : table3_data()) {
        Table3Row row{rep, gammaprime_member(rep), Z3Action::preserves};
        row.z3 = z3_action(row.image, t);
        report.rows.push_back(row);
    }
    report.klein_four = true;
    TypeQuad identity = rank4_types()[0];
    for (const auto& x : rank4_types()) {
        report.klein_four = report.klein_four && rank4_compose(x, x) == identity;
        for (const auto& y : rank4_types()) report.klein_four = report.klein_four && rank4_compose(x, y) == rank4_compose(y, x);
    }

    // Sampled members of the identity coset: short words in simple generators.
    std::vector<std::pair<NumberMatrix, NumberMatrix>> h;
    std::vector<TypedElementRank4> gens{{identity, {2, 2, 0, 0, 0, 0, 2, 0}},
                                        {identity, {2, 2, 0, 0, 0, 0, 0, -2}},
                                        {identity, {5, 5, 1, 1, 0, 0, 0, 0}}};
    auto id2 = NumberMatrix::identity(2).map([](const AlgebraicNumber& x) { return coerce(x, tube_field()); });
    std::pair<NumberMatrix, NumberMatrix> word{id2, id2};
    for (unsigned k = 0; k < samples; ++k) {
        auto [g1, g2] = gens[k % gens.size()].pair();
        if (k % 4 == 3) {
            g1 = sl2_inverse(g1);
            g2 = sl2_inverse(g2);
        }
        word = {word.first * g1, word.second * g2};
        h.push_back(word);
    }
    report.normal = true;
    for (const auto& rep : table3_data()) {
        auto [r1, r2] = rep.pair();
        for (const auto& [m1, m2] : h) {
            auto c = rank4_retype(r1 * m1 * sl2_inverse(r1), r2 * m2 * sl2_inverse(r2));
            report.normal = report.normal && c && c->type == identity;
            auto left = rank4_retype(r1 * m1, r2 * m2);
            report.normal = report.normal && left && left->type == rep.type;
            if (left) gammaprime_member(*left);
        }
    }

    report.excluded_residues = excluded_residue_survivors();
    report.excluded_rejected = true;
    for (const auto& ty : rank4_excluded_types()) {
        TypedElementRank4 e{ty, {}};
        std::array<long, 8>& c = e.coords;
        const long r = 2;
        std::fill(c.begin(), c.end(), -r);
        for (;;) {
            if (rank4_precheck(e) == Rank4Failure::none) {
                try {
                    gammaprime_member(e);
                    report.excluded_rejected = false;
                } catch (const MathError&) {
                }
            }
            std::size_t i = 0;
            for (; i < 8; ++i) {
                if (++c[i] <= r) break;
                c[i] = -r;
            }
            if (i == 8) break;
        }
    }
    return report;
}

std::size_t excluded_residue_survivors() {
    std::size_t survivors = 0;
    for (const auto& t : rank4_excluded_types()) {
        // Every entry of an excluded type is even, so norm / 2 mod 4 depends on residues mod 4.
        std::array<long, 4> h{t[0] / 2, t[1] / 2, t[2] / 2, t[3] / 2};
        std::array<long, 8> c{};
        for (long code = 0; code < (1L << 16); ++code) {
            for (std::size_t i = 0; i < 8; ++i) c[i] = (code >> (2 * i)) & 3;
            auto [a1, a2, b1, b2, g1, g2, d1, d2] = c;
            if ((a1 - b1) % 2 || (a2 - b2) % 2 || (g1 - d1) % 2 || (g2 - d2) % 2) continue;
            long half_norm = a1 * a2 * h[0] - b1 * b2 * h[1] - g1 * g2 * h[2] + d1 * d2 * h[3];
            if (((half_norm - 2) % 4 + 4) % 4 != 0) continue;
            if (((a1 * b2 - a2 * b1 - g1 * d2 + g2 * d1) % 4 + 4) % 4 != 0) continue;
            ++survivors;
        }
    }
    return survivors;
}

std::vector<TypedElementRank4> sample_rank4_identity(unsigned count, unsigned seed, unsigned max_length) {
    TypeQuad identity = rank4_types()[0];
    std::vector<std::pair<NumberMatrix, NumberMatrix>> gens;
    for (const auto& g : std::vector<TypedElementRank4>{{identity, {2, 2, 0, 0, 0, 0, 2, 0}},
                                                        {identity, {2, 2, 0, 0, 0, 0, 0, -2}},
                                                        {identity, {5, 5, 1, 1, 0, 0, 0, 0}}}) {
        auto [g1, g2] = g.pair();
        gens.emplace_back(g1, g2);
        gens.emplace_back(sl2_inverse(g1), sl2_inverse(g2));
    }
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    std::uniform_int_distribution<unsigned> length(1, std::max(1u, max_length));
    std::vector<TypedElementRank4> out;
    while (out.size() < count) {
        auto word = gens[pick(rng)];
        for (unsigned k = 1, n = length(rng); k < n; ++k) {
            const auto& g = gens[pick(rng)];
            word = {word.first * g.first, word.second * g.second};
        }
        auto e = rank4_retype(word.first, word.second);
        if (!e || e->type != identity) throw MathError("identity coset word did not retype");
        out.push_back(*e);
    }
    return out;
}

IntMatrix lattice_involution() {
    IntMatrix p(4, 4, Integer(0));
    p(0, 0) = 1;
    p(1, 1) = 1;
    p(2, 3) = -1;
    p(3, 2) = -1;
    return p;
}

std::pair<NumberMatrix, NumberMatrix> f_hat_pair() {
    AlgebraicNumber s7 = root(7), inv7 = root(7) / AlgebraicNumber(7), zero = coerce(AlgebraicNumber(0), tube_field());
    return {square2(zero, inv7, -s7, zero), square2(zero, s7, -inv7, zero)};
}

InvolutionReport involution_checks() {
    InvolutionReport r;
    Lattice t2 = transcendental_rank4(), t1 = transcendental_rank3();
    IntMatrix p = lattice_involution();
    r.p_in_o_plus = preserves_gram(p, t2) && in_o_plus(p, t2);
    r.p_squared_identity = p * p == IntMatrix::identity(4);
    r.p_det = integer_determinant(p);
    IntMatrix minus = -IntMatrix::identity(3);
    r.minus_id_rank3 = z3_action(minus, t1);
    r.minus_id_rank3_o_plus = in_o_plus(minus, t1);
    auto [f1, f2] = f_hat_pair();
    auto image = as_integer_matrix(phi2(f1, f2));
    r.f_hat_integral = image.has_value();
    if (image) {
        r.f_hat_involution = *image * *image == IntMatrix::identity(4);
        r.f_hat_det = integer_determinant(*image);
        r.f_hat_o_plus = preserves_gram(*image, t2) && in_o_plus(*image, t2);
        r.f_hat_z3 = z3_action(*image, t2);
    }
    return r;
}

}  // namespace cubic7
