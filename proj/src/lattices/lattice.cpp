#include "cubic7/lattices/lattice.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "cubic7/exactnum/algebraic.hpp"
#include "cubic7/polyalg/poly.hpp"

namespace cubic7 {

namespace {

IntMatrix from_longs(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Integer>> out;
    for (const auto& r : rows) {
        std::vector<Integer> row;
        for (long v : r) row.emplace_back(v);
        out.push_back(std::move(row));
    }
    return IntMatrix::from_rows(out);
}

Matrix<Rational> to_rational(const IntMatrix& m) {
    return m.map([](const Integer& v) { return Rational(v); });
}

Rational mod_positive(const Rational& x, long m) {
    Rational r = x - Rational(floor_of(x / m) * m);
    r.canonicalize();
    return r;
}

std::pair<int, int> congruence_signature(const IntMatrix& gram) {
    auto a = to_rational(gram);
    std::size_t n = a.rows();
    int pos = 0, neg = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (a(i, i) == 0) {
            std::size_t j = i + 1;
            while (j < n && a(j, j) == 0) ++j;
            if (j < n) {
                for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
                for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
            } else {
                j = i + 1;
                while (j < n && a(i, j) == 0) ++j;
                if (j == n) continue;
                for (std::size_t k = 0; k < n; ++k) a(i, k) += a(j, k);
                for (std::size_t k = 0; k < n; ++k) a(k, i) += a(k, j);
            }
        }
        Rational p = a(i, i);
        for (std::size_t j = i + 1; j < n; ++j) {
            if (a(j, i) == 0) continue;
            Rational f = a(j, i) / p;
            for (std::size_t k = 0; k < n; ++k) a(j, k) -= f * a(i, k);
            for (std::size_t k = 0; k < n; ++k) a(k, j) -= f * a(k, i);
        }
        (p > 0 ? pos : neg) += 1;
    }
    return {pos, neg};
}

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(i, k), m(j, k));
}
void swap_cols(IntMatrix& m, std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < m.rows(); ++k) std::swap(m(k, i), m(k, j));
}
// row i += c * row j
void add_row(IntMatrix& m, std::size_t i, std::size_t j, const Integer& c) {
    for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) += c * m(j, k);
}
void add_col(IntMatrix& m, std::size_t i, std::size_t j, const Integer& c) {
    for (std::size_t k = 0; k < m.rows(); ++k) m(k, i) += c * m(k, j);
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

Lattice::Lattice(IntMatrix gram) : gram_(std::move(gram)) {
    if (!gram_.square()) throw DimensionMismatch("gram matrix is not square");
    if (gram_ != gram_.transpose()) throw MathError("gram matrix is not symmetric");
    det_ = integer_determinant(gram_);
    if (det_ == 0) throw MathError("gram matrix is degenerate");
    signature_ = congruence_signature(gram_);
}

bool Lattice::is_even() const {
    for (std::size_t i = 0; i < rank(); ++i)
        if (gram_(i, i) % 2 != 0) return false;
    return true;
}

Integer Lattice::norm(const IntVector& v) const {
    if (v.size() != rank()) throw DimensionMismatch("vector length differs from lattice rank");
    Integer s = 0;
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j) s += v[i] * gram_(i, j) * v[j];
    return s;
}

Rational Lattice::pairing(const RatVector& x, const RatVector& y) const {
    if (x.size() != rank() || y.size() != rank()) throw DimensionMismatch("vector length differs from lattice rank");
    Rational s = 0;
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j) s += x[i] * Rational(gram_(i, j)) * y[j];
    return s;
}

Lattice transcendental_rank3() { return Lattice(from_longs({{-2, 1, 0}, {1, 10, 0}, {0, 0, -28}})); }

Lattice transcendental_rank4() {
    return Lattice(from_longs({{-2, 1, 0, 0}, {1, 10, 0, 0}, {0, 0, 0, 7}, {0, 0, 7, 0}}));
}

Lattice hyperbolic_plane() { return Lattice(from_longs({{0, 1}, {1, 0}})); }

Lattice a2_lattice() { return Lattice(from_longs({{2, -1}, {-1, 2}})); }

Lattice e8_lattice() {
    // Cartan matrix with the branch node attached to the third node.
    IntMatrix g(8, 8, Integer(0));
    for (std::size_t i = 0; i < 8; ++i) g(i, i) = 2;
    auto link = [&](std::size_t i, std::size_t j) { g(i, j) = g(j, i) = -1; };
    for (std::size_t i = 0; i + 1 < 7; ++i) link(i, i + 1);
    link(2, 7);
    return Lattice(g);
}

std::string genus_annotation(const Lattice& l) {
    if (l.gram() == transcendental_rank3().gram()) return "4_1^{+1} 7^{+2} 3^{-1}";
    if (l.gram() == transcendental_rank4().gram()) return "7^{+3} 3^{-1}";
    return "";
}

Lattice lattice_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
    if (!j.contains("gram") || !j["gram"].is_array()) throw ParseError("expected {\"gram\": [[...]]}");
    std::vector<std::vector<Integer>> rows;
    for (const auto& r : j["gram"]) {
        if (!r.is_array()) throw ParseError("gram rows must be arrays");
        std::vector<Integer> row;
        for (const auto& v : r) {
            if (v.is_number_integer()) row.emplace_back(v.get<long>());
            else if (v.is_string()) row.emplace_back(v.get<std::string>());
            else throw ParseError("gram entries must be integers");
        }
        rows.push_back(std::move(row));
    }
    try {
        return Lattice(IntMatrix::from_rows(rows));
    } catch (const DimensionMismatch& e) {
        throw ParseError(e.what());
    }
}

Integer integer_determinant(const IntMatrix& m) {
    if (!m.square()) throw DimensionMismatch("determinant of a non-square matrix");
    Rational d = determinant(to_rational(m));
    return Integer(d);
}

bool is_unimodular(const IntMatrix& m) {
    if (!m.square()) return false;
    Integer d = integer_determinant(m);
    return d == 1 || d == -1;
}

SmithForm smith_normal_form(const IntMatrix& m) {
    IntMatrix d = m;
    IntMatrix u = IntMatrix::identity(m.rows()), v = IntMatrix::identity(m.cols());
    std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // Move the smallest nonzero entry of the trailing block to the pivot.
            std::optional<std::pair<std::size_t, std::size_t>> best;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (d(i, j) != 0 && (!best || abs(d(i, j)) < abs(d(best->first, best->second)))) best = {{i, j}};
            if (!best) break;
            swap_rows(d, t, best->first);
            swap_rows(u, t, best->first);
            swap_cols(d, t, best->second);
            swap_cols(v, t, best->second);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                Integer q = d(i, t) / d(t, t);
                if (q != 0) {
                    add_row(d, i, t, -q);
                    add_row(u, i, t, -q);
                }
                clean = clean && d(i, t) == 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                Integer q = d(t, j) / d(t, t);
                if (q != 0) {
                    add_col(d, j, t, -q);
                    add_col(v, j, t, -q);
                }
                clean = clean && d(t, j) == 0;
            }
            if (!clean) continue;
            // Divisibility: fold an offending row into the pivot row.
            std::optional<std::size_t> bad;
            for (std::size_t i = t + 1; i < rows && !bad; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (!bad) break;
            add_row(d, t, *bad, Integer(1));
            add_row(u, t, *bad, Integer(1));
        }
        if (d(t, t) < 0) {
            for (std::size_t k = 0; k < cols; ++k) d(t, k) = -d(t, k);
            for (std::size_t k = 0; k < u.cols(); ++k) u(t, k) = -u(t, k);
        }
    }
    return {u, d, v};
}

Integer DiscriminantGroup::order() const {
    Integer n = 1;
    for (const auto& f : invariant_factors) n *= f;
    return n;
}

RatVector DiscriminantGroup::element(const std::vector<long>& coeffs) const {
    if (coeffs.size() != generators.size()) throw DimensionMismatch("coefficient count differs from generator count");
    RatVector x(rank, Rational(0));
    for (std::size_t g = 0; g < generators.size(); ++g)
        for (std::size_t i = 0; i < rank; ++i) x[i] += Rational(coeffs[g]) * generators[g][i];
    for (auto& c : x) c = mod_positive(c, 1);
    return x;
}

Rational discriminant_q(const Lattice& l, const RatVector& x) { return mod_positive(l.pairing(x, x), 2); }

Rational discriminant_b(const Lattice& l, const RatVector& x, const RatVector& y) {
    return mod_positive(l.pairing(x, y), 1);
}

DiscriminantGroup discriminant_group(const Lattice& l) {
    auto snf = smith_normal_form(l.gram());
    DiscriminantGroup a;
    std::size_t n = l.rank();
    a.rank = n;
    // G = U^-1 D V^-1, so the dual G^-1 Z^n is generated by the columns of V D^-1.
    for (std::size_t i = 0; i < n; ++i) {
        Integer f = snf.d(i, i);
        if (f == 1) continue;
        RatVector g;
        for (std::size_t k = 0; k < n; ++k) {
            Rational c(snf.v(k, i), f);
            c.canonicalize();
            g.push_back(c);
        }
        a.invariant_factors.push_back(f);
        a.generators.push_back(std::move(g));
    }
    if (a.order() != abs(l.determinant())) throw DeterminantMismatch("invariant factors do not multiply to |det|");
    for (const auto& g : a.generators) a.q_values.push_back(discriminant_q(l, g));
    for (const auto& g : a.generators) {
        std::vector<Rational> row;
        for (const auto& h : a.generators) row.push_back(discriminant_b(l, g, h));
        a.b_values.push_back(std::move(row));
    }
    return a;
}

bool polarization_consistent(const Lattice& l, const DiscriminantGroup& a) {
    std::vector<RatVector> elems;
    std::vector<Rational> qs;
    a.for_each([&](const std::vector<long>& c) {
        elems.push_back(a.element(c));
        qs.push_back(discriminant_q(l, elems.back()));
    });
    std::size_t n = l.rank();
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i; j < elems.size(); ++j) {
            RatVector s(n);
            for (std::size_t k = 0; k < n; ++k) s[k] = elems[i][k] + elems[j][k];
            Rational lhs = discriminant_q(l, s) - qs[i] - qs[j];
            Rational rhs = 2 * discriminant_b(l, elems[i], elems[j]);
            if (mod_positive(lhs - rhs, 2) != 0) return false;
        }
    return true;
}

std::string discriminant_json(const Lattice& l, const DiscriminantGroup& a) {
    nlohmann::json j;
    std::vector<std::vector<std::string>> gram;
    for (std::size_t i = 0; i < l.rank(); ++i) {
        std::vector<std::string> row;
        for (std::size_t k = 0; k < l.rank(); ++k) row.push_back(to_string(l.gram()(i, k)));
        gram.push_back(std::move(row));
    }
    j["gram"] = gram;
    j["determinant"] = to_string(l.determinant());
    j["signature"] = {l.signature().first, l.signature().second};
    std::vector<std::string> factors, qs;
    for (const auto& f : a.invariant_factors) factors.push_back(to_string(f));
    for (const auto& q : a.q_values) qs.push_back(to_string(q));
    j["invariant_factors"] = factors;
    j["order"] = to_string(a.order());
    std::vector<std::vector<std::string>> gens, bs;
    for (const auto& g : a.generators) {
        std::vector<std::string> v;
        for (const auto& c : g) v.push_back(to_string(c));
        gens.push_back(std::move(v));
    }
    for (const auto& row : a.b_values) {
        std::vector<std::string> v;
        for (const auto& c : row) v.push_back(to_string(c));
        bs.push_back(std::move(v));
    }
    j["generators"] = gens;
    j["q_values"] = qs;
    j["b_values"] = bs;
    auto annotation = genus_annotation(l);
    if (!annotation.empty()) j["genus_annotation"] = annotation;
    return j.dump(2);
}

MilgramReport milgram_phase(const Lattice& l) {
    if (!l.is_even()) throw NotEven("discriminant form needs an even lattice");
    auto a = discriminant_group(l);
    // exp(pi i q) = zeta_N^k with k = N q / 2.
    std::vector<Rational> qs;
    long conductor = 8;
    a.for_each([&](const std::vector<long>& c) {
        Rational half = discriminant_q(l, a.element(c)) / 2;
        half.canonicalize();
        conductor = std::lcm(conductor, half.get_den().get_si());
        qs.push_back(half);
    });
    std::vector<long> counts(static_cast<std::size_t>(conductor), 0);
    for (const auto& h : qs) counts[static_cast<std::size_t>(Integer(h * conductor).get_si() % conductor)] += 1;
    FieldPtr field = cyclotomic(static_cast<int>(conductor));
    AlgebraicNumber sum(0);
    for (long k = 0; k < conductor; ++k)
        if (counts[static_cast<std::size_t>(k)] != 0)
            sum += AlgebraicNumber(counts[static_cast<std::size_t>(k)]) * root_of_unity(static_cast<int>(conductor), k, field);
    AlgebraicNumber order(a.order());
    MilgramReport out;
    out.phase = -1;
    for (int s = 0; s < 8; ++s) {
        AlgebraicNumber w = sum * root_of_unity(8, -s, field);
        if (w.conj() == w && w * w == order && sign_of(w) == Sign::positive) {
            out.phase = s;
            break;
        }
    }
    if (out.phase < 0) throw MathError("Gauss sum is not sqrt|A| times an eighth root of unity");
    out.signature_mod8 = ((l.signature().first - l.signature().second) % 8 + 8) % 8;
    out.matches = out.phase == out.signature_mod8;
    return out;
}

std::optional<IntVector> isotropic_search(const Lattice& l, long bound, unsigned workers) {
    if (bound < 1) throw MathError("search bound must be positive");
    std::size_t n = l.rank();
    std::vector<long> g(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g[i * n + j] = l.gram()(i, j).get_si();
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());

    using Hit = std::vector<long>;
    auto sup = [](const Hit& v) {
        long m = 0;
        for (long x : v) m = std::max(m, std::labs(x));
        return m;
    };
    auto lead = [](const Hit& v) {
        return static_cast<std::size_t>(std::find_if(v.begin(), v.end(), [](long x) { return x != 0; }) - v.begin());
    };
    auto better = [&](const Hit& a, const Hit& b) {
        if (sup(a) != sup(b)) return sup(a) < sup(b);
        if (lead(a) != lead(b)) return lead(a) < lead(b);
        return a < b;
    };

    // Work units fix the leading index and its positive value.
    std::vector<std::pair<std::size_t, long>> units;
    for (std::size_t i = 0; i < n; ++i)
        for (long v = 1; v <= bound; ++v) units.emplace_back(i, v);
    std::atomic<std::size_t> next{0};
    std::vector<std::optional<Hit>> best(workers);

    auto run = [&](unsigned w) {
        Hit v(n);
        for (std::size_t u; (u = next.fetch_add(1)) < units.size();) {
            auto [li, lv] = units[u];
            std::fill(v.begin(), v.end(), 0);
            v[li] = lv;
            std::size_t free = n - li - 1;
            for (std::size_t k = li + 1; k < n; ++k) v[k] = -bound;
            for (;;) {
                long s = 0;
                for (std::size_t i = li; i < n; ++i) {
                    if (v[i] == 0) continue;
                    long row = 0;
                    for (std::size_t j = li; j < n; ++j) row += g[i * n + j] * v[j];
                    s += v[i] * row;
                }
                if (s == 0 && (!best[w] || better(v, *best[w]))) best[w] = v;
                std::size_t k = 0;
                for (; k < free; ++k) {
                    long& x = v[n - 1 - k];
                    if (++x <= bound) break;
                    x = -bound;
                }
                if (k == free) break;
            }
        }
    };
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();

    std::optional<Hit> winner;
    for (const auto& b : best)
        if (b && (!winner || better(*b, *winner))) winner = b;
    if (!winner) return std::nullopt;
    IntVector out;
    for (long x : *winner) out.emplace_back(x);
    if (l.norm(out) != 0) throw MathError("isotropic candidate failed re-verification");
    return out;
}

Integer QuadraticForm::eval(const std::vector<Integer>& x) const {
    if (x.size() != variables()) throw DimensionMismatch("argument count differs from form size");
    Integer s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i; j < x.size(); ++j) s += coeffs(i, j) * x[i] * x[j];
    return s;
}

QuadraticForm parse_quadratic_form(const std::string& text, int nvars) {
    Poly p = parse_poly(text, nvars);
    IntMatrix c(static_cast<std::size_t>(nvars), static_cast<std::size_t>(nvars), Integer(0));
    for (const auto& [m, coeff] : p.terms()) {
        if (m.degree() != 2) throw ParseError("quadratic form has a term of degree " + std::to_string(m.degree()));
        if (!coeff.is_rational() || !is_integral(coeff.to_rational())) throw ParseError("coefficients must be integers");
        std::vector<std::size_t> idx;
        for (int i = 0; i < nvars; ++i)
            for (int e = 0; e < m[i]; ++e) idx.push_back(static_cast<std::size_t>(i));
        c(idx[0], idx[1]) += Integer(coeff.to_rational());
    }
    return {c};
}

QuadraticForm half_norm_form(const Lattice& l) {
    if (!l.is_even()) throw NotEven("half norm needs an even lattice");
    std::size_t n = l.rank();
    IntMatrix c(n, n, Integer(0));
    for (std::size_t i = 0; i < n; ++i) {
        c(i, i) = l.gram()(i, i) / 2;
        for (std::size_t j = i + 1; j < n; ++j) c(i, j) = l.gram()(i, j);
    }
    return {c};
}

bool local_obstruction(const QuadraticForm& f, long modulus) {
    if (modulus > 1024) throw ModulusTooLarge(std::to_string(modulus) + " exceeds 2^10");
    long p = 0;
    for (long d = 2; d <= modulus; ++d)
        if (modulus % d == 0) {
            p = d;
            break;
        }
    long rest = modulus;
    while (p && rest % p == 0) rest /= p;
    if (!is_prime(p) || rest != 1) throw MathError(std::to_string(modulus) + " is not a prime power");
    int depth = 0;
    for (long m = 1; m < modulus; m *= p) ++depth;

    std::size_t n = f.variables();
    std::vector<long long> c(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c[i * n + j] = f.coeffs(i, j).get_si();
    auto value = [&](const std::vector<long long>& x, long long mod) {
        long long s = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) s = (s + c[i * n + j] % mod * x[i] % mod * x[j]) % mod;
        return (s % mod + mod) % mod;
    };
    long long pn = 1;
    for (std::size_t i = 0; i < n; ++i) pn *= p;

    // Depth-first Hensel lifting: a zero mod p^(k+1) reduces to a zero mod p^k.
    std::vector<long long> x(n, 0);
    auto lift = [&](auto&& self, int level, long long scale) -> bool {
        if (level == depth) return true;
        std::vector<long long> base = x;
        for (long long code = 0; code < pn; ++code) {
            long long r = code;
            bool primitive = level > 0;
            for (std::size_t i = 0; i < n; ++i) {
                long long digit = r % p;
                r /= p;
                x[i] = base[i] + digit * scale;
                primitive = primitive || digit != 0;
            }
            if (!primitive) continue;
            if (value(x, scale * p) == 0 && self(self, level + 1, scale * p)) return true;
        }
        x = base;
        return false;
    };
    return !lift(lift, 0, 1);
}

}  // namespace cubic7
