#include "cubic7/exactnum/field.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

namespace cubic7 {

namespace {

constexpr unsigned kSeedBits = 320;
constexpr int kMaxConductor = 1000;

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

std::map<std::string, FieldPtr>& registry() {
    static std::map<std::string, FieldPtr> r;
    return r;
}

FieldPtr intern(const std::string& key, FieldKind kind, int conductor, long radicand,
                std::vector<long> radicands) {
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto it = registry().find(key);
    if (it != registry().end()) return it->second;
    auto f = std::make_shared<const NumberField>(kind, conductor, radicand, std::move(radicands));
    registry().emplace(key, f);
    return f;
}

QPoly mulmod(const QPoly& a, const QPoly& b, const QPoly& m) { return divmod(a * b, m).second; }

long quadratic_conductor(long d) {
    long d0 = squarefree_part(d);
    long m = ((d0 % 4) + 4) % 4;
    return m == 1 ? std::labs(d0) : 4 * std::labs(d0);
}

std::string join(const std::vector<long>& v, const std::string& prefix, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + prefix + std::to_string(v[i]);
    return out;
}

// Mask over the radicands of `to` whose product is n times a square, or -1.
int mask_for(long n, const std::vector<long>& rads) {
    long n0 = squarefree_part(n);
    for (int mask = 0; mask < (1 << rads.size()); ++mask) {
        long prod = 1;
        for (std::size_t i = 0; i < rads.size(); ++i)
            if (mask & (1 << i)) prod = squarefree_part(prod * rads[i]);
        if (prod == n0) return mask;
    }
    return -1;
}

}  // namespace

int euler_phi(int n) {
    int out = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        out -= out / p;
    }
    if (n > 1) out -= out / n;
    return out;
}

QPoly cyclotomic_polynomial(int n) {
    auto mobius = [](int m) {
        int out = 1;
        for (int p = 2; p * p <= m; ++p) {
            if (m % p) continue;
            m /= p;
            if (m % p == 0) return 0;
            out = -out;
        }
        return m > 1 ? -out : out;
    };
    QPoly num = QPoly::constant(Rational(1)), den = num;
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        int mu = mobius(n / d);
        QPoly f = QPoly::monomial(Rational(1), d) - QPoly::constant(Rational(1));
        if (mu == 1) num = num * f;
        if (mu == -1) den = den * f;
    }
    return divmod(num, den).first;
}

NumberField::NumberField(FieldKind kind, int conductor, long radicand, std::vector<long> radicands)
    : kind_(kind), conductor_(conductor), radicand_(radicand), radicands_(std::move(radicands)) {
    switch (kind_) {
        case FieldKind::rational:
            key_ = "q";
            name_ = "Q";
            minpoly_ = QPoly::x();
            seed_ = tight_ = Interval::point(Rational(0));
            break;
        case FieldKind::cyclotomic:
            init_cyclotomic();
            break;
        case FieldKind::imaginary_quadratic:
            key_ = "iq:" + std::to_string(radicand_);
            name_ = "Q(sqrt" + std::to_string(radicand_) + ")";
            degree_ = 2;
            minpoly_ = QPoly({Rational(-radicand_), Rational(0), Rational(1)});
            seed_ = tight_ = sqrt_enclosure(Interval::point(Rational(-radicand_)), 64);
            break;
        case FieldKind::multiquadratic:
            init_multiquadratic();
            break;
    }
    degree_ = minpoly_.degree();
    init_reduction();
}

void NumberField::init_reduction() {
    int d = degree_;
    for (const auto& c : minpoly_.coeffs())
        if (!is_integral(c)) throw MathError("non-integral minimal polynomial");
    std::vector<Integer> row(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) row[static_cast<std::size_t>(i)] = -minpoly_.coeff(i).get_num();
    for (int j = 0; j + 1 < d; ++j) {
        reduction_.push_back(row);
        std::vector<Integer> next(static_cast<std::size_t>(d));
        Integer top = row[static_cast<std::size_t>(d - 1)];
        for (int i = d - 1; i >= 1; --i) next[static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(i - 1)];
        for (int i = 0; i < d; ++i) next[static_cast<std::size_t>(i)] += top * reduction_[0][static_cast<std::size_t>(i)];
        row = std::move(next);
    }
}

void NumberField::init_cyclotomic() {
    int n = conductor_;
    key_ = "cyc:" + std::to_string(n);
    name_ = "Q(zeta" + std::to_string(n) + ")";
    minpoly_ = cyclotomic_polynomial(n);
    int phi = minpoly_.degree();

    // minimal polynomial of eta = zeta + zeta^-1 by linear dependency of powers
    QPoly eta = divmod(QPoly::monomial(Rational(1), 1) + QPoly::monomial(Rational(1), n - 1), minpoly_).second;
    int half = phi / 2;
    QMatrix powers(static_cast<std::size_t>(phi), static_cast<std::size_t>(half));
    QPoly acc = QPoly::constant(Rational(1));
    for (int k = 0; k < half; ++k) {
        for (int i = 0; i < phi; ++i) powers(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) = acc.coeff(i);
        acc = mulmod(acc, eta, minpoly_);
    }
    std::vector<Rational> target(static_cast<std::size_t>(phi));
    for (int i = 0; i < phi; ++i) target[static_cast<std::size_t>(i)] = acc.coeff(i);
    auto sol = solve(powers, target);
    if (!sol) throw MathError("cyclotomic real subfield construction failed");
    std::vector<Rational> psi(static_cast<std::size_t>(half) + 1);
    for (int k = 0; k < half; ++k) psi[static_cast<std::size_t>(k)] = -(*sol)[static_cast<std::size_t>(k)];
    psi[static_cast<std::size_t>(half)] = 1;
    cos_poly_ = QPoly(psi);

    // isolate 2cos(2pi/n)
    auto chain = sturm_chain(cos_poly_);
    double hint = 2.0 * std::cos(2.0 * M_PI / n);
    double eps = 1e-6;
    for (;;) {
        Rational lo(hint - eps), hi(hint + eps);
        int c = count_roots(chain, lo, hi);
        if (c == 1) {
            seed_ = {lo, hi};
            break;
        }
        if (c == 0) throw MathError("lost the cyclotomic embedding");
        eps /= 2;
    }
    tight_ = seed_;
    int s_lo = sgn(cos_poly_.eval(tight_.lo));
    if (sgn(cos_poly_.eval(tight_.hi)) == 0) {
        tight_ = Interval::point(tight_.hi);
        return;
    }
    Rational bound(Integer(1), Integer(1) << kSeedBits);
    while (tight_.width() > bound) {
        Rational mid = (tight_.lo + tight_.hi) / 2;
        int s = sgn(cos_poly_.eval(mid));
        if (s == 0) {
            tight_ = Interval::point(mid);
            break;
        }
        if (s == s_lo)
            tight_.lo = mid;
        else
            tight_.hi = mid;
    }
}

void NumberField::init_multiquadratic() {
    key_ = "mq:" + join(radicands_, "", ",");
    name_ = "Q(" + join(radicands_, "sqrt", ",") + ")";
    std::size_t k = radicands_.size();
    std::size_t dim = std::size_t(1) << k;

    auto mul = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::vector<Rational> r(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            if (sgn(a[i]) == 0) continue;
            for (std::size_t j = 0; j < dim; ++j) {
                if (sgn(b[j]) == 0) continue;
                long scale = 1;
                for (std::size_t t = 0; t < k; ++t)
                    if ((i & j) & (std::size_t(1) << t)) scale *= radicands_[t];
                r[i ^ j] += a[i] * b[j] * scale;
            }
        }
        return r;
    };

    std::vector<Rational> alpha(dim), p(dim);
    for (std::size_t t = 0; t < k; ++t) alpha[std::size_t(1) << t] = 1;
    p[0] = 1;
    to_display_ = QMatrix(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t i = 0; i < dim; ++i) to_display_(i, j) = p[i];
        p = mul(p, alpha);
    }
    auto sol = solve(to_display_, p);
    auto inv = inverse(to_display_);
    if (!sol || !inv) throw MathError("multiquadratic generator is not primitive");
    from_display_ = *inv;
    std::vector<Rational> m(dim + 1);
    for (std::size_t j = 0; j < dim; ++j) m[j] = -(*sol)[j];
    m[dim] = 1;
    minpoly_ = QPoly(m);

    for (std::size_t mask = 0; mask < dim; ++mask) {
        long prod = 1;
        for (std::size_t t = 0; t < k; ++t)
            if (mask & (std::size_t(1) << t)) prod *= radicands_[t];
        long sf = squarefree_part(prod);
        display_radicand_.push_back(sf);
        display_scale_.push_back(isqrt(Integer(prod / sf)));
    }
    seed_ = tight_ = Interval::point(Rational(0));
    for (long r : radicands_) seed_ = seed_ + sqrt_enclosure(Interval::point(Rational(r)), 64);
    tight_ = seed_;
}

Box NumberField::generator_enclosure(unsigned bits) const {
    unsigned work = bits + 8;
    switch (kind_) {
        case FieldKind::rational:
            return Box::point(Rational(0));
        case FieldKind::imaginary_quadratic:
            return {Interval::point(Rational(0)), sqrt_enclosure(Interval::point(Rational(-radicand_)), work)};
        case FieldKind::multiquadratic: {
            Interval s = Interval::point(Rational(0));
            for (long r : radicands_) s = s + sqrt_enclosure(Interval::point(Rational(r)), work + 4);
            return {round_out(s, work), Interval::point(Rational(0))};
        }
        case FieldKind::cyclotomic: {
            Interval eta = tight_;
            Rational bound(Integer(1), Integer(1) << (work + 2));
            if (eta.width() > bound) {
                int s_lo = sgn(cos_poly_.eval(eta.lo));
                while (eta.width() > bound) {
                    Rational mid = (eta.lo + eta.hi) / 2;
                    int s = sgn(cos_poly_.eval(mid));
                    if (s == 0) {
                        eta = Interval::point(mid);
                        break;
                    }
                    (s == s_lo ? eta.lo : eta.hi) = mid;
                }
            }
            Interval c = Rational(1, 2) * eta;
            Interval one_minus = Interval::point(Rational(1)) - c * c;
            if (sgn(one_minus.lo) < 0) one_minus.lo = 0;
            Interval s = sqrt_enclosure(one_minus, work + 2);
            return round_out(Box{c, s}, work);
        }
    }
    return Box::point(Rational(0));
}

FieldPtr rationals() { return intern("q", FieldKind::rational, 1, 0, {}); }

FieldPtr cyclotomic(int n) {
    if (n <= 0) throw MathError("cyclotomic conductor must be positive");
    if (n % 4 == 2) n /= 2;
    if (n == 1) return rationals();
    if (n > kMaxConductor) throw UnsupportedComposite("conductor " + std::to_string(n) + " is too large");
    return intern("cyc:" + std::to_string(n), FieldKind::cyclotomic, n, 0, {});
}

FieldPtr quadratic(long d) {
    if (d == 0) throw MathError("sqrt(0) does not generate a field");
    long d0 = squarefree_part(d);
    if (d0 == 1) return rationals();
    if (d0 == -1) return cyclotomic(4);
    if (d0 == -3) return cyclotomic(3);
    if (d0 < 0) return intern("iq:" + std::to_string(d0), FieldKind::imaginary_quadratic, 1, d0, {});
    return multiquadratic({d0});
}

FieldPtr multiquadratic(const std::vector<long>& radicands) {
    std::vector<long> primes;
    for (long r : radicands) {
        if (r <= 0) throw UnsupportedComposite("multiquadratic radicands must be positive");
        for (long p : factor(r))
            if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
    }
    std::sort(primes.begin(), primes.end());
    std::vector<std::vector<int>> rows;
    for (long r : radicands) {
        std::vector<int> row(primes.size(), 0);
        for (long p : factor(r)) row[static_cast<std::size_t>(std::find(primes.begin(), primes.end(), p) - primes.begin())] ^= 1;
        rows.push_back(row);
    }
    // reduced row echelon form over F2
    std::size_t rank = 0;
    for (std::size_t c = 0; c < primes.size() && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && !rows[p][c]) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != rank && rows[i][c])
                for (std::size_t j = 0; j < primes.size(); ++j) rows[i][j] ^= rows[rank][j];
        ++rank;
    }
    rows.resize(rank);
    if (rows.empty()) return rationals();
    if (rows.size() > 4) throw UnsupportedComposite("more than four quadratic generators");
    std::vector<long> basis;
    for (const auto& row : rows) {
        long prod = 1;
        for (std::size_t j = 0; j < primes.size(); ++j)
            if (row[j]) prod *= primes[j];
        basis.push_back(prod);
    }
    return intern("mq:" + join(basis, "", ","), FieldKind::multiquadratic, 1, 0, basis);
}

bool embeds(const FieldPtr& from, const FieldPtr& to) {
    if (from == to || from->kind() == FieldKind::rational) return true;
    switch (from->kind()) {
        case FieldKind::cyclotomic:
            return to->kind() == FieldKind::cyclotomic && to->conductor() % from->conductor() == 0;
        case FieldKind::imaginary_quadratic:
            return to->kind() == FieldKind::cyclotomic &&
                   to->conductor() % quadratic_conductor(from->radicand()) == 0;
        case FieldKind::multiquadratic:
            for (long r : from->radicands()) {
                if (to->kind() == FieldKind::cyclotomic) {
                    if (to->conductor() % quadratic_conductor(r) != 0) return false;
                } else if (to->kind() == FieldKind::multiquadratic) {
                    if (mask_for(r, to->radicands()) < 0) return false;
                } else {
                    return false;
                }
            }
            return true;
        default:
            return false;
    }
}

FieldPtr compose_fields(const FieldPtr& a, const FieldPtr& b) {
    if (embeds(a, b)) return b;
    if (embeds(b, a)) return a;
    if (a->kind() == FieldKind::multiquadratic && b->kind() == FieldKind::multiquadratic) {
        std::vector<long> rads = a->radicands();
        rads.insert(rads.end(), b->radicands().begin(), b->radicands().end());
        return multiquadratic(rads);
    }
    auto conductor_of = [](const FieldPtr& f) -> long {
        switch (f->kind()) {
            case FieldKind::cyclotomic:
                return f->conductor();
            case FieldKind::imaginary_quadratic:
                return quadratic_conductor(f->radicand());
            case FieldKind::multiquadratic: {
                long c = 1;
                for (long r : f->radicands()) c = std::lcm(c, quadratic_conductor(r));
                return c;
            }
            default:
                return 1;
        }
    };
    long n = std::lcm(conductor_of(a), conductor_of(b));
    if (n > kMaxConductor || euler_phi(static_cast<int>(n)) > 96)
        throw UnsupportedComposite(a->name() + " and " + b->name());
    return cyclotomic(static_cast<int>(n));
}

FieldPtr field_from_minpoly(const QPoly& m) {
    {
        std::lock_guard<std::mutex> lock(registry_mutex());
        for (const auto& [key, f] : registry())
            if (f->minimal_polynomial() == m) return f;
    }
    if (m.degree() == 1 && m == QPoly::x()) return rationals();
    if (m.degree() == 2 && sgn(m.coeff(1)) == 0 && m.leading() == 1 && is_integral(m.coeff(0))) {
        long d = -m.coeff(0).get_num().get_si();
        if (squarefree_part(d) == d && d != 1) {
            FieldPtr f = quadratic(d);
            if (f->minimal_polynomial() == m) return f;
        }
    }
    for (int n = 3; n <= kMaxConductor; ++n) {
        if (n % 4 == 2 || euler_phi(n) != m.degree()) continue;
        if (cyclotomic_polynomial(n) == m) return cyclotomic(n);
    }
    return nullptr;
}

}  // namespace cubic7
