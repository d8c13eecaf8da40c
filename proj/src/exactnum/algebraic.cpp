#include "cubic7/exactnum/algebraic.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

namespace cubic7 {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

FieldPtr join_fields(const FieldPtr& a, const FieldPtr& b) {
    if (a == b) return a;
    if (embeds(a, b)) return b;
    if (embeds(b, a)) return a;
    throw FieldMismatch(a->name() + " and " + b->name() + " have no common catalog field");
}

std::string constant_name(const FieldPtr& f) {
    if (f->kind() == FieldKind::cyclotomic) return f->conductor() == 3 ? "omega" : "zeta" + std::to_string(f->conductor());
    if (f->kind() == FieldKind::imaginary_quadratic) return "sqrt" + std::to_string(f->radicand());
    return "a";
}

long legendre(long a, long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    long r = 1, base = a, e = (p - 1) / 2;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

}  // namespace

AlgebraicNumber::AlgebraicNumber() : field_(rationals()), num_(1) {}
AlgebraicNumber::AlgebraicNumber(int v) : AlgebraicNumber(static_cast<long>(v)) {}
AlgebraicNumber::AlgebraicNumber(long v) : field_(rationals()), num_{Integer(v)} {}
AlgebraicNumber::AlgebraicNumber(const Integer& v) : field_(rationals()), num_{v} {}

AlgebraicNumber::AlgebraicNumber(const Rational& v)
    : field_(rationals()), num_{v.get_num()}, den_(v.get_den()) {}

AlgebraicNumber::AlgebraicNumber(FieldPtr field, const std::vector<Rational>& coords) : field_(std::move(field)) {
    int d = field_->degree();
    if (coords.size() > idx(d)) throw DimensionMismatch("too many coordinates for " + field_->name());
    den_ = 1;
    for (const auto& c : coords) den_ = lcm(den_, Integer(c.get_den()));
    num_.assign(idx(d), Integer(0));
    for (std::size_t i = 0; i < coords.size(); ++i) num_[i] = coords[i].get_num() * (den_ / coords[i].get_den());
    normalize();
}

AlgebraicNumber AlgebraicNumber::generator(const FieldPtr& field) {
    if (field->degree() == 1) return AlgebraicNumber(field, {Rational(0)});
    return AlgebraicNumber(field, {Rational(0), Rational(1)});
}

AlgebraicNumber AlgebraicNumber::from_poly(const FieldPtr& field, const QPoly& p) {
    QPoly r = divmod(p, field->minimal_polynomial()).second;
    return AlgebraicNumber(field, r.coeffs());
}

void AlgebraicNumber::normalize() {
    if (sgn(den_) < 0) {
        den_ = -den_;
        for (auto& n : num_) n = -n;
    }
    Integer g = den_;
    for (const auto& n : num_) {
        if (g == 1) break;
        g = gcd(g, n);
    }
    if (g != 1) {
        for (auto& n : num_) mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

std::vector<Rational> AlgebraicNumber::coords() const {
    std::vector<Rational> out;
    for (const auto& n : num_) {
        Rational q(n, den_);
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

Rational AlgebraicNumber::coord(int i) const {
    if (i < 0 || i >= static_cast<int>(num_.size())) return 0;
    Rational q(num_[idx(i)], den_);
    q.canonicalize();
    return q;
}

QPoly AlgebraicNumber::to_poly() const { return QPoly(coords()); }

bool AlgebraicNumber::is_zero() const {
    for (const auto& n : num_)
        if (sgn(n) != 0) return false;
    return true;
}

bool AlgebraicNumber::is_rational() const {
    for (std::size_t i = 1; i < num_.size(); ++i)
        if (sgn(num_[i]) != 0) return false;
    return true;
}

bool AlgebraicNumber::is_one() const { return is_rational() && num_[0] == den_; }

Rational AlgebraicNumber::to_rational() const {
    if (!is_rational()) throw MathError("element is not rational");
    return coord(0);
}

AlgebraicNumber AlgebraicNumber::scaled(const Rational& q) const {
    AlgebraicNumber r = *this;
    for (auto& n : r.num_) n *= q.get_num();
    r.den_ *= q.get_den();
    r.normalize();
    return r;
}

FieldPtr common_field(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.field() == b.field()) return a.field();
    if (a.is_rational()) return b.field();
    if (b.is_rational()) return a.field();
    return join_fields(a.field(), b.field());
}

AlgebraicNumber coerce(const AlgebraicNumber& x, const FieldPtr& to) {
    if (x.field_ == to) return x;
    if (x.is_rational()) {
        AlgebraicNumber r(to, {});
        r.num_[0] = x.num_[0];
        r.den_ = x.den_;
        return r;
    }
    if (!embeds(x.field_, to)) throw FieldMismatch(x.field_->name() + " does not embed in " + to->name());

    static std::mutex mutex;
    static std::map<std::pair<std::string, std::string>, AlgebraicNumber> images;
    auto key = std::make_pair(x.field_->key(), to->key());
    AlgebraicNumber image;
    bool found = false;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = images.find(key);
        if (it != images.end()) {
            image = it->second;
            found = true;
        }
    }
    if (!found) {
        const FieldPtr& from = x.field_;
        switch (from->kind()) {
            case FieldKind::cyclotomic:
                image = root_of_unity(from->conductor(), 1, to);
                break;
            case FieldKind::imaginary_quadratic:
                image = sqrt_in(from->radicand(), to);
                break;
            case FieldKind::multiquadratic:
                image = AlgebraicNumber(to, {});
                for (long r : from->radicands()) image = image + sqrt_in(r, to);
                break;
            default:
                throw FieldMismatch("no embedding of " + from->name());
        }
        std::lock_guard<std::mutex> lock(mutex);
        images.emplace(key, image);
    }
    AlgebraicNumber acc(to, {});
    for (std::size_t i = x.num_.size(); i-- > 0;) acc = acc * image + AlgebraicNumber(to, {Rational(x.num_[i])});
    return acc.scaled(Rational(Integer(1), x.den_));
}

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    FieldPtr f = common_field(a, b);
    AlgebraicNumber x = coerce(a, f), y = coerce(b, f);
    AlgebraicNumber r(f, {});
    r.den_ = x.den_ * y.den_;
    for (std::size_t i = 0; i < r.num_.size(); ++i) r.num_[i] = x.num_[i] * y.den_ + y.num_[i] * x.den_;
    r.normalize();
    return r;
}

AlgebraicNumber operator-(const AlgebraicNumber& a) {
    AlgebraicNumber r = a;
    for (auto& n : r.num_) n = -n;
    return r;
}

AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a + (-b); }

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.is_rational() && b.field() != rationals()) return b.scaled(a.to_rational());
    if (b.is_rational()) return coerce(a, common_field(a, b)).scaled(b.to_rational());
    FieldPtr f = common_field(a, b);
    AlgebraicNumber x = coerce(a, f), y = coerce(b, f);
    int d = f->degree();
    std::vector<Integer> prod(idx(2 * d - 1));
    for (int i = 0; i < d; ++i) {
        if (sgn(x.num_[idx(i)]) == 0) continue;
        for (int j = 0; j < d; ++j)
            mpz_addmul(prod[idx(i + j)].get_mpz_t(), x.num_[idx(i)].get_mpz_t(), y.num_[idx(j)].get_mpz_t());
    }
    const auto& table = f->reduction_table();
    for (int k = 2 * d - 2; k >= d; --k) {
        const Integer& c = prod[idx(k)];
        if (sgn(c) == 0) continue;
        const auto& row = table[idx(k - d)];
        for (int i = 0; i < d; ++i)
            if (sgn(row[idx(i)]) != 0) mpz_addmul(prod[idx(i)].get_mpz_t(), c.get_mpz_t(), row[idx(i)].get_mpz_t());
    }
    AlgebraicNumber r(f, {});
    for (int i = 0; i < d; ++i) r.num_[idx(i)] = std::move(prod[idx(i)]);
    r.den_ = x.den_ * y.den_;
    r.normalize();
    return r;
}

AlgebraicNumber AlgebraicNumber::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (is_rational()) return AlgebraicNumber(field_, {1 / to_rational()});
    auto [g, s] = xgcd_inverse(to_poly(), field_->minimal_polynomial());
    if (g.degree() != 0) throw MathError("minimal polynomial of " + field_->name() + " is reducible");
    return from_poly(field_, s);
}

AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (b.is_zero()) throw DivisionByZero("division by zero");
    if (b.is_rational()) return coerce(a, common_field(a, b)).scaled(1 / b.to_rational());
    return a * b.inverse();
}

bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.field_ == b.field_) return a.den_ == b.den_ && a.num_ == b.num_;
    if (a.is_rational() && b.is_rational()) return a.den_ == b.den_ && a.num_[0] == b.num_[0];
    if (a.is_rational() != b.is_rational()) return false;
    FieldPtr f = join_fields(a.field_, b.field_);
    AlgebraicNumber x = coerce(a, f), y = coerce(b, f);
    return x.den_ == y.den_ && x.num_ == y.num_;
}

AlgebraicNumber AlgebraicNumber::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    AlgebraicNumber result(field_, {Rational(1)}), base = *this;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

AlgebraicNumber AlgebraicNumber::conj() const {
    switch (field_->kind()) {
        case FieldKind::cyclotomic: {
            int n = field_->conductor();
            std::vector<Rational> c(idx(n));
            auto q = coords();
            c[0] = q[0];
            for (std::size_t i = 1; i < q.size(); ++i) c[idx(n) - i] = q[i];
            return from_poly(field_, QPoly(c));
        }
        case FieldKind::imaginary_quadratic: {
            auto q = coords();
            return AlgebraicNumber(field_, {q[0], -q[1]});
        }
        default:
            return *this;
    }
}

AlgebraicNumber AlgebraicNumber::galois(unsigned flips) const {
    if (field_->kind() == FieldKind::rational) return *this;
    if (field_->kind() != FieldKind::multiquadratic) throw MathError("galois flips need a multiquadratic field");
    auto disp = field_->power_to_display() * coords();
    for (std::size_t m = 0; m < disp.size(); ++m)
        if (std::popcount(static_cast<unsigned>(m) & flips) % 2) disp[m] = -disp[m];
    return AlgebraicNumber(field_, field_->display_to_power() * disp);
}

Box AlgebraicNumber::enclosure(unsigned bits) const {
    unsigned work = bits + 32;
    Box g = field_->generator_enclosure(work);
    Box acc = Box::point(Rational(0));
    for (std::size_t i = num_.size(); i-- > 0;) acc = round_out(acc * g + Box::point(Rational(num_[i])), work);
    Rational inv(Integer(1), den_);
    return round_out(inv * acc, bits);
}

std::complex<double> AlgebraicNumber::approx() const {
    Box b = enclosure(64);
    Rational re = (b.re.lo + b.re.hi) / 2, im = (b.im.lo + b.im.hi) / 2;
    return {re.get_d(), im.get_d()};
}

std::string AlgebraicNumber::to_string() const {
    std::string out = "(";
    auto q = coords();
    for (std::size_t i = 0; i < q.size(); ++i) out += (i ? ", " : "") + cubic7::to_string(q[i]);
    return out + ") over " + cubic7::to_string(field_->minimal_polynomial(), "a");
}

std::string AlgebraicNumber::display() const {
    std::vector<std::pair<Rational, std::string>> terms;
    auto q = coords();
    if (field_->kind() == FieldKind::multiquadratic) {
        auto disp = field_->power_to_display() * q;
        for (std::size_t m = 0; m < disp.size(); ++m) {
            if (sgn(disp[m]) == 0) continue;
            Rational c = disp[m] * Rational(field_->display_scales()[m]);
            terms.emplace_back(c, m == 0 ? "" : "sqrt" + std::to_string(field_->display_radicands()[m]));
        }
        std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
            auto radicand = [](const std::string& n) { return n.empty() ? 0L : std::stol(n.substr(4)); };
            return radicand(x.second) < radicand(y.second);
        });
    } else {
        std::string g = constant_name(field_);
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (sgn(q[i]) == 0) continue;
            std::string name = i == 0 ? "" : (i == 1 ? g : g + "^" + std::to_string(i));
            terms.emplace_back(q[i], name);
        }
    }
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [c, name] : terms) {
        bool neg = sgn(c) < 0;
        Rational a = abs(c);
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (name.empty())
            out += cubic7::to_string(a);
        else if (a == 1)
            out += name;
        else
            out += cubic7::to_string(a) + "*" + name;
    }
    return out;
}

std::size_t AlgebraicNumber::hash() const {
    std::size_t h = std::hash<std::string>{}(field_->key());
    auto mix = [&h](const Integer& z) {
        std::size_t v = mpz_fdiv_ui(z.get_mpz_t(), 1000000007UL) + (sgn(z) < 0 ? 17 : 0);
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (const auto& n : num_) mix(n);
    mix(den_);
    return h;
}

Sign sign_of(const AlgebraicNumber& x) {
    if (x.is_zero()) return Sign::zero;
    if (x.is_rational()) return sgn(x.to_rational()) > 0 ? Sign::positive : Sign::negative;
    if (!x.field()->is_real() && x.conj() != x)
        throw NotRealEmbedding(x.display() + " is not real");
    for (unsigned bits = 64; bits <= (1u << 16); bits *= 2) {
        Box b = x.enclosure(bits);
        if (sgn(b.re.lo) > 0) return Sign::positive;
        if (sgn(b.re.hi) < 0) return Sign::negative;
    }
    throw MathError("sign refinement did not separate " + x.display() + " from zero");
}

int compare(const AlgebraicNumber& a, const AlgebraicNumber& b) { return static_cast<int>(sign_of(a - b)); }

AlgebraicNumber root_of_unity(int n, long k, const FieldPtr& f) {
    if (n <= 0) throw MathError("root of unity order must be positive");
    k %= n;
    if (k < 0) k += n;
    long g = std::gcd(static_cast<long>(n), k == 0 ? static_cast<long>(n) : k);
    long m = n / g, e = k / g;
    if (m == 1) return coerce(AlgebraicNumber(1), f);
    if (m == 2) return coerce(AlgebraicNumber(-1), f);
    if (f->kind() != FieldKind::cyclotomic) throw FieldMismatch("zeta" + std::to_string(m) + " is not in " + f->name());
    long c = f->conductor();
    if (c % m == 0) {
        long j = e * (c / m) % c;
        return AlgebraicNumber::from_poly(f, QPoly::monomial(Rational(1), static_cast<int>(j)));
    }
    if (m % 2 == 0 && (m / 2) % 2 == 1 && c % (m / 2) == 0) {
        long h = m / 2;
        AlgebraicNumber r = root_of_unity(static_cast<int>(h), e * ((h + 1) / 2), f);
        return e % 2 ? -r : r;
    }
    throw FieldMismatch("zeta" + std::to_string(m) + " is not in " + f->name());
}

AlgebraicNumber zeta(int n) { return root_of_unity(n, 1, cyclotomic(n)); }

std::optional<AlgebraicNumber> try_sqrt(long d, const FieldPtr& f) {
    if (d == 0) return coerce(AlgebraicNumber(0), f);
    long d0 = squarefree_part(d);
    Integer e = isqrt(Integer(d / d0));
    if (d0 == 1) return coerce(AlgebraicNumber(e), f);
    switch (f->kind()) {
        case FieldKind::rational:
            return std::nullopt;
        case FieldKind::imaginary_quadratic:
            if (f->radicand() != d0) return std::nullopt;
            return AlgebraicNumber(f, {Rational(0), Rational(e)});
        case FieldKind::multiquadratic: {
            if (d0 < 0) return std::nullopt;
            const auto& rads = f->display_radicands();
            for (std::size_t m = 0; m < rads.size(); ++m) {
                if (rads[m] != d0) continue;
                std::vector<Rational> disp(rads.size());
                disp[m] = Rational(e, f->display_scales()[m]);
                disp[m].canonicalize();
                return AlgebraicNumber(f, f->display_to_power() * disp);
            }
            return std::nullopt;
        }
        case FieldKind::cyclotomic: {
            long c = f->conductor();
            long mod4 = ((d0 % 4) + 4) % 4;
            long cond = mod4 == 1 ? std::labs(d0) : 4 * std::labs(d0);
            if (c % cond != 0) return std::nullopt;
            AlgebraicNumber r = coerce(AlgebraicNumber(1), f);
            long pstar = 1;
            for (long p : factor(d0)) {
                if (p == 2) continue;
                AlgebraicNumber gauss = coerce(AlgebraicNumber(0), f);
                for (long t = 1; t < p; ++t) {
                    AlgebraicNumber z = root_of_unity(static_cast<int>(p), t, f);
                    gauss = legendre(t, p) > 0 ? gauss + z : gauss - z;
                }
                r = r * gauss;
                pstar *= (p % 4 == 1) ? p : -p;
            }
            long u = d0 / pstar;
            if (u == -1) r = r * root_of_unity(4, 1, f);
            if (u == 2) r = r * (root_of_unity(8, 1, f) + root_of_unity(8, 7, f));
            if (u == -2) r = r * (root_of_unity(8, 1, f) + root_of_unity(8, 3, f));
            if (r * r != AlgebraicNumber(d0)) throw MathError("Gauss sum did not square to the radicand");
            if (d0 > 0) {
                if (sign_of(r) == Sign::negative) r = -r;
            } else {
                for (unsigned bits = 64;; bits *= 2) {
                    Interval im = r.enclosure(bits).im;
                    if (sgn(im.lo) > 0) break;
                    if (sgn(im.hi) < 0) {
                        r = -r;
                        break;
                    }
                }
            }
            return r * AlgebraicNumber(e);
        }
    }
    return std::nullopt;
}

AlgebraicNumber sqrt_in(long d, const FieldPtr& f) {
    auto r = try_sqrt(d, f);
    if (!r) throw FieldMismatch("sqrt(" + std::to_string(d) + ") is not in " + f->name());
    return *r;
}

AlgebraicNumber sqrt_of(long d) { return sqrt_in(d, quadratic(d == 0 ? 1 : d)); }

std::optional<AlgebraicNumber> named_constant(std::string_view name) {
    auto number_after = [&](std::size_t pos) -> std::optional<long> {
        if (pos >= name.size()) return std::nullopt;
        std::size_t i = pos;
        if (name[i] == '-') ++i;
        if (i == name.size()) return std::nullopt;
        for (std::size_t j = i; j < name.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(name[j]))) return std::nullopt;
        return std::stol(std::string(name.substr(pos)));
    };
    if (name == "omega") return zeta(3);
    if (name == "i") return zeta(4);
    if (name.substr(0, 4) == "zeta") {
        auto n = number_after(4);
        if (n && *n > 0) return zeta(static_cast<int>(*n));
    }
    if (name.substr(0, 4) == "sqrt") {
        auto n = number_after(4);
        if (n && *n != 0) return sqrt_of(*n);
    }
    return std::nullopt;
}

AlgebraicNumber parse_algebraic(std::string_view text) {
    std::string s(text);
    std::size_t over = s.find(" over ");
    if (over == std::string::npos || s.empty() || s[0] != '(') throw ParseError("expected '(c0, ...) over m(a)'");
    std::size_t close = s.rfind(')', over);
    if (close == std::string::npos) throw ParseError("missing ')'");
    std::vector<Rational> coords;
    std::string body = s.substr(1, close - 1);
    std::size_t start = 0;
    while (start <= body.size()) {
        std::size_t comma = body.find(',', start);
        std::string item = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        coords.push_back(parse_rational(item));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    QPoly m = parse_qpoly(s.substr(over + 6), 'a');
    FieldPtr f = field_from_minpoly(m);
    if (!f) throw ParseError("unknown field with minimal polynomial " + cubic7::to_string(m, "a"));
    if (coords.size() != static_cast<std::size_t>(f->degree())) throw ParseError("coordinate count does not match degree");
    return AlgebraicNumber(f, coords);
}

Rational field_norm(const AlgebraicNumber& x) {
    const FieldPtr& f = x.field();
    int d = f->degree();
    QMatrix mult(idx(d), idx(d));
    AlgebraicNumber basis = AlgebraicNumber(f, {Rational(1)});
    AlgebraicNumber gen = AlgebraicNumber::generator(f);
    for (int j = 0; j < d; ++j) {
        AlgebraicNumber col = x * basis;
        for (int i = 0; i < d; ++i) mult(idx(i), idx(j)) = col.coord(i);
        basis = basis * gen;
    }
    return determinant(mult);
}

NumberMatrix to_number_matrix(const QMatrix& m) {
    return m.map([](const Rational& q) { return AlgebraicNumber(q); });
}

NumberMatrix coerce(const NumberMatrix& m, const FieldPtr& to) {
    return m.map([&](const AlgebraicNumber& x) { return coerce(x, to); });
}

FieldPtr common_field(const NumberMatrix& m) {
    FieldPtr f = rationals();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_rational()) f = join_fields(f, m(i, j).field());
    return f;
}

}  // namespace cubic7
