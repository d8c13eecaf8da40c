#include "cubic7/polyalg/poly.hpp"

#include <cctype>

namespace cubic7 {

Monomial::Monomial(std::initializer_list<int> e) {
    if (e.size() > static_cast<std::size_t>(kMaxVariables)) throw DimensionMismatch("too many exponents");
    std::size_t i = 0;
    for (int v : e) exps[i++] = static_cast<std::uint8_t>(v);
}

Monomial Monomial::variable(int i) {
    Monomial m;
    m.exps[static_cast<std::size_t>(i)] = 1;
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (auto e : exps) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m;
    for (std::size_t i = 0; i < exps.size(); ++i) m.exps[i] = static_cast<std::uint8_t>(exps[i] + o.exps[i]);
    return m;
}

std::string Monomial::to_string(int nvars) const {
    std::string out;
    for (int i = 0; i < nvars; ++i) {
        int e = (*this)[i];
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(i + 1);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.exps > b.exps;
}

std::vector<Monomial> monomials_of_degree(int degree, int nvars) {
    std::vector<Monomial> out;
    Monomial cur;
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == nvars - 1) {
            cur.exps[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(left);
            out.push_back(cur);
            cur.exps[static_cast<std::size_t>(var)] = 0;
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur.exps[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(e);
            self(self, var + 1, left - e);
        }
        cur.exps[static_cast<std::size_t>(var)] = 0;
    };
    if (nvars > 0) rec(rec, 0, degree);
    return out;
}

Poly Poly::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw DimensionMismatch("variable index out of range");
    return term(nvars, Monomial::variable(i), AlgebraicNumber(1));
}

Poly Poly::constant(int nvars, const AlgebraicNumber& c) { return term(nvars, Monomial(), c); }

Poly Poly::term(int nvars, const Monomial& m, const AlgebraicNumber& c) {
    Poly p(nvars);
    p.add_term(m, c);
    return p;
}

AlgebraicNumber Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? AlgebraicNumber(0) : it->second;
}

void Poly::add_term(const Monomial& m, const AlgebraicNumber& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (inserted) return;
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool Poly::is_homogeneous(int degree) const {
    for (const auto& [m, c] : terms_)
        if (m.degree() != degree) return false;
    return true;
}

Poly Poly::derivative(int i) const {
    Poly d(nvars_);
    for (const auto& [m, c] : terms_) {
        int e = m[i];
        if (e == 0) continue;
        Monomial n = m;
        n.exps[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e - 1);
        d.add_term(n, c * AlgebraicNumber(e));
    }
    return d;
}

AlgebraicNumber Poly::eval(const std::vector<AlgebraicNumber>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw DimensionMismatch("point length differs from variable count");
    std::vector<std::vector<AlgebraicNumber>> powers(point.size());
    AlgebraicNumber total(0);
    for (const auto& [m, c] : terms_) {
        AlgebraicNumber t = c;
        for (int i = 0; i < nvars_; ++i) {
            int e = m[i];
            if (e == 0) continue;
            auto& pw = powers[static_cast<std::size_t>(i)];
            if (pw.empty()) pw.push_back(AlgebraicNumber(1));
            while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * point[static_cast<std::size_t>(i)]);
            t = t * pw[static_cast<std::size_t>(e)];
        }
        total = total + t;
    }
    return total;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    if (static_cast<int>(images.size()) != nvars_) throw DimensionMismatch("substitution length differs from variable count");
    int out_vars = images.empty() ? nvars_ : images[0].nvars();
    std::vector<std::vector<Poly>> powers(images.size());
    Poly out(out_vars);
    for (const auto& [m, c] : terms_) {
        Poly t = Poly::constant(out_vars, c);
        for (int i = 0; i < nvars_; ++i) {
            int e = m[i];
            if (e == 0) continue;
            auto& pw = powers[static_cast<std::size_t>(i)];
            if (pw.empty()) pw.push_back(Poly::constant(out_vars, AlgebraicNumber(1)));
            while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[static_cast<std::size_t>(i)]);
            t = t * pw[static_cast<std::size_t>(e)];
        }
        for (const auto& [tm, tc] : t.terms_) out.add_term(tm, tc);
    }
    return out;
}

Poly Poly::pow(int e) const {
    Poly r = Poly::constant(nvars_, AlgebraicNumber(1));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

FieldPtr Poly::coefficient_field() const {
    FieldPtr f = rationals();
    for (const auto& [m, c] : terms_)
        if (!c.is_rational()) f = compose_fields(f, c.field());
    return f;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        bool constant = m.degree() == 0;
        std::string mono = m.to_string(nvars_);
        if (c.is_rational()) {
            Rational q = c.to_rational();
            bool neg = sgn(q) < 0;
            Rational a = abs(q);
            out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
            if (constant)
                out += cubic7::to_string(a);
            else if (a == 1)
                out += mono;
            else
                out += cubic7::to_string(a) + "*" + mono;
        } else {
            out += out.empty() ? "" : " + ";
            out += "(" + c.display() + ")";
            if (!constant) out += "*" + mono;
        }
    }
    return out;
}

Poly operator+(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw DimensionMismatch("variable counts differ");
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

Poly operator-(const Poly& a) {
    Poly r(a.nvars_);
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw DimensionMismatch("variable counts differ");
    Poly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Poly operator*(const AlgebraicNumber& s, const Poly& a) {
    Poly r(a.nvars_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, s * c);
    return r;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
        if (!(ia->first == ib->first) || ia->second != ib->second) return false;
    return true;
}

std::optional<AlgebraicNumber> proportionality(const Poly& a, const Poly& b) {
    if (b.is_zero()) return a.is_zero() ? std::optional<AlgebraicNumber>(AlgebraicNumber(0)) : std::nullopt;
    const auto& [m, cb] = *b.terms().begin();
    AlgebraicNumber ca = a.coeff(m);
    FieldPtr f = compose_fields(a.coefficient_field(), b.coefficient_field());
    AlgebraicNumber s = coerce(ca, f) / coerce(cb, f);
    Poly lifted(b.nvars());
    for (const auto& [mm, c] : b.terms()) lifted.add_term(mm, coerce(s, f) * coerce(c, f));
    if (lifted != a) return std::nullopt;
    return s;
}

namespace {

class Parser {
public:
    Parser(std::string_view text, int nvars) : s_(text), nvars_(nvars) {}

    Poly parse() {
        Poly p = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    // Coefficient arithmetic that adjoins whatever the operands need.
    static AlgebraicNumber mixed(const AlgebraicNumber& x, const AlgebraicNumber& y, char op) {
        AlgebraicNumber a = x, b = y;
        if (!a.is_rational() && !b.is_rational() && a.field() != b.field() && !embeds(a.field(), b.field()) &&
            !embeds(b.field(), a.field())) {
            FieldPtr f = compose_fields(a.field(), b.field());
            a = coerce(a, f);
            b = coerce(b, f);
        }
        return op == '+' ? a + b : op == '-' ? a - b : a * b;
    }
    Poly add(const Poly& x, const Poly& y, char op) const {
        Poly r(nvars_);
        for (const auto& [m, c] : x.terms()) r.add_term(m, c);
        for (const auto& [m, c] : y.terms()) {
            AlgebraicNumber cur = r.coeff(m);
            AlgebraicNumber next = mixed(cur, c, op);
            r.add_term(m, next - cur);
        }
        return r;
    }
    Poly mul(const Poly& x, const Poly& y) const {
        Poly r(nvars_);
        for (const auto& [mx, cx] : x.terms())
            for (const auto& [my, cy] : y.terms()) {
                Monomial m = mx * my;
                AlgebraicNumber cur = r.coeff(m);
                AlgebraicNumber next = mixed(cur, mixed(cx, cy, '*'), '+');
                r.add_term(m, next - cur);
            }
        return r;
    }

    Poly expr() {
        Poly acc(nvars_);
        bool first = true;
        for (;;) {
            int sign = 1;
            if (peek('+') || peek('-')) {
                sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                break;
            }
            acc = add(acc, term(), sign > 0 ? '+' : '-');
            first = false;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                acc = mul(acc, factor());
            } else if (peek('/')) {
                ++pos_;
                Poly d = factor();
                if (d.total_degree() != 0) fail("division by a non-constant");
                acc = mul(acc, Poly::constant(nvars_, d.coeff(Monomial()).inverse()));
            } else {
                break;
            }
        }
        return acc;
    }

    Poly factor() {
        Poly base = atom();
        if (peek('^')) {
            ++pos_;
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
            Poly r = Poly::constant(nvars_, AlgebraicNumber(1));
            for (int i = 0; i < e; ++i) r = mul(r, base);
            base = r;
        }
        return base;
    }

    Poly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Poly::constant(nvars_, AlgebraicNumber(Integer(std::string(s_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (name == "sqrt" && pos_ < s_.size() && s_[pos_] == '-') {
                name += '-';
                ++pos_;
            }
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) name += s_[pos_++];
            if (name.size() > 1 && name[0] == 'x' && std::isdigit(static_cast<unsigned char>(name[1]))) {
                int i = std::stoi(name.substr(1));
                if (i < 1 || i > nvars_) fail("variable " + name + " out of range");
                return Poly::variable(nvars_, i - 1);
            }
            auto k = named_constant(name);
            if (!k) fail("unknown name '" + name + "'");
            return Poly::constant(nvars_, *k);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    int nvars_;
};

}  // namespace

Poly parse_poly(std::string_view text, int nvars) { return Parser(text, nvars).parse(); }

}  // namespace cubic7
