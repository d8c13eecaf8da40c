#include "cubic7/gitstab/stability.hpp"

#include <numeric>

namespace cubic7 {

namespace {

using Row = std::vector<Rational>;

// Columns span the torus directions: zero-sum vectors for C7, (1,-1,1,-1,1,-1) for F21.
std::vector<std::array<long, 6>> torus_basis(GitFamily family) {
    if (family == GitFamily::F21) return {{1, -1, 1, -1, 1, -1}};
    std::vector<std::array<long, 6>> basis;
    for (std::size_t i = 0; i < 5; ++i) {
        std::array<long, 6> v{};
        v[i] = 1;
        v[5] = -1;
        basis.push_back(v);
    }
    return basis;
}

// Weight rows over the basis coordinates, one per slot.
std::vector<Row> slot_rows(GitFamily family) {
    auto basis = torus_basis(family);
    std::vector<Row> rows;
    std::vector<int> reps = family == GitFamily::C7 ? std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7} : std::vector<int>{0, 1, 6, 7};
    for (int slot : reps) {
        Row row;
        for (const auto& v : basis) {
            OnePS r{v};
            row.push_back(Rational(hm_weights(r)[static_cast<std::size_t>(slot)]));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Rational dot(const Row& a, const std::vector<Rational>& y, std::size_t upto) {
    Rational s = 0;
    for (std::size_t i = 0; i < upto; ++i) s += a[i] * y[i];
    return s;
}

OnePS to_one_ps(GitFamily family, const std::vector<Rational>& y) {
    auto basis = torus_basis(family);
    Integer den = 1;
    for (const auto& v : y) den = lcm(den, Integer(v.get_den()));
    std::array<Integer, 6> r{};
    for (std::size_t k = 0; k < basis.size(); ++k) {
        Integer c = Integer(y[k] * den);
        for (std::size_t i = 0; i < 6; ++i) r[i] += c * basis[k][i];
    }
    Integer g = 0;
    for (const auto& v : r) g = gcd(g, v);
    OnePS out;
    for (std::size_t i = 0; i < 6; ++i) out.r[i] = (g == 0 ? r[i] : Integer(r[i] / g)).get_si();
    return out;
}

Rational pick_between(const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
    if (!lo && !hi) return 0;
    if (lo && !hi) return *lo <= 0 ? Rational(0) : Rational(ceil_of(*lo));
    if (!lo && hi) return *hi >= 0 ? Rational(0) : Rational(floor_of(*hi));
    if (*lo <= 0 && *hi >= 0) return 0;
    Rational c = *lo > 0 ? Rational(ceil_of(*lo)) : Rational(floor_of(*hi));
    if (c >= *lo && c <= *hi) return c;
    return *lo;
}

}  // namespace

bool OnePS::valid() const {
    long sum = 0;
    bool nonzero = false;
    for (long v : r) {
        sum += v;
        nonzero = nonzero || v != 0;
    }
    return nonzero && sum == 0;
}

std::string OnePS::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < 6; ++i) s += (i ? "," : "") + std::to_string(r[i]);
    return s + ")";
}

std::array<long, 8> hm_weights(const OnePS& p) {
    const auto& r = p.r;
    std::array<long, 8> w{};
    for (std::size_t i = 0; i < 6; ++i) w[i] = 2 * r[i] + r[(i + 1) % 6];
    w[6] = r[0] + r[2] + r[4];
    w[7] = r[1] + r[3] + r[5];
    return w;
}

std::size_t slot_count(GitFamily family) { return family == GitFamily::C7 ? 8 : 4; }

std::string SupportPattern::to_string() const {
    std::string s = "{";
    bool first = true;
    char letter = family == GitFamily::C7 ? 'a' : 'c';
    for (std::size_t i = 0; i < slot_count(family); ++i)
        if (has(static_cast<int>(i))) {
            s += (first ? "" : ",") + std::string(1, letter) + std::to_string(i + 1);
            first = false;
        }
    return s + "}";
}

std::string to_string(Stability s) {
    switch (s) {
        case Stability::unstable: return "unstable";
        case Stability::semistable_not_stable: return "semistable_not_stable";
        case Stability::stable: return "stable";
    }
    return "unknown";
}

std::optional<std::vector<Rational>> fm_feasible(const std::vector<Row>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("constraint rows and bounds differ in count");
    std::size_t n = a.empty() ? 0 : a[0].size();
    // stages[k] holds constraints in the first n - k variables.
    std::vector<std::vector<std::pair<Row, Rational>>> stages(n + 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != n) throw DimensionMismatch("ragged constraint rows");
        stages[0].emplace_back(a[i], b[i]);
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t v = n - 1 - k;
        std::vector<std::pair<Row, Rational>> pos, neg, next;
        for (const auto& c : stages[k]) {
            int s = sgn(c.first[v]);
            if (s > 0) pos.push_back(c);
            else if (s < 0) neg.push_back(c);
            else next.push_back(c);
        }
        for (const auto& p : pos)
            for (const auto& q : neg) {
                Rational mp = -q.first[v], mq = p.first[v];
                Row row(n);
                for (std::size_t j = 0; j < n; ++j) row[j] = mp * p.first[j] + mq * q.first[j];
                next.emplace_back(std::move(row), mp * p.second + mq * q.second);
            }
        stages[k + 1] = std::move(next);
    }
    for (const auto& c : stages[n])
        if (c.second > 0) return std::nullopt;
    std::vector<Rational> y(n, Rational(0));
    for (std::size_t v = 0; v < n; ++v) {
        const auto& cons = stages[n - 1 - v];
        std::optional<Rational> lo, hi;
        for (const auto& [row, rhs] : cons) {
            if (row[v] == 0) continue;
            Rational bound = (rhs - dot(row, y, v)) / row[v];
            if (row[v] > 0) {
                if (!lo || bound > *lo) lo = bound;
            } else if (!hi || bound < *hi) {
                hi = bound;
            }
        }
        y[v] = pick_between(lo, hi);
    }
    return y;
}

bool certificate_holds(const SupportPattern& s, const OnePS& r, bool strict) {
    if (!r.valid()) return false;
    if (s.family == GitFamily::F21) {
        for (std::size_t i = 0; i < 6; ++i)
            if (r.r[i] != (i % 2 == 0 ? r.r[0] : -r.r[0])) return false;
    }
    auto w = hm_weights(r);
    std::vector<int> reps = s.family == GitFamily::C7 ? std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7} : std::vector<int>{0, 1, 6, 7};
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (!s.has(static_cast<int>(i))) continue;
        long wi = w[static_cast<std::size_t>(reps[i])];
        if (strict ? wi <= 0 : wi < 0) return false;
    }
    return true;
}

std::optional<OnePS> destabilizer_exists(const SupportPattern& s, bool strict) {
    auto rows = slot_rows(s.family);
    std::vector<Row> a;
    std::vector<Rational> b;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (s.has(static_cast<int>(i))) {
            a.push_back(rows[i]);
            b.push_back(strict ? 1 : 0);
        }
    std::size_t n = rows[0].size();
    std::optional<OnePS> found;
    if (strict && !a.empty()) {
        if (auto y = fm_feasible(a, b)) found = to_one_ps(s.family, *y);
    } else {
        // A nonzero cone point exists iff some coordinate can be pushed to +-1.
        for (std::size_t j = 0; j < n && !found; ++j)
            for (int sign : {1, -1}) {
                auto a2 = a;
                auto b2 = b;
                Row e(n, Rational(0));
                e[j] = sign;
                a2.push_back(e);
                b2.push_back(1);
                if (auto y = fm_feasible(a2, b2)) {
                    found = to_one_ps(s.family, *y);
                    break;
                }
            }
    }
    if (found && !certificate_holds(s, *found, strict)) throw MathError("certificate failed re-verification");
    return found;
}

Stability oracle_classification(const SupportPattern& s) {
    if (destabilizer_exists(s, true)) return Stability::unstable;
    if (destabilizer_exists(s, false)) return Stability::semistable_not_stable;
    return Stability::stable;
}

Stability closed_form_c7(const SupportPattern& s) {
    auto all = [&](std::initializer_list<int> slots) {
        for (int i : slots)
            if (!s.has(i - 1)) return false;
        return true;
    };
    if (all({1, 2, 3, 4, 5, 6})) return Stability::stable;
    if (all({7, 8}) || all({2, 4, 6, 7}) || all({1, 3, 5, 8})) return Stability::semistable_not_stable;
    return Stability::unstable;
}

Stability closed_form_f21(const SupportPattern& s) {
    auto both = [&](int i, int j) { return s.has(i - 1) && s.has(j - 1); };
    if (both(1, 2) || both(1, 4) || both(2, 3) || both(3, 4)) return Stability::stable;
    return Stability::unstable;
}

std::vector<SweepEntry> git_sweep(GitFamily family) {
    std::vector<SweepEntry> out;
    unsigned patterns = 1u << slot_count(family);
    for (unsigned m = 0; m < patterns; ++m) {
        SupportPattern s{family, m};
        SweepEntry e{s, oracle_classification(s),
                     family == GitFamily::C7 ? closed_form_c7(s) : closed_form_f21(s), destabilizer_exists(s, true),
                     destabilizer_exists(s, false)};
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace cubic7
