#include "cubic7/exactnum/upoly.hpp"

#include <cctype>

namespace cubic7 {

std::string to_string(const QPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(i);
        if (sgn(c) == 0) continue;
        bool neg = sgn(c) < 0;
        Rational a = abs(c);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        bool unit = a == 1;
        if (i == 0 || !unit) out += to_string(a);
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

QPoly parse_qpoly(std::string_view text, char var) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty polynomial");
    std::vector<Rational> coeffs;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::string term = s.substr(i, j - i);
        if (term.empty()) throw ParseError("bad polynomial '" + s + "'");
        Rational c = 1;
        int k = 0;
        std::size_t vp = term.find(var);
        if (vp == std::string::npos) {
            c = parse_rational(term);
        } else {
            std::string head = term.substr(0, vp);
            if (!head.empty()) {
                if (head.back() != '*') throw ParseError("bad term '" + term + "'");
                c = parse_rational(head.substr(0, head.size() - 1));
            }
            std::string tail = term.substr(vp + 1);
            if (tail.empty())
                k = 1;
            else if (tail[0] == '^')
                k = std::stoi(tail.substr(1));
            else
                throw ParseError("bad term '" + term + "'");
        }
        if (coeffs.size() <= static_cast<std::size_t>(k)) coeffs.resize(static_cast<std::size_t>(k) + 1);
        coeffs[static_cast<std::size_t>(k)] += sign * c;
        i = j;
    }
    return QPoly(coeffs);
}

QPoly squarefree(const QPoly& p) {
    if (p.degree() <= 0) return p;
    QPoly g = gcd(p, p.derivative());
    return monic(divmod(p, g).first);
}

std::vector<QPoly> sturm_chain(const QPoly& p) {
    std::vector<QPoly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        QPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

namespace {

int variations(const std::vector<QPoly>& chain, const Rational& x) {
    int count = 0, last = 0;
    for (const auto& q : chain) {
        int s = sgn(q.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

}  // namespace

int count_roots(const std::vector<QPoly>& chain, const Rational& lo, const Rational& hi) {
    return variations(chain, lo) - variations(chain, hi);
}

}  // namespace cubic7
