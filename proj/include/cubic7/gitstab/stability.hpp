#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cubic7/exactnum/matrix.hpp"

namespace cubic7 {

// Exponents of diag(t^r1, ..., t^r6); nonzero with zero sum.
struct OnePS {
    std::array<long, 6> r{};
    bool valid() const;
    std::string to_string() const;
};

// Weights of the eight C7 monomials x_i^2 x_{i+1} (i = 1..6), x1x3x5, x2x4x6.
std::array<long, 8> hm_weights(const OnePS& r);

enum class GitFamily { C7, F21 };
std::size_t slot_count(GitFamily family);

// Bitmask over the active slots (8 for C7, 4 for F21).
struct SupportPattern {
    GitFamily family = GitFamily::C7;
    unsigned active = 0;
    bool has(int slot) const { return active & (1u << slot); }
    std::string to_string() const;
};

enum class Stability { unstable, semistable_not_stable, stable };
std::string to_string(Stability s);

// Some y with a_i . y >= b_i for every row, by Fourier-Motzkin elimination.
std::optional<std::vector<Rational>> fm_feasible(const std::vector<std::vector<Rational>>& a,
                                                 const std::vector<Rational>& b);

// strict: weights > 0 on every active slot; otherwise r != 0 with weights >= 0.
// F21 patterns are tested on the subtorus diag(t^n, t^-n, ...).
std::optional<OnePS> destabilizer_exists(const SupportPattern& s, bool strict);
bool certificate_holds(const SupportPattern& s, const OnePS& r, bool strict);

Stability oracle_classification(const SupportPattern& s);
Stability closed_form_c7(const SupportPattern& s);
Stability closed_form_f21(const SupportPattern& s);

struct SweepEntry {
    SupportPattern pattern;
    Stability oracle;
    Stability closed_form;
    std::optional<OnePS> unstable_witness;
    std::optional<OnePS> nonstable_witness;
};
std::vector<SweepEntry> git_sweep(GitFamily family);

}  // namespace cubic7
