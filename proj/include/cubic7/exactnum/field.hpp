#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cubic7/exactnum/interval.hpp"
#include "cubic7/exactnum/matrix.hpp"
#include "cubic7/exactnum/upoly.hpp"

namespace cubic7 {

enum class FieldKind { rational, cyclotomic, imaginary_quadratic, multiquadratic };

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Q[a]/(m) with a designated complex embedding of a. Instances are interned
// by the catalog functions below and compared by pointer.
class NumberField {
public:
    NumberField(FieldKind kind, int conductor, long radicand, std::vector<long> radicands);

    FieldKind kind() const { return kind_; }
    const std::string& key() const { return key_; }
    const std::string& name() const { return name_; }
    int degree() const { return degree_; }
    const QPoly& minimal_polynomial() const { return minpoly_; }
    bool is_real() const { return kind_ == FieldKind::rational || kind_ == FieldKind::multiquadratic; }

    int conductor() const { return conductor_; }
    long radicand() const { return radicand_; }
    const std::vector<long>& radicands() const { return radicands_; }

    // x^(d+j) mod m as integer coordinates, j = 0..d-2.
    const std::vector<std::vector<Integer>>& reduction_table() const { return reduction_; }

    // Enclosure of the generator under the designated embedding, width <= 2^-bits.
    Box generator_enclosure(unsigned bits) const;
    // Interval isolating the real number that pins the embedding.
    const Interval& embedding_seed() const { return seed_; }

    // Multiquadratic display basis: element m is the product of sqrt(r_i), i in m,
    // which equals display_scale(m) * sqrt(display_radicand(m)).
    const QMatrix& power_to_display() const { return to_display_; }
    const QMatrix& display_to_power() const { return from_display_; }
    const std::vector<long>& display_radicands() const { return display_radicand_; }
    const std::vector<Integer>& display_scales() const { return display_scale_; }

private:
    void init_reduction();
    void init_cyclotomic();
    void init_multiquadratic();

    FieldKind kind_;
    std::string key_, name_;
    int degree_ = 1;
    QPoly minpoly_;
    std::vector<std::vector<Integer>> reduction_;
    int conductor_ = 1;
    long radicand_ = 0;
    std::vector<long> radicands_;

    QPoly cos_poly_;  // minimal polynomial of 2cos(2pi/n)
    Interval seed_;
    Interval tight_;  // refined seed kept from construction

    QMatrix to_display_, from_display_;
    std::vector<long> display_radicand_;
    std::vector<Integer> display_scale_;
};

FieldPtr rationals();
// Q(zeta_n); n = 2 mod 4 is normalized to n/2.
FieldPtr cyclotomic(int n);
// Q(sqrt d): real d gives a one-generator multiquadratic field, d = -1, -3 give
// the cyclotomic fields of conductor 4, 3.
FieldPtr quadratic(long d);
// Q(sqrt r_1, ..., sqrt r_k) for positive radicands, keyed by a canonical basis.
FieldPtr multiquadratic(const std::vector<long>& radicands);

bool embeds(const FieldPtr& from, const FieldPtr& to);
FieldPtr compose_fields(const FieldPtr& a, const FieldPtr& b);
// Catalog field whose minimal polynomial is m; nullptr if unknown.
FieldPtr field_from_minpoly(const QPoly& m);

// Cyclotomic polynomial Phi_n.
QPoly cyclotomic_polynomial(int n);
int euler_phi(int n);

}  // namespace cubic7
