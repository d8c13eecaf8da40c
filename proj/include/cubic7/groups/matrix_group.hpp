#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cubic7/exactnum/algebraic.hpp"

namespace cubic7 {

// Invertible square matrix taken up to a nonzero scalar.
class ProjectiveMatrix {
public:
    // Throws DimensionMismatch for non-square input and MathError when singular.
    explicit ProjectiveMatrix(NumberMatrix m);

    const NumberMatrix& matrix() const { return m_; }
    std::size_t dim() const { return m_.rows(); }

    // Representative whose first nonzero entry in row-major order is 1.
    NumberMatrix normalized() const;
    ProjectiveMatrix inverse() const;
    bool is_scalar() const;
    // Scalar c with this = c * other, if one exists.
    std::optional<AlgebraicNumber> ratio_to(const ProjectiveMatrix& other) const;

    friend ProjectiveMatrix operator*(const ProjectiveMatrix& a, const ProjectiveMatrix& b);
    friend bool operator==(const ProjectiveMatrix& a, const ProjectiveMatrix& b);
    friend bool operator!=(const ProjectiveMatrix& a, const ProjectiveMatrix& b) { return !(a == b); }

    ProjectiveMatrix pow(long e) const;
    std::string to_string() const;

private:
    friend class MatrixGroup;
    struct Unchecked {};
    ProjectiveMatrix(NumberMatrix m, Unchecked) : m_(std::move(m)) {}
    NumberMatrix m_;
};

// Group generated by projective matrices; finite groups carry their element list.
class MatrixGroup {
public:
    // Enumerates the closure, throwing ClosureFailure once it exceeds limit elements.
    static MatrixGroup generate(std::vector<ProjectiveMatrix> generators, std::size_t limit = 336);
    // Generators only; membership queries are unavailable.
    static MatrixGroup symbolic(std::vector<ProjectiveMatrix> generators);

    const std::vector<ProjectiveMatrix>& generators() const { return generators_; }
    bool enumerated() const { return enumerated_; }
    const std::vector<ProjectiveMatrix>& elements() const;
    std::size_t order() const;
    bool contains(const ProjectiveMatrix& g) const;
    // g h g^-1 lies in the group for every generator h.
    bool normalized_by(const ProjectiveMatrix& g) const;
    std::size_t dim() const;

private:
    std::string key(const NumberMatrix& normalized) const;

    std::vector<ProjectiveMatrix> generators_;
    std::vector<ProjectiveMatrix> elements_;
    std::unordered_map<std::string, std::size_t> index_;
    FieldPtr field_;
    bool enumerated_ = false;
};

}  // namespace cubic7
