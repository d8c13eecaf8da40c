#include "cubic7/groups/matrix_group.hpp"

#include <deque>
#include <sstream>

namespace cubic7 {

namespace {

std::pair<NumberMatrix, NumberMatrix> lifted(const NumberMatrix& a, const NumberMatrix& b) {
    FieldPtr fa = common_field(a), fb = common_field(b);
    if (embeds(fa, fb) || embeds(fb, fa)) return {a, b};
    FieldPtr f = compose_fields(fa, fb);
    return {coerce(a, f), coerce(b, f)};
}

}  // namespace

ProjectiveMatrix::ProjectiveMatrix(NumberMatrix m) : m_(std::move(m)) {
    if (!m_.square() || m_.rows() == 0) throw DimensionMismatch("projective matrix must be square");
    if (determinant(m_).is_zero()) throw MathError("projective matrix is singular");
}

NumberMatrix ProjectiveMatrix::normalized() const {
    for (std::size_t i = 0; i < m_.rows(); ++i)
        for (std::size_t j = 0; j < m_.cols(); ++j)
            if (!m_(i, j).is_zero()) {
                if (m_(i, j).is_one()) return m_;
                return m_(i, j).inverse() * m_;
            }
    return m_;
}

ProjectiveMatrix ProjectiveMatrix::inverse() const {
    auto inv = cubic7::inverse(m_);
    return ProjectiveMatrix(std::move(*inv), Unchecked{});
}

bool ProjectiveMatrix::is_scalar() const {
    return *this == ProjectiveMatrix(NumberMatrix::identity(dim()), Unchecked{});
}

std::optional<AlgebraicNumber> ProjectiveMatrix::ratio_to(const ProjectiveMatrix& other) const {
    if (dim() != other.dim()) return std::nullopt;
    auto [a, b] = lifted(m_, other.m_);
    std::optional<AlgebraicNumber> c;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) {
            const auto& x = a(i, j);
            const auto& y = b(i, j);
            if (x.is_zero() != y.is_zero()) return std::nullopt;
            if (x.is_zero()) continue;
            if (!c) {
                c = x / y;
            } else if (x != *c * y) {
                return std::nullopt;
            }
        }
    return c;
}

ProjectiveMatrix operator*(const ProjectiveMatrix& a, const ProjectiveMatrix& b) {
    auto [x, y] = lifted(a.m_, b.m_);
    return ProjectiveMatrix(x * y, ProjectiveMatrix::Unchecked{});
}

bool operator==(const ProjectiveMatrix& a, const ProjectiveMatrix& b) {
    return a.ratio_to(b).has_value();
}

ProjectiveMatrix ProjectiveMatrix::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    ProjectiveMatrix result(NumberMatrix::identity(dim()), Unchecked{});
    ProjectiveMatrix base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

std::string ProjectiveMatrix::to_string() const {
    std::ostringstream out;
    NumberMatrix n = normalized();
    out << "[";
    for (std::size_t i = 0; i < n.rows(); ++i) {
        out << (i ? "; " : "");
        for (std::size_t j = 0; j < n.cols(); ++j) out << (j ? ", " : "") << n(i, j).display();
    }
    out << "]";
    return out.str();
}

MatrixGroup MatrixGroup::symbolic(std::vector<ProjectiveMatrix> generators) {
    if (generators.empty()) throw DimensionMismatch("group needs at least one generator");
    MatrixGroup g;
    g.generators_ = std::move(generators);
    return g;
}

MatrixGroup MatrixGroup::generate(std::vector<ProjectiveMatrix> generators, std::size_t limit) {
    MatrixGroup g = symbolic(std::move(generators));
    std::size_t n = g.generators_[0].dim();
    FieldPtr field = rationals();
    for (const auto& h : g.generators_) {
        if (h.dim() != n) throw DimensionMismatch("generators of different sizes");
        field = compose_fields(field, common_field(h.matrix()));
    }
    g.field_ = field;

    std::vector<NumberMatrix> gens;
    for (const auto& h : g.generators_) gens.push_back(h.normalized());
    std::deque<std::size_t> queue;
    auto insert = [&](NumberMatrix m) {
        ProjectiveMatrix p(std::move(m), ProjectiveMatrix::Unchecked{});
        NumberMatrix norm = p.normalized();
        std::string k = g.key(norm);
        if (g.index_.count(k)) return;
        if (g.elements_.size() >= limit)
            throw ClosureFailure("closure exceeds " + std::to_string(limit) + " elements");
        g.index_.emplace(std::move(k), g.elements_.size());
        g.elements_.push_back(ProjectiveMatrix(std::move(norm), ProjectiveMatrix::Unchecked{}));
        queue.push_back(g.elements_.size() - 1);
    };
    insert(NumberMatrix::identity(n));
    while (!queue.empty()) {
        std::size_t i = queue.front();
        queue.pop_front();
        for (const auto& h : gens) insert(g.elements_[i].matrix() * h);
    }
    g.enumerated_ = true;
    return g;
}

std::string MatrixGroup::key(const NumberMatrix& normalized) const {
    std::string k;
    for (std::size_t i = 0; i < normalized.rows(); ++i)
        for (std::size_t j = 0; j < normalized.cols(); ++j) {
            const auto& x = normalized(i, j);
            if (x.is_zero()) {
                k += "0;";
                continue;
            }
            for (const auto& c : coerce(x, field_).coords()) k += c.get_str() + ",";
            k += ";";
        }
    return k;
}

const std::vector<ProjectiveMatrix>& MatrixGroup::elements() const {
    if (!enumerated_) throw MathError("group elements were not enumerated");
    return elements_;
}

std::size_t MatrixGroup::order() const { return elements().size(); }

std::size_t MatrixGroup::dim() const { return generators_.front().dim(); }

bool MatrixGroup::contains(const ProjectiveMatrix& g) const {
    if (!enumerated_) throw MathError("group elements were not enumerated");
    if (g.dim() != dim()) return false;
    if (!embeds(common_field(g.matrix()), field_)) {
        for (const auto& e : elements_)
            if (e == g) return true;
        return false;
    }
    return index_.count(key(g.normalized())) > 0;
}

bool MatrixGroup::normalized_by(const ProjectiveMatrix& g) const {
    ProjectiveMatrix inv = g.inverse();
    for (const auto& h : generators_)
        if (!contains(g * h * inv)) return false;
    return true;
}

}  // namespace cubic7
