#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace rht {

// Exact arithmetic everywhere: no floating point in the core.
using Rational = mpq_class;
using QVector = std::vector<Rational>;

// "p" or "p/q", canonicalized (lowest terms, positive denominator).
Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& r);

class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    QVector apply(const QVector& v) const; // M v
    QMatrix multiply(const QMatrix& other) const;

    bool operator==(const QMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// A subspace of Q^ambient stored as a reduced row echelon basis, so equality
// of subspaces is plain structural equality and representatives are canonical.
class Subspace {
public:
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
    static Subspace span(std::size_t ambient, const std::vector<QVector>& vectors);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<QVector>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const QVector& v) const;
    // Canonical representative of v + S: zero in every pivot coordinate.
    // reduce(reduce(v)) == reduce(v), and reduce(v) == 0 iff v is in S.
    QVector reduce(const QVector& v) const;
    Subspace sum(const Subspace& other) const;

    bool operator==(const Subspace&) const = default;

private:
    std::size_t ambient_ = 0;
    std::vector<QVector> basis_;
    std::vector<std::size_t> pivots_;
};

std::size_t rank(const QMatrix& m);
Subspace kernel_basis(const QMatrix& m);
Subspace column_space(const QMatrix& m);
// Any solution of M x = b with every free variable pinned to zero under the
// leftmost-pivot order, so the answer is deterministic. nullopt = no solution.
std::optional<QVector> solve_any(const QMatrix& m, const QVector& b);
Rational determinant(const QMatrix& m);
QMatrix inverse(const QMatrix& m); // Error("SingularMatrix") when not invertible

} // namespace rht
