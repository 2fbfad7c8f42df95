#include "rht/qlin.hpp"

#include "rht/errors.hpp"

#include <algorithm>
#include <utility>

namespace rht {

Rational rational_from_string(const std::string& s) {
    if (s.empty())
        throw ParseError("SyntaxError", "empty rational literal", 0);
    // mpq_class accepts whitespace and odd forms; be strict here.
    std::size_t i = 0;
    if (s[i] == '-' || s[i] == '+') ++i;
    bool digits = false;
    for (; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i) digits = true;
    if (!digits)
        throw ParseError("SyntaxError", "bad rational literal '" + s + "'", i);
    if (i < s.size()) {
        if (s[i] != '/')
            throw ParseError("SyntaxError", "bad rational literal '" + s + "'", i);
        ++i;
        bool den_digits = false;
        for (; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i) den_digits = true;
        if (!den_digits || i != s.size())
            throw ParseError("SyntaxError", "bad rational literal '" + s + "'", i);
    }
    Rational r(s);
    if (r.get_den() == 0)
        throw ParseError("SyntaxError", "zero denominator in '" + s + "'", 0);
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QVector QMatrix::apply(const QVector& v) const {
    QVector out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational acc(0);
        for (std::size_t j = 0; j < cols_; ++j)
            if (a_[i * cols_ + j] != 0 && v[j] != 0) acc += a_[i * cols_ + j] * v[j];
        out[i] = acc;
    }
    return out;
}

QMatrix QMatrix::multiply(const QMatrix& other) const {
    QMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& x = a_[i * cols_ + k];
            if (x == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const Rational& y = other(k, j);
                if (y != 0) out(i, j) += x * y;
            }
        }
    return out;
}

namespace {

// In-place reduced row echelon form, leftmost pivots, pivot entries 1,
// eliminated above and below. Returns the pivot column per row.
std::vector<std::size_t> rref(std::vector<QVector>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        Rational inv = rows[r][c];
        for (std::size_t j = c; j < cols; ++j) rows[r][j] /= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r); // drop zero rows
    return pivots;
}

std::vector<QVector> matrix_rows(const QMatrix& m) {
    std::vector<QVector> rows(m.rows(), QVector(m.cols(), Rational(0)));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    return rows;
}

} // namespace

Subspace Subspace::span(std::size_t ambient, const std::vector<QVector>& vectors) {
    for (const auto& v : vectors)
        if (v.size() != ambient)
            throw Error("BadDimension", "span vector has wrong length");
    std::vector<QVector> rows = vectors;
    auto pivots = rref(rows, ambient);
    Subspace s(ambient);
    s.basis_ = std::move(rows);
    s.pivots_ = std::move(pivots);
    return s;
}

bool Subspace::contains(const QVector& v) const {
    QVector r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

QVector Subspace::reduce(const QVector& v) const {
    if (v.size() != ambient_)
        throw Error("BadDimension", "reduce: vector has wrong length");
    QVector out = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Rational& f = out[pivots_[i]];
        if (f == 0) continue;
        Rational c = f; // out[pivot] changes during the loop
        for (std::size_t j = 0; j < ambient_; ++j)
            if (basis_[i][j] != 0) out[j] -= c * basis_[i][j];
    }
    return out;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (other.ambient_ != ambient_)
        throw Error("BadDimension", "sum: ambient dimensions differ");
    std::vector<QVector> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_, all);
}

std::size_t rank(const QMatrix& m) {
    auto rows = matrix_rows(m);
    return rref(rows, m.cols()).size();
}

Subspace kernel_basis(const QMatrix& m) {
    auto rows = matrix_rows(m);
    auto pivots = rref(rows, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<QVector> gens;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        QVector v(m.cols(), Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -rows[i][f];
        gens.push_back(std::move(v));
    }
    return Subspace::span(m.cols(), gens);
}

Subspace column_space(const QMatrix& m) {
    std::vector<QVector> cols(m.cols(), QVector(m.rows(), Rational(0)));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) cols[j][i] = m(i, j);
    return Subspace::span(m.rows(), cols);
}

std::optional<QVector> solve_any(const QMatrix& m, const QVector& b) {
    if (b.size() != m.rows())
        throw Error("BadDimension", "solve_any: rhs has wrong length");
    std::vector<QVector> rows(m.rows(), QVector(m.cols() + 1, Rational(0)));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
        rows[i][m.cols()] = b[i];
    }
    auto pivots = rref(rows, m.cols() + 1);
    QVector x(m.cols(), Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == m.cols()) return std::nullopt; // inconsistent
        x[pivots[i]] = rows[i][m.cols()];
    }
    return x;
}

Rational determinant(const QMatrix& m) {
    if (m.rows() != m.cols())
        throw Error("BadDimension", "determinant of a non-square matrix");
    std::size_t n = m.rows();
    auto rows = matrix_rows(m);
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && rows[sel][c] == 0) ++sel;
        if (sel == n) return Rational(0);
        if (sel != c) {
            std::swap(rows[sel], rows[c]);
            det = -det;
        }
        det *= rows[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (rows[i][c] == 0) continue;
            Rational f = rows[i][c] / rows[c][c];
            for (std::size_t j = c; j < n; ++j) rows[i][j] -= f * rows[c][j];
        }
    }
    return det;
}

QMatrix inverse(const QMatrix& m) {
    if (m.rows() != m.cols())
        throw Error("BadDimension", "inverse of a non-square matrix");
    std::size_t n = m.rows();
    std::vector<QVector> rows(n, QVector(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = m(i, j);
        rows[i][n + i] = 1;
    }
    auto pivots = rref(rows, 2 * n);
    if (pivots.size() != n || pivots.back() != n - 1)
        throw Error("SingularMatrix", "matrix is not invertible");
    QMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = rows[i][n + j];
    return out;
}

} // namespace rht
