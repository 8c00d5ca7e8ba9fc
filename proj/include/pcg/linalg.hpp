#ifndef PCG_LINALG_HPP
#define PCG_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "pcg/errors.hpp"
#include "pcg/rationalfn.hpp"

namespace pcg {

using FnVector = std::vector<RationalFn>;

/// Dense matrix of rational functions.
class FnMatrix {
public:
    FnMatrix() : rows_(0), cols_(0), nvars_(0) {}

    FnMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
        : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, RationalFn(nvars)) {}

    static FnMatrix identity(std::size_t n, std::size_t nvars) {
        FnMatrix m(n, n, nvars);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = RationalFn::constant(nvars, Rational(1));
        return m;
    }

    static FnMatrix from_columns(const std::vector<FnVector>& cols, std::size_t nvars) {
        if (cols.empty()) return FnMatrix(0, 0, nvars);
        FnMatrix m(cols[0].size(), cols.size(), nvars);
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != m.rows_) fail(ErrorKind::ShapeMismatch, "ragged column list");
            for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nvars() const { return nvars_; }

    RationalFn& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const RationalFn& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    FnVector column(std::size_t j) const {
        FnVector c(rows_, RationalFn(nvars_));
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    FnVector row(std::size_t i) const {
        FnVector r(cols_, RationalFn(nvars_));
        for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }

    FnMatrix transpose() const {
        FnMatrix t(cols_, rows_, nvars_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        for (const auto& f : data_)
            if (!f.is_zero()) return false;
        return true;
    }

    bool operator==(const FnMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t i = 0; i < data_.size(); ++i)
            if (data_[i] != o.data_[i]) return false;
        return true;
    }
    bool operator!=(const FnMatrix& o) const { return !(*this == o); }

    friend FnMatrix operator+(const FnMatrix& a, const FnMatrix& b) {
        a.check_same_shape(b);
        FnMatrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
        return r;
    }

    friend FnMatrix operator-(const FnMatrix& a, const FnMatrix& b) {
        a.check_same_shape(b);
        FnMatrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
        return r;
    }

    friend FnMatrix operator*(const FnMatrix& a, const FnMatrix& b) {
        if (a.cols_ != b.rows_) fail(ErrorKind::ShapeMismatch, "matrix product shape mismatch");
        FnMatrix r(a.rows_, b.cols_, a.nvars_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (b(k, j).is_zero()) continue;
                    r(i, j) += a(i, k) * b(k, j);
                }
            }
        return r;
    }

    friend FnVector operator*(const FnMatrix& a, const FnVector& v) {
        if (a.cols_ != v.size()) fail(ErrorKind::ShapeMismatch, "matrix-vector shape mismatch");
        FnVector r(a.rows_, RationalFn(a.nvars_));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) {
                if (a(i, j).is_zero() || v[j].is_zero()) continue;
                r[i] += a(i, j) * v[j];
            }
        return r;
    }

    FnMatrix scaled(const RationalFn& c) const {
        FnMatrix r = *this;
        for (auto& f : r.data_) f *= c;
        return r;
    }

private:
    void check_same_shape(const FnMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorKind::ShapeMismatch, "matrix shape mismatch");
    }

    std::size_t rows_, cols_, nvars_;
    std::vector<RationalFn> data_;
};

namespace detail {

/// Row echelon form with first-nonzero pivoting, applied in place to an
/// augmented block [A | B].  Returns the pivot column of each eliminated row.
inline std::vector<std::size_t> echelonize(FnMatrix& m, std::size_t lhs_cols) {
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < lhs_cols && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(pivot, j));
        for (std::size_t i = row + 1; i < m.rows(); ++i) {
            if (m(i, col).is_zero()) continue;
            const RationalFn factor = m(i, col) / m(row, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

} // namespace detail

/// Fraction-free Bareiss determinant (first-nonzero pivoting, exact division).
inline RationalFn determinant(const FnMatrix& m) {
    if (m.rows() != m.cols()) fail(ErrorKind::ShapeMismatch, "determinant of non-square matrix");
    const std::size_t n = m.rows();
    const std::size_t nv = m.nvars();
    if (n == 0) return RationalFn::constant(nv, Rational(1));
    FnMatrix a = m;
    RationalFn prev = RationalFn::constant(nv, Rational(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a(pivot, k).is_zero()) ++pivot;
        if (pivot == n) return RationalFn::zero(nv);
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
            a(i, k) = RationalFn::zero(nv);
        }
        prev = a(k, k);
    }
    RationalFn det = a(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

/// Gaussian solve of A x = b over the function field.  Throws SingularSystem
/// when the system is inconsistent or a square system is rank-deficient;
/// free variables of a consistent underdetermined system are set to zero.
inline FnVector linear_solve(const FnMatrix& a, const FnVector& b) {
    if (a.rows() != b.size()) fail(ErrorKind::ShapeMismatch, "rhs length mismatch");
    const std::size_t nv = a.nvars();
    FnMatrix aug(a.rows(), a.cols() + 1, nv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const auto pivots = detail::echelonize(aug, a.cols());
    for (std::size_t i = pivots.size(); i < a.rows(); ++i)
        if (!aug(i, a.cols()).is_zero())
            fail(ErrorKind::SingularSystem, "inconsistent linear system");
    if (a.rows() == a.cols() && pivots.size() < a.cols())
        fail(ErrorKind::SingularSystem, "rank-deficient square system");
    FnVector x(a.cols(), RationalFn(nv));
    for (std::size_t r = pivots.size(); r-- > 0;) {
        const std::size_t col = pivots[r];
        RationalFn acc = aug(r, a.cols());
        for (std::size_t j = col + 1; j < a.cols(); ++j) {
            if (aug(r, j).is_zero() || x[j].is_zero()) continue;
            acc -= aug(r, j) * x[j];
        }
        x[col] = acc / aug(r, col);
    }
    return x;
}

/// Multi-RHS solve; requires an invertible square LHS.
inline FnMatrix solve_matrix(const FnMatrix& a, const FnMatrix& b) {
    if (a.rows() != a.cols() || a.rows() != b.rows())
        fail(ErrorKind::ShapeMismatch, "solve_matrix shape mismatch");
    const std::size_t n = a.rows();
    const std::size_t nv = a.nvars();
    FnMatrix aug(n, n + b.cols(), nv);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug(i, n + j) = b(i, j);
    }
    const auto pivots = detail::echelonize(aug, n);
    if (pivots.size() < n) fail(ErrorKind::SingularSystem, "singular matrix");
    FnMatrix x(n, b.cols(), nv);
    for (std::size_t r = n; r-- > 0;) {
        const std::size_t col = pivots[r];
        for (std::size_t k = 0; k < b.cols(); ++k) {
            RationalFn acc = aug(r, n + k);
            for (std::size_t j = col + 1; j < n; ++j) {
                if (aug(r, j).is_zero() || x(j, k).is_zero()) continue;
                acc -= aug(r, j) * x(j, k);
            }
            x(col, k) = acc / aug(r, col);
        }
    }
    return x;
}

inline FnMatrix inverse(const FnMatrix& a) {
    return solve_matrix(a, FnMatrix::identity(a.rows(), a.nvars()));
}

inline std::size_t rank(const FnMatrix& a) {
    FnMatrix m = a;
    return detail::echelonize(m, m.cols()).size();
}

namespace detail {

/// Scales a vector of rational functions to polynomial components with joint
/// integer content 1 and a positive leading sign on the first nonzero entry.
/// (No multivariate gcd: the multiplier is the plain product of denominators.)
inline void clear_denominators(FnVector& v) {
    if (v.empty()) return;
    const std::size_t nv = v[0].nvars();
    std::vector<MultiPoly> cleared(v.size(), MultiPoly::zero(nv));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        MultiPoly p = v[i].num();
        for (std::size_t j = 0; j < v.size(); ++j)
            if (j != i && !v[j].is_zero()) p *= v[j].den();
        cleared[i] = std::move(p);
    }
    Rational g(0);
    Integer lcm_den = 1;
    bool any = false;
    for (const auto& p : cleared) {
        if (p.is_zero()) continue;
        any = true;
        const Rational c = p.content();
        g = Rational(boost::multiprecision::gcd(rational_num(g), rational_num(c)),
                     Integer(1));
        lcm_den = boost::multiprecision::lcm(lcm_den, rational_den(c));
    }
    if (!any) return;
    const Rational content(rational_num(g), lcm_den);
    const Rational inv = Rational(1) / content;
    bool sign_fixed = false;
    bool flip = false;
    for (auto& p : cleared) {
        if (p.is_zero()) continue;
        if (!sign_fixed) {
            flip = p.leading_coefficient() * inv < 0;
            sign_fixed = true;
        }
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        cleared[i] *= flip ? -inv : inv;
        v[i] = RationalFn::from_poly(std::move(cleared[i]));
    }
}

} // namespace detail

/// Kernel basis over the function field, echelon-ordered by free column.
/// Basis vectors are scaled to polynomial components of content one.
inline std::vector<FnVector> null_space(const FnMatrix& a) {
    const std::size_t nv = a.nvars();
    FnMatrix m = a;
    const auto pivots = detail::echelonize(m, m.cols());
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<FnVector> basis;
    for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        FnVector v(a.cols(), RationalFn(nv));
        v[free_col] = RationalFn::constant(nv, Rational(1));
        for (std::size_t r = pivots.size(); r-- > 0;) {
            const std::size_t col = pivots[r];
            if (col > free_col) continue;
            RationalFn acc = RationalFn::zero(nv);
            for (std::size_t j = col + 1; j < a.cols(); ++j) {
                if (m(r, j).is_zero() || v[j].is_zero()) continue;
                acc -= m(r, j) * v[j];
            }
            v[col] = acc / m(r, col);
        }
        detail::clear_denominators(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Coefficients expressing v in the span of the given columns, if it lies
/// there (generic membership over the function field).
inline std::optional<FnVector> coefficients_in_span(const FnMatrix& columns, const FnVector& v) {
    try {
        FnVector c = linear_solve(columns, v);
        return c;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::SingularSystem) return std::nullopt;
        throw;
    }
}

/// Residual of v against the column span: v - F*c where c solves the pivot
/// rows of F.  Zero exactly when v lies in the span.
inline FnVector span_residual(const FnMatrix& columns, const FnVector& v) {
    const std::size_t nv = columns.nvars();
    // Locate a set of rows on which the columns are invertible.
    std::vector<std::size_t> pivot_rows;
    {
        FnMatrix e = columns;
        std::vector<std::size_t> rows_order(columns.rows());
        for (std::size_t i = 0; i < columns.rows(); ++i) rows_order[i] = i;
        std::size_t row = 0;
        for (std::size_t col = 0; col < columns.cols() && row < e.rows(); ++col) {
            std::size_t pivot = row;
            while (pivot < e.rows() && e(pivot, col).is_zero()) ++pivot;
            if (pivot == e.rows()) continue;
            if (pivot != row) {
                for (std::size_t j = 0; j < e.cols(); ++j) std::swap(e(row, j), e(pivot, j));
                std::swap(rows_order[row], rows_order[pivot]);
            }
            for (std::size_t i = row + 1; i < e.rows(); ++i) {
                if (e(i, col).is_zero()) continue;
                const RationalFn factor = e(i, col) / e(row, col);
                for (std::size_t j = col; j < e.cols(); ++j) e(i, j) -= factor * e(row, j);
            }
            pivot_rows.push_back(rows_order[row]);
            ++row;
        }
    }
    if (pivot_rows.size() < columns.cols())
        fail(ErrorKind::RankDeficient, "span_residual: columns are not independent");
    FnMatrix sub(columns.cols(), columns.cols(), nv);
    FnVector rhs(columns.cols(), RationalFn(nv));
    for (std::size_t i = 0; i < columns.cols(); ++i) {
        for (std::size_t j = 0; j < columns.cols(); ++j) sub(i, j) = columns(pivot_rows[i], j);
        rhs[i] = v[pivot_rows[i]];
    }
    const FnVector c = linear_solve(sub, rhs);
    FnVector residual = v;
    for (std::size_t i = 0; i < columns.rows(); ++i)
        for (std::size_t j = 0; j < columns.cols(); ++j) residual[i] -= columns(i, j) * c[j];
    return residual;
}

inline bool in_span(const FnMatrix& columns, const FnVector& v) {
    for (const auto& r : span_residual(columns, v))
        if (!r.is_zero()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Exact numeric (pointwise) linear algebra over Q.

using RatMatrix = std::vector<std::vector<Rational>>;

/// Signature of a symmetric rational matrix by exact symmetric pivoting.
/// Zero diagonal pivots are repaired by a congruence (add row/col), which
/// preserves the signature; failure of every repair means the matrix is
/// singular, so the caller should probe another point.
inline std::pair<int, int> rational_signature(RatMatrix a) {
    const std::size_t n = a.size();
    int pos = 0, neg = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t d = k + 1;
            while (d < n && a[d][d] == 0) ++d;
            if (d < n) {
                std::swap(a[k], a[d]);
                for (std::size_t i = 0; i < n; ++i) std::swap(a[i][k], a[i][d]);
            } else {
                bool fixed = false;
                for (std::size_t i = k; i < n && !fixed; ++i)
                    for (std::size_t j = i + 1; j < n && !fixed; ++j)
                        if (a[i][j] != 0) {
                            for (std::size_t t = 0; t < n; ++t) a[i][t] += a[j][t];
                            for (std::size_t t = 0; t < n; ++t) a[t][i] += a[t][j];
                            if (i != k) {
                                std::swap(a[k], a[i]);
                                for (std::size_t t = 0; t < n; ++t) std::swap(a[t][k], a[t][i]);
                            }
                            fixed = true;
                        }
                if (!fixed)
                    fail(ErrorKind::SingularAtPoint,
                         "matrix is singular at the sample point; retry with another point");
            }
        }
        const Rational pivot = a[k][k];
        if (pivot > 0)
            ++pos;
        else
            ++neg;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            const Rational factor = a[i][k] / pivot;
            for (std::size_t j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
        }
        for (std::size_t j = k + 1; j < n; ++j) a[k][j] = 0;
        for (std::size_t i = k + 1; i < n; ++i) a[i][k] = 0;
    }
    return {pos, neg};
}

/// Exact numeric solve used by pointwise oracles.
inline std::vector<Rational> rational_solve(RatMatrix a, std::vector<Rational> b) {
    const std::size_t n = a.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k] == 0) ++pivot;
        if (pivot == n) fail(ErrorKind::SingularSystem, "singular numeric system");
        std::swap(a[k], a[pivot]);
        std::swap(b[k], b[pivot]);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            const Rational factor = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
            b[i] -= factor * b[k];
        }
    }
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= a[i][j] * x[j];
        x[i] = acc / a[i][i];
    }
    return x;
}

} // namespace pcg

#endif
