#ifndef PCG_CALCULUS_HPP
#define PCG_CALCULUS_HPP

#include <utility>
#include <vector>

#include "pcg/tensors.hpp"

namespace pcg {

/// [X,Y]^k = X(Y^k) - Y(X^k).
inline VectorField lie_bracket(const VectorField& x, const VectorField& y) {
    require_same_chart(x.chart(), y.chart());
    const std::size_t d = x.chart()->dim();
    FnVector c(d, RationalFn(d));
    for (std::size_t k = 0; k < d; ++k) c[k] = x.apply(y[k]) - y.apply(x[k]);
    return VectorField(x.chart(), std::move(c));
}

/// Differential of a scalar as a one-form.
inline OneForm differential(const ChartPtr& chart, const RationalFn& f) {
    const std::size_t d = chart->dim();
    FnVector c(d, RationalFn(d));
    for (std::size_t i = 0; i < d; ++i) c[i] = f.derivative(i);
    return OneForm(chart, std::move(c));
}

/// Exterior derivative under the convention
///   2 dw(X, Y) = X(w(Y)) - Y(w(X)) - w([X, Y]),
/// so on coordinate fields dw(i, j) = (d_i w_j - d_j w_i) / 2.
inline TwoForm exterior_derivative(const OneForm& w) {
    const std::size_t d = w.chart()->dim();
    const RationalFn half = RationalFn::constant(d, Rational(1, 2));
    FnMatrix m(d, d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            RationalFn v = half * (w[j].derivative(i) - w[i].derivative(j));
            m(j, i) = -v;
            m(i, j) = std::move(v);
        }
    return TwoForm(w.chart(), std::move(m));
}

/// (L_Z w)(W) = Z(w(W)) - w([Z, W]); componentwise (L_Z w)_i = Z(w_i) + w_m d_i Z^m.
inline OneForm lie_derivative_form(const VectorField& z, const OneForm& w) {
    require_same_chart(z.chart(), w.chart());
    const std::size_t d = w.chart()->dim();
    FnVector c(d, RationalFn(d));
    for (std::size_t i = 0; i < d; ++i) {
        RationalFn v = z.apply(w[i]);
        for (std::size_t m = 0; m < d; ++m) {
            if (w[m].is_zero()) continue;
            v += w[m] * z[m].derivative(i);
        }
        c[i] = std::move(v);
    }
    return OneForm(w.chart(), std::move(c));
}

/// (L_Z A)(W) = [Z, AW] - A[Z, W];
/// componentwise (L_Z A)^k_j = Z(A^k_j) - A^m_j d_m Z^k + A^k_m d_j Z^m.
inline Endomorphism lie_derivative_endo(const VectorField& z, const Endomorphism& a) {
    require_same_chart(z.chart(), a.chart());
    const std::size_t d = a.chart()->dim();
    FnMatrix m(d, d, d);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t j = 0; j < d; ++j) {
            RationalFn v = z.apply(a(k, j));
            for (std::size_t t = 0; t < d; ++t) {
                if (!a(t, j).is_zero()) v -= a(t, j) * z[k].derivative(t);
                if (!a(k, t).is_zero()) v += a(k, t) * z[t].derivative(j);
            }
            m(k, j) = std::move(v);
        }
    return Endomorphism(a.chart(), std::move(m));
}

/// (L_Z g)_ij = Z(g_ij) + g_mj d_i Z^m + g_im d_j Z^m.
inline FnMatrix lie_derivative_metric(const VectorField& z, const Metric& g) {
    require_same_chart(z.chart(), g.chart());
    const std::size_t d = g.chart()->dim();
    FnMatrix m(d, d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            RationalFn v = z.apply(g(i, j));
            for (std::size_t t = 0; t < d; ++t) {
                if (!g(t, j).is_zero()) v += g(t, j) * z[t].derivative(i);
                if (!g(i, t).is_zero()) v += g(i, t) * z[t].derivative(j);
            }
            m(i, j) = std::move(v);
        }
    return m;
}

/// Coefficients of a vector-valued bilinear map: entry (i, j, k) is the k-th
/// component of the value on (d/dx_i, d/dx_j).
class Tensor3 {
public:
    Tensor3(ChartPtr chart)
        : chart_(std::move(chart)),
          dim_(chart_->dim()),
          data_(dim_ * dim_ * dim_, RationalFn(dim_)) {}

    const ChartPtr& chart() const { return chart_; }
    std::size_t dim() const { return dim_; }

    RationalFn& operator()(std::size_t i, std::size_t j, std::size_t k) {
        return data_[(i * dim_ + j) * dim_ + k];
    }
    const RationalFn& operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return data_[(i * dim_ + j) * dim_ + k];
    }

    /// Value on a pair of vector fields (tensorial contraction).
    VectorField value(const VectorField& x, const VectorField& y) const {
        FnVector c(dim_, RationalFn(dim_));
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y[j].is_zero()) continue;
                const RationalFn w = x[i] * y[j];
                for (std::size_t k = 0; k < dim_; ++k) {
                    if ((*this)(i, j, k).is_zero()) continue;
                    c[k] += w * (*this)(i, j, k);
                }
            }
        }
        return VectorField(chart_, std::move(c));
    }

    bool is_zero() const {
        for (const auto& f : data_)
            if (!f.is_zero()) return false;
        return true;
    }

    bool operator==(const Tensor3& o) const { return data_ == o.data_; }

private:
    ChartPtr chart_;
    std::size_t dim_;
    std::vector<RationalFn> data_;
};

/// Curvature-shaped coefficient array: entry (i, j, k, l) is the l-th
/// component of R(d/dx_i, d/dx_j) d/dx_k.
class Tensor4 {
public:
    Tensor4(ChartPtr chart)
        : chart_(std::move(chart)),
          dim_(chart_->dim()),
          data_(dim_ * dim_ * dim_ * dim_, RationalFn(dim_)) {}

    const ChartPtr& chart() const { return chart_; }
    std::size_t dim() const { return dim_; }

    RationalFn& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        return data_[((i * dim_ + j) * dim_ + k) * dim_ + l];
    }
    const RationalFn& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return data_[((i * dim_ + j) * dim_ + k) * dim_ + l];
    }

    /// R(X, Y)Z contracted with three vector fields.
    VectorField value(const VectorField& x, const VectorField& y, const VectorField& z) const {
        FnVector c(dim_, RationalFn(dim_));
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y[j].is_zero()) continue;
                const RationalFn xy = x[i] * y[j];
                for (std::size_t k = 0; k < dim_; ++k) {
                    if (z[k].is_zero()) continue;
                    const RationalFn w = xy * z[k];
                    for (std::size_t l = 0; l < dim_; ++l) {
                        if ((*this)(i, j, k, l).is_zero()) continue;
                        c[l] += w * (*this)(i, j, k, l);
                    }
                }
            }
        }
        return VectorField(chart_, std::move(c));
    }

    bool is_zero() const {
        for (const auto& f : data_)
            if (!f.is_zero()) return false;
        return true;
    }

private:
    ChartPtr chart_;
    std::size_t dim_;
    std::vector<RationalFn> data_;
};

} // namespace pcg

#endif
