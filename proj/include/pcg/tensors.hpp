#ifndef PCG_TENSORS_HPP
#define PCG_TENSORS_HPP

#include <string>
#include <utility>
#include <vector>

#include "pcg/chart.hpp"
#include "pcg/linalg.hpp"

namespace pcg {

/// Vector field with components in the coordinate frame d/dx_i.
class VectorField {
public:
    VectorField(ChartPtr chart, FnVector components)
        : chart_(std::move(chart)), components_(std::move(components)) {
        if (components_.size() != chart_->dim())
            fail(ErrorKind::ShapeMismatch, "vector field component count != chart dimension");
    }

    static VectorField zero(const ChartPtr& chart) {
        return VectorField(chart, FnVector(chart->dim(), RationalFn(chart->dim())));
    }

    static VectorField coordinate(const ChartPtr& chart, std::size_t i) {
        FnVector c(chart->dim(), RationalFn(chart->dim()));
        c.at(i) = RationalFn::constant(chart->dim(), Rational(1));
        return VectorField(chart, std::move(c));
    }

    const ChartPtr& chart() const { return chart_; }
    const FnVector& components() const { return components_; }
    const RationalFn& operator[](std::size_t i) const { return components_.at(i); }

    bool is_zero() const {
        for (const auto& c : components_)
            if (!c.is_zero()) return false;
        return true;
    }

    /// Directional derivative of a scalar: X(f) = sum_i X^i df/dx_i.
    RationalFn apply(const RationalFn& f) const {
        RationalFn r(chart_->dim());
        for (std::size_t i = 0; i < components_.size(); ++i) {
            if (components_[i].is_zero()) continue;
            r += components_[i] * f.derivative(i);
        }
        return r;
    }

    friend VectorField operator+(const VectorField& a, const VectorField& b) {
        require_same_chart(a.chart_, b.chart_);
        FnVector c = a.components_;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.components_[i];
        return VectorField(a.chart_, std::move(c));
    }

    friend VectorField operator-(const VectorField& a, const VectorField& b) {
        require_same_chart(a.chart_, b.chart_);
        FnVector c = a.components_;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.components_[i];
        return VectorField(a.chart_, std::move(c));
    }

    VectorField operator-() const {
        FnVector c = components_;
        for (auto& f : c) f = -f;
        return VectorField(chart_, std::move(c));
    }

    friend VectorField operator*(const RationalFn& f, const VectorField& x) {
        FnVector c = x.components_;
        for (auto& g : c) g *= f;
        return VectorField(x.chart_, std::move(c));
    }

    bool operator==(const VectorField& o) const { return components_ == o.components_; }
    bool operator!=(const VectorField& o) const { return !(*this == o); }

    std::string print() const {
        std::string out = "(";
        for (std::size_t i = 0; i < components_.size(); ++i) {
            if (i) out += ", ";
            out += components_[i].print(chart_->coord_names());
        }
        return out + ")";
    }

private:
    ChartPtr chart_;
    FnVector components_;
};

/// 1-form with components in dx_i.
class OneForm {
public:
    OneForm(ChartPtr chart, FnVector components)
        : chart_(std::move(chart)), components_(std::move(components)) {
        if (components_.size() != chart_->dim())
            fail(ErrorKind::ShapeMismatch, "one-form component count != chart dimension");
    }

    static OneForm zero(const ChartPtr& chart) {
        return OneForm(chart, FnVector(chart->dim(), RationalFn(chart->dim())));
    }

    const ChartPtr& chart() const { return chart_; }
    const FnVector& components() const { return components_; }
    const RationalFn& operator[](std::size_t i) const { return components_.at(i); }

    bool is_zero() const {
        for (const auto& c : components_)
            if (!c.is_zero()) return false;
        return true;
    }

    RationalFn operator()(const VectorField& x) const {
        require_same_chart(chart_, x.chart());
        RationalFn r(chart_->dim());
        for (std::size_t i = 0; i < components_.size(); ++i) {
            if (components_[i].is_zero() || x[i].is_zero()) continue;
            r += components_[i] * x[i];
        }
        return r;
    }

    friend OneForm operator+(const OneForm& a, const OneForm& b) {
        require_same_chart(a.chart_, b.chart_);
        FnVector c = a.components_;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.components_[i];
        return OneForm(a.chart_, std::move(c));
    }

    friend OneForm operator-(const OneForm& a, const OneForm& b) {
        require_same_chart(a.chart_, b.chart_);
        FnVector c = a.components_;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.components_[i];
        return OneForm(a.chart_, std::move(c));
    }

    friend OneForm operator*(const RationalFn& f, const OneForm& w) {
        FnVector c = w.components_;
        for (auto& g : c) g *= f;
        return OneForm(w.chart_, std::move(c));
    }

    bool operator==(const OneForm& o) const { return components_ == o.components_; }
    bool operator!=(const OneForm& o) const { return !(*this == o); }

private:
    ChartPtr chart_;
    FnVector components_;
};

/// Antisymmetric 2-form, stored as the full matrix w(i,j) = w(d/dx_i, d/dx_j).
class TwoForm {
public:
    TwoForm(ChartPtr chart, FnMatrix m) : chart_(std::move(chart)), m_(std::move(m)) {
        const std::size_t d = chart_->dim();
        if (m_.rows() != d || m_.cols() != d)
            fail(ErrorKind::ShapeMismatch, "two-form matrix has wrong shape");
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j <= i; ++j)
                if (m_(i, j) != -m_(j, i))
                    fail(ErrorKind::InternalInconsistency, "two-form matrix is not antisymmetric");
    }

    const ChartPtr& chart() const { return chart_; }
    const FnMatrix& matrix() const { return m_; }
    const RationalFn& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    RationalFn operator()(const VectorField& x, const VectorField& y) const {
        require_same_chart(chart_, x.chart());
        require_same_chart(chart_, y.chart());
        RationalFn r(chart_->dim());
        for (std::size_t i = 0; i < m_.rows(); ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < m_.cols(); ++j) {
                if (m_(i, j).is_zero() || y[j].is_zero()) continue;
                r += x[i] * m_(i, j) * y[j];
            }
        }
        return r;
    }

    /// Interior product i_X w as a one-form: (i_X w)_j = X^i w_ij.
    OneForm interior(const VectorField& x) const {
        require_same_chart(chart_, x.chart());
        FnVector c(chart_->dim(), RationalFn(chart_->dim()));
        for (std::size_t j = 0; j < m_.cols(); ++j)
            for (std::size_t i = 0; i < m_.rows(); ++i) {
                if (x[i].is_zero() || m_(i, j).is_zero()) continue;
                c[j] += x[i] * m_(i, j);
            }
        return OneForm(chart_, std::move(c));
    }

    bool is_zero() const { return m_.is_zero(); }
    bool operator==(const TwoForm& o) const { return m_ == o.m_; }

private:
    ChartPtr chart_;
    FnMatrix m_;
};

/// (1,1)-tensor; column j holds the components of the image of d/dx_j.
class Endomorphism {
public:
    Endomorphism(ChartPtr chart, FnMatrix m) : chart_(std::move(chart)), m_(std::move(m)) {
        const std::size_t d = chart_->dim();
        if (m_.rows() != d || m_.cols() != d)
            fail(ErrorKind::ShapeMismatch, "endomorphism matrix has wrong shape");
    }

    static Endomorphism identity(const ChartPtr& chart) {
        return Endomorphism(chart, FnMatrix::identity(chart->dim(), chart->dim()));
    }

    static Endomorphism zero(const ChartPtr& chart) {
        return Endomorphism(chart, FnMatrix(chart->dim(), chart->dim(), chart->dim()));
    }

    const ChartPtr& chart() const { return chart_; }
    const FnMatrix& matrix() const { return m_; }
    const RationalFn& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    VectorField apply(const VectorField& x) const {
        require_same_chart(chart_, x.chart());
        return VectorField(chart_, m_ * x.components());
    }

    friend Endomorphism operator+(const Endomorphism& a, const Endomorphism& b) {
        require_same_chart(a.chart_, b.chart_);
        return Endomorphism(a.chart_, a.m_ + b.m_);
    }

    friend Endomorphism operator-(const Endomorphism& a, const Endomorphism& b) {
        require_same_chart(a.chart_, b.chart_);
        return Endomorphism(a.chart_, a.m_ - b.m_);
    }

    friend Endomorphism operator*(const Endomorphism& a, const Endomorphism& b) {
        require_same_chart(a.chart_, b.chart_);
        return Endomorphism(a.chart_, a.m_ * b.m_);
    }

    friend Endomorphism operator*(const RationalFn& c, const Endomorphism& a) {
        return Endomorphism(a.chart_, a.m_.scaled(c));
    }

    RationalFn trace() const {
        RationalFn t(chart_->dim());
        for (std::size_t i = 0; i < m_.rows(); ++i) t += m_(i, i);
        return t;
    }

    bool is_zero() const { return m_.is_zero(); }
    bool operator==(const Endomorphism& o) const { return m_ == o.m_; }
    bool operator!=(const Endomorphism& o) const { return !(*this == o); }

private:
    ChartPtr chart_;
    FnMatrix m_;
};

/// Symmetric metric tensor; nonsingular over the function field.
class Metric {
public:
    Metric(ChartPtr chart, FnMatrix m) : chart_(std::move(chart)), m_(std::move(m)) {
        const std::size_t d = chart_->dim();
        if (m_.rows() != d || m_.cols() != d)
            fail(ErrorKind::ShapeMismatch, "metric matrix has wrong shape");
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (m_(i, j) != m_(j, i))
                    fail(ErrorKind::InternalInconsistency,
                         "metric matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        if (determinant(m_).is_zero())
            fail(ErrorKind::SingularMetric, "metric determinant is identically zero");
    }

    const ChartPtr& chart() const { return chart_; }
    const FnMatrix& matrix() const { return m_; }
    const RationalFn& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    RationalFn operator()(const VectorField& x, const VectorField& y) const {
        require_same_chart(chart_, x.chart());
        require_same_chart(chart_, y.chart());
        RationalFn r(chart_->dim());
        for (std::size_t i = 0; i < m_.rows(); ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < m_.cols(); ++j) {
                if (m_(i, j).is_zero() || y[j].is_zero()) continue;
                r += x[i] * m_(i, j) * y[j];
            }
        }
        return r;
    }

    bool operator==(const Metric& o) const { return m_ == o.m_; }
    bool operator!=(const Metric& o) const { return !(*this == o); }

private:
    ChartPtr chart_;
    FnMatrix m_;
};

// --------------------------------------------------------------------------
// Pointwise evaluation.  PoleAtPoint reports the offending component.

inline std::vector<Rational> evaluate_at_point(const VectorField& x, const Point& p) {
    std::vector<Rational> r;
    r.reserve(x.components().size());
    for (std::size_t i = 0; i < x.components().size(); ++i) {
        try {
            r.push_back(x[i].evaluate(p.values()));
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::PoleAtPoint)
                fail(ErrorKind::PoleAtPoint, "component " + std::to_string(i) + ": " + e.what());
            throw;
        }
    }
    return r;
}

inline std::vector<Rational> evaluate_at_point(const OneForm& w, const Point& p) {
    std::vector<Rational> r;
    r.reserve(w.components().size());
    for (std::size_t i = 0; i < w.components().size(); ++i) {
        try {
            r.push_back(w[i].evaluate(p.values()));
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::PoleAtPoint)
                fail(ErrorKind::PoleAtPoint, "component " + std::to_string(i) + ": " + e.what());
            throw;
        }
    }
    return r;
}

inline RatMatrix evaluate_at_point(const FnMatrix& m, const Point& p) {
    RatMatrix r(m.rows(), std::vector<Rational>(m.cols(), Rational(0)));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            try {
                r[i][j] = m(i, j).evaluate(p.values());
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::PoleAtPoint)
                    fail(ErrorKind::PoleAtPoint,
                         "component (" + std::to_string(i) + "," + std::to_string(j) + "): " + e.what());
                throw;
            }
        }
    return r;
}

inline RatMatrix evaluate_at_point(const Metric& g, const Point& p) { return evaluate_at_point(g.matrix(), p); }
inline RatMatrix evaluate_at_point(const Endomorphism& a, const Point& p) { return evaluate_at_point(a.matrix(), p); }
inline RatMatrix evaluate_at_point(const TwoForm& w, const Point& p) { return evaluate_at_point(w.matrix(), p); }

/// Signature (positives, negatives) of a metric at a rational point.
inline std::pair<int, int> signature_at_point(const Metric& g, const Point& p) {
    return rational_signature(evaluate_at_point(g, p));
}

} // namespace pcg

#endif
