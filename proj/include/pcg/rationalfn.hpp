#ifndef PCG_RATIONALFN_HPP
#define PCG_RATIONALFN_HPP

#include <span>
#include <string>
#include <utility>

#include "pcg/errors.hpp"
#include "pcg/multipoly.hpp"

namespace pcg {

/// Exact rational function num/den over Q.  Normal form: the pair carries no
/// common integer content and den's graded-lex leading coefficient is
/// positive.  No multivariate gcd is attempted; equality is decided by
/// cross-multiplication.
class RationalFn {
public:
    explicit RationalFn(std::size_t nvars = 0)
        : num_(MultiPoly::zero(nvars)), den_(MultiPoly::constant(nvars, Rational(1))) {}

    RationalFn(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (num_.nvars() != den_.nvars())
            fail(ErrorKind::InternalInconsistency, "rational function arity mismatch");
        if (den_.is_zero()) fail(ErrorKind::ZeroDenominator, "denominator is the zero polynomial");
        normalize();
    }

    static RationalFn zero(std::size_t nvars) { return RationalFn(nvars); }

    static RationalFn constant(std::size_t nvars, const Rational& c) {
        RationalFn f(nvars);
        f.num_ = MultiPoly::constant(nvars, c);
        f.normalize();
        return f;
    }

    static RationalFn variable(std::size_t nvars, std::size_t index) {
        RationalFn f(nvars);
        f.num_ = MultiPoly::variable(nvars, index);
        return f;
    }

    static RationalFn from_poly(MultiPoly p) {
        RationalFn f(p.nvars());
        f.num_ = std::move(p);
        f.normalize();
        return f;
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    std::size_t nvars() const { return num_.nvars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    Rational constant_value() const {
        if (!is_constant()) fail(ErrorKind::InternalInconsistency, "constant_value on non-constant function");
        if (num_.is_zero()) return Rational(0);
        return num_.constant_value() / den_.constant_value();
    }

    RationalFn operator-() const {
        RationalFn r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
        return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend RationalFn operator-(const RationalFn& a, const RationalFn& b) {
        return RationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }

    friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
        return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend RationalFn operator/(const RationalFn& a, const RationalFn& b) {
        if (b.is_zero()) fail(ErrorKind::ZeroDenominator, "division by identically zero function");
        return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
    }

    RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
    RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
    RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
    RationalFn& operator/=(const RationalFn& o) { return *this = *this / o; }

    /// Equality by cross-multiplication: num1*den2 - num2*den1 = 0.
    bool operator==(const RationalFn& o) const {
        if (num_.is_zero()) return o.num_.is_zero();
        if (o.num_.is_zero()) return false;
        return num_ * o.den_ == o.num_ * den_;
    }
    bool operator!=(const RationalFn& o) const { return !(*this == o); }

    bool equals_rational(const Rational& c) const { return *this == constant(nvars(), c); }

    /// Exact partial derivative by the quotient rule.
    RationalFn derivative(std::size_t var) const {
        if (den_.is_constant())
            return RationalFn(num_.derivative(var), den_);
        return RationalFn(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
    }

    Rational evaluate(std::span<const Rational> values) const {
        const Rational d = den_.evaluate(values);
        if (d == 0)
            fail(ErrorKind::PoleAtPoint, "denominator " + den_print_for_error() + " vanishes at the point");
        return num_.evaluate(values) / d;
    }

    bool has_pole_at(std::span<const Rational> values) const { return den_.evaluate(values) == 0; }

    /// Canonical expression text; re-parses to an equal function.
    std::string print(std::span<const std::string> names) const {
        if (den_.is_constant() && den_.constant_value() == 1) return num_.print(names);
        std::string n = num_.print(names);
        if (num_.term_count() > 1) n = "(" + n + ")";
        std::string d = den_.print(names);
        if (needs_parens_as_divisor(den_)) d = "(" + d + ")";
        return n + "/" + d;
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = MultiPoly::constant(den_.nvars(), Rational(1));
            return;
        }
        const Rational cn = num_.content();
        const Rational cd = den_.content();
        // joint content of the pair: gcd of integer parts over lcm of denominators
        const Integer g = boost::multiprecision::gcd(rational_num(cn), rational_num(cd));
        const Integer l = boost::multiprecision::lcm(rational_den(cn), rational_den(cd));
        Rational c(g, l);
        if (den_.leading_coefficient() < 0) c = -c;
        const Rational inv = Rational(1) / c;
        num_ *= inv;
        den_ *= inv;
    }

    static bool needs_parens_as_divisor(const MultiPoly& p) {
        if (p.term_count() != 1) return true;
        const auto& [e, c] = *p.terms().begin();
        if (c < 0) return true;
        std::size_t vars_used = 0;
        for (auto x : e)
            if (x != 0) ++vars_used;
        if (vars_used == 0) return rational_den(c) != 1; // plain positive integer is fine
        return !(vars_used == 1 && c == 1); // single variable power with coefficient 1
    }

    std::string den_print_for_error() const {
        std::vector<std::string> names;
        names.reserve(nvars());
        for (std::size_t i = 0; i < nvars(); ++i) names.push_back("x" + std::to_string(i));
        return den_.print(names);
    }

    MultiPoly num_;
    MultiPoly den_;
};

inline RationalFn partial_derivative(const RationalFn& f, std::size_t coord) { return f.derivative(coord); }

} // namespace pcg

#endif
