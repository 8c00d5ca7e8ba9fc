#ifndef PCG_MULTIPOLY_HPP
#define PCG_MULTIPOLY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "pcg/errors.hpp"
#include "pcg/rational.hpp"

namespace pcg {

using Exponents = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const Exponents& e) {
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    return d;
}

/// Graded lexicographic order: total degree first, then lexicographic on the
/// exponent vector.  Canonical everywhere (printing, pivoting, leading terms).
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        const auto da = total_degree(a);
        const auto db = total_degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

/// Multivariate polynomial over Q.  Terms map exponent vectors to nonzero
/// rational coefficients; the zero polynomial has no terms.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational, GradedLexLess>;

    explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static MultiPoly zero(std::size_t nvars) { return MultiPoly(nvars); }

    static MultiPoly constant(std::size_t nvars, Rational c) {
        MultiPoly p(nvars);
        if (c != 0) p.terms_.emplace(Exponents(nvars, 0), std::move(c));
        return p;
    }

    static MultiPoly variable(std::size_t nvars, std::size_t index) {
        if (index >= nvars) fail(ErrorKind::InternalInconsistency, "variable index out of range");
        MultiPoly p(nvars);
        Exponents e(nvars, 0);
        e[index] = 1;
        p.terms_.emplace(std::move(e), Rational(1));
        return p;
    }

    static MultiPoly monomial(Exponents exps, Rational coeff) {
        MultiPoly p(exps.size());
        if (coeff != 0) p.terms_.emplace(std::move(exps), std::move(coeff));
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) fail(ErrorKind::InternalInconsistency, "constant_value on non-constant polynomial");
        return terms_.begin()->second;
    }

    std::uint64_t degree() const {
        if (terms_.empty()) return 0;
        return total_degree(terms_.rbegin()->first);
    }

    /// Coefficient of the graded-lex greatest term (0 for the zero polynomial).
    Rational leading_coefficient() const {
        if (terms_.empty()) return Rational(0);
        return terms_.rbegin()->second;
    }

    MultiPoly operator-() const {
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    MultiPoly& operator-=(const MultiPoly& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_vars(b);
        MultiPoly r(a.nvars_);
        Exponents e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }

    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

    MultiPoly pow(unsigned e) const {
        MultiPoly r = constant(nvars_, Rational(1));
        MultiPoly b = *this;
        while (e > 0) {
            if (e & 1u) r *= b;
            if (e > 1) b *= b;
            e >>= 1u;
        }
        return r;
    }

    MultiPoly derivative(std::size_t var) const {
        if (var >= nvars_) fail(ErrorKind::InternalInconsistency, "derivative index out of range");
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponents d = e;
            d[var] -= 1;
            r.add_term(d, c * Rational(e[var]));
        }
        return r;
    }

    Rational evaluate(std::span<const Rational> values) const {
        if (values.size() != nvars_)
            fail(ErrorKind::InternalInconsistency, "evaluation point has wrong dimension");
        Rational acc(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < nvars_; ++i)
                if (e[i] != 0) t *= pow_rational(values[i], e[i]);
            acc += t;
        }
        return acc;
    }

    bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    /// Positive rational c such that (*this)/c has coprime integer
    /// coefficients.  Returns 1 for the zero polynomial.
    Rational content() const {
        if (terms_.empty()) return Rational(1);
        Integer g = 0;
        Integer l = 1;
        for (const auto& [e, c] : terms_) {
            g = boost::multiprecision::gcd(g, boost::multiprecision::abs(rational_num(c)));
            l = boost::multiprecision::lcm(l, rational_den(c));
        }
        return Rational(g, l);
    }

    /// Canonical text form: terms in descending graded-lex order, '*' between
    /// factors, '^' for powers.  Output re-parses to the same polynomial.
    std::string print(std::span<const std::string> names) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Rational& c = it->second;
            const bool neg = c < 0;
            if (first) {
                if (neg) out += "-";
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            const Rational a = abs_rational(c);
            std::string mono = print_monomial(it->first, names);
            if (mono.empty()) {
                out += to_string(a);
            } else if (a == 1) {
                out += mono;
            } else {
                out += to_string(a) + "*" + mono;
            }
        }
        return out;
    }

    std::size_t term_count() const { return terms_.size(); }

private:
    void check_vars(const MultiPoly& o) const {
        if (nvars_ != o.nvars_)
            fail(ErrorKind::InternalInconsistency, "polynomial arity mismatch");
    }

    void add_term(const Exponents& e, Rational c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    static std::string print_monomial(const Exponents& e, std::span<const std::string> names) {
        std::string out;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!out.empty()) out += "*";
            out += names[i];
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
        }
        return out;
    }

    std::size_t nvars_;
    TermMap terms_;
};

} // namespace pcg

#endif
