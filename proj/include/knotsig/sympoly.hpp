#pragma once

// Exact symmetric Laurent polynomials f(t) = f(1/t), stored in the basis
// x = z^2 = t - 2 + 1/t, plus real-root isolation on the open interval
// (-4, 0), which is the upper unit semicircle t = exp(2 pi i s), 0 < s < 1/2.

#include "knotsig/bigfloat.hpp"

#include <gmpxx.h>

#include <compare>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace knotsig {

class SymPoly {
public:
    SymPoly() = default;
    explicit SymPoly(std::vector<mpq_class> coeffs);
    SymPoly(std::initializer_list<long> coeffs);

    /// From palindromic Laurent coefficients of t^-g .. t^g (odd length).
    static SymPoly from_laurent(std::span<const mpz_class> palindrome);
    /// Laurent coefficients of t^-d .. t^d where d = degree().
    std::vector<mpq_class> to_laurent() const;

    /// Accepts "1 + 5*x + 2*x^2", "1 + 5 z^2 + 2 z^4" or "[1,5,2]".
    static SymPoly parse(std::string_view text);
    std::string str() const;
    /// Compact ascending coefficient list, e.g. "[1,5,2]".
    std::string list_str() const;

    const std::vector<mpq_class>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    mpq_class coeff(std::size_t k) const;
    const mpq_class& leading() const { return coeffs_.back(); }
    bool is_integral() const;

    mpq_class operator()(const mpq_class& x) const;
    BigFloat operator()(const BigFloat& x) const;

    SymPoly derivative() const;
    SymPoly monic() const;
    /// p(q(x)).
    SymPoly compose(const SymPoly& inner) const;

    SymPoly operator-() const;
    SymPoly& operator+=(const SymPoly& rhs);
    SymPoly& operator-=(const SymPoly& rhs);
    SymPoly& operator*=(const SymPoly& rhs);
    SymPoly& operator*=(const mpq_class& c);

    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend SymPoly operator*(SymPoly a, const SymPoly& b) { return a *= b; }
    friend SymPoly operator*(SymPoly a, const mpq_class& c) { return a *= c; }
    friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void normalize();
    std::vector<mpq_class> coeffs_;
};

/// Quotient and remainder; throws on division by zero.
std::pair<SymPoly, SymPoly> divmod(const SymPoly& num, const SymPoly& den);
/// Monic gcd; gcd(0, 0) = 0.
SymPoly gcd(const SymPoly& a, const SymPoly& b);
/// Yun decomposition p = c * f1 * f2^2 * ... * fk^k with monic squarefree
/// pairwise coprime f_i; entry i-1 holds f_i (possibly the constant 1).
std::vector<SymPoly> squarefree_factors(const SymPoly& p);
/// Product of the distinct irreducible factors of p, monic.
SymPoly squarefree_part(const SymPoly& p);

/// x(s) = 2 cos(2 pi s) - 2.
BigFloat x_of_turn(const BigFloat& s);
/// s(x) = arccos(1 + x/2) / (2 pi), valid for x in [-4, 0].
BigFloat turn_of_x(const BigFloat& x);

/// f(exp(2 pi i s)) = p(2 cos(2 pi s) - 2).
BigFloat eval_turn(const SymPoly& p, const BigFloat& s);
BigFloat eval_turn(const SymPoly& p, double s, Precision prec = {});

/// Sturm chain of a squarefree polynomial.
class SturmSequence {
public:
    explicit SturmSequence(const SymPoly& squarefree);
    int variations(const mpq_class& at) const;
    /// Distinct roots in (lo, hi]; lo and hi should not be roots.
    int count(const mpq_class& lo, const mpq_class& hi) const;

private:
    std::vector<SymPoly> chain_;
};

/// A real root x0 of a squarefree defining polynomial, isolated by a rational
/// interval inside (-4, 0). Value type: refinement returns a new root.
class AlgebraicRoot {
public:
    /// Requires defpoly squarefree with exactly one root in (lo, hi) and
    /// neither endpoint a root.
    AlgebraicRoot(SymPoly defpoly, mpq_class lo, mpq_class hi, int multiplicity);

    const SymPoly& defpoly() const { return defpoly_; }
    const mpq_class& lo() const { return lo_; }
    const mpq_class& hi() const { return hi_; }
    int multiplicity() const { return multiplicity_; }
    mpq_class width() const { return hi_ - lo_; }

    /// One bisection step.
    AlgebraicRoot bisected() const;
    /// Interval width below 10^-digits.
    AlgebraicRoot refined(unsigned digits) const;

    BigFloat x(Precision prec = {}) const;
    BigFloat turn(Precision prec = {}) const;
    double turn_double() const;
    /// Exact rational turn when x0 is -1, -2 or -3 (turns 1/6, 1/4, 1/3);
    /// no other rational turn has a rational cosine in (-4, 0).
    std::optional<mpq_class> exact_turn() const;

private:
    SymPoly defpoly_;
    mpq_class lo_;
    mpq_class hi_;
    int multiplicity_;
    int sign_lo_;
};

/// All roots of p in (-4, 0) with multiplicities, sorted by increasing turn.
/// Throws std::invalid_argument for p = 0.
std::vector<AlgebraicRoot> isolate_roots(const SymPoly& p);

/// Exact equality of the two algebraic points.
bool same_point(const AlgebraicRoot& a, const AlgebraicRoot& b);

/// Exact sign of p(x0) in {-1, 0, 1}.
int sign_at(const SymPoly& p, const AlgebraicRoot& r);

struct ThetaSign {
    int order = 0;
    int sign = 0;
    friend bool operator==(const ThetaSign&, const ThetaSign&) = default;
};

/// Vanishing order of p at x0 and the sign of the first nonvanishing
/// derivative with respect to the angle theta = 2 pi s (dx/dtheta < 0).
ThetaSign theta_sign(const SymPoly& p, const AlgebraicRoot& r);

}  // namespace knotsig
