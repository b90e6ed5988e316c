#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace knotsig {

/// Working precision in significant decimal digits.
struct Precision {
    unsigned digits = 30;

    /// MPFR bit count with a fixed guard margin.
    mpfr_prec_t bits() const;
};

/// RAII handle on an MPFR float that carries its own precision.
///
/// Binary operations round to the larger of the two operand precisions, so a
/// computation started at some precision stays there without touching any
/// process-wide default.
class BigFloat {
public:
    explicit BigFloat(Precision p = {});
    BigFloat(double v, Precision p);
    BigFloat(long v, Precision p);
    BigFloat(const mpq_class& v, Precision p);
    BigFloat(const mpz_class& v, Precision p);

    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    mpfr_prec_t bits() const { return mpfr_get_prec(v_); }

    BigFloat& operator+=(const BigFloat& rhs);
    BigFloat& operator-=(const BigFloat& rhs);
    BigFloat& operator*=(const BigFloat& rhs);
    BigFloat& operator/=(const BigFloat& rhs);

    BigFloat operator-() const;

    friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
    friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
    friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
    friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Decimal rendering with the given number of significant digits.
    std::string str(unsigned significant = 20) const;

    static BigFloat pi(Precision p);

    /// Value v at this number's precision.
    BigFloat like(const mpq_class& v) const;
    BigFloat like(long v) const;
    /// pi at this number's precision.
    BigFloat pi_like() const;

    friend BigFloat sin(const BigFloat& x);
    friend BigFloat cos(const BigFloat& x);
    friend BigFloat acos(const BigFloat& x);
    friend BigFloat sqrt(const BigFloat& x);
    friend BigFloat abs(const BigFloat& x);
    friend BigFloat pow(const BigFloat& x, long n);

    const __mpfr_struct* raw() const { return v_; }

private:
    explicit BigFloat(mpfr_prec_t bits, int /*tag*/);
    mpfr_t v_;
};

}  // namespace knotsig
