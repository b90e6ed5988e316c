#include "knotsig/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace knotsig {

mpfr_prec_t Precision::bits() const
{
    // log2(10) ~ 3.3219; 32 guard bits absorb cancellation near poles.
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.32192809488736)) + 32;
}

BigFloat::BigFloat(mpfr_prec_t bits, int)
{
    mpfr_init2(v_, bits);
}

BigFloat::BigFloat(Precision p) : BigFloat(p.bits(), 0)
{
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double v, Precision p) : BigFloat(p.bits(), 0)
{
    mpfr_set_d(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(long v, Precision p) : BigFloat(p.bits(), 0)
{
    mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& v, Precision p) : BigFloat(p.bits(), 0)
{
    mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const mpz_class& v, Precision p) : BigFloat(p.bits(), 0)
{
    mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) : BigFloat(other.bits(), 0)
{
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept : BigFloat(other.bits(), 0)
{
    mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other)
{
    if (this != &other) {
        mpfr_set_prec(v_, other.bits());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept
{
    if (this != &other) {
        if (bits() != other.bits()) mpfr_set_prec(v_, other.bits());
        mpfr_swap(v_, other.v_);
    }
    return *this;
}

BigFloat::~BigFloat()
{
    mpfr_clear(v_);
}

namespace {

void widen(mpfr_t v, mpfr_prec_t want)
{
    if (mpfr_get_prec(v) < want) mpfr_prec_round(v, want, MPFR_RNDN);
}

}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& rhs)
{
    widen(v_, rhs.bits());
    mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs)
{
    widen(v_, rhs.bits());
    mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs)
{
    widen(v_, rhs.bits());
    mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs)
{
    widen(v_, rhs.bits());
    mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

BigFloat BigFloat::operator-() const
{
    BigFloat r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

std::string BigFloat::str(unsigned significant) const
{
    int n = mpfr_snprintf(nullptr, 0, "%.*Rg", static_cast<int>(significant), v_);
    std::vector<char> buf(static_cast<std::size_t>(n) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", static_cast<int>(significant), v_);
    return std::string(buf.data(), static_cast<std::size_t>(n));
}

BigFloat BigFloat::pi(Precision p)
{
    BigFloat r(p);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::like(const mpq_class& v) const
{
    BigFloat r(bits(), 0);
    mpfr_set_q(r.v_, v.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::like(long v) const
{
    BigFloat r(bits(), 0);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pi_like() const
{
    BigFloat r(bits(), 0);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigFloat sin(const BigFloat& x)
{
    BigFloat r(x.bits(), 0);
    mpfr_sin(r.v_, x.v_, MPFR_RNDN);
    return r;
}

BigFloat cos(const BigFloat& x)
{
    BigFloat r(x.bits(), 0);
    mpfr_cos(r.v_, x.v_, MPFR_RNDN);
    return r;
}

BigFloat acos(const BigFloat& x)
{
    BigFloat r(x.bits(), 0);
    mpfr_acos(r.v_, x.v_, MPFR_RNDN);
    return r;
}

BigFloat sqrt(const BigFloat& x)
{
    BigFloat r(x.bits(), 0);
    mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
    return r;
}

BigFloat abs(const BigFloat& x)
{
    BigFloat r(x.bits(), 0);
    mpfr_abs(r.v_, x.v_, MPFR_RNDN);
    return r;
}

BigFloat pow(const BigFloat& x, long n)
{
    BigFloat r(x.bits(), 0);
    mpfr_pow_si(r.v_, x.v_, n, MPFR_RNDN);
    return r;
}

}  // namespace knotsig
