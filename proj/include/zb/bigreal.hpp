#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

#include "zb/rational.hpp"

namespace zb {

// Arbitrary-precision binary float with explicit working precision in bits.
// Binary operations compute at the larger of the operand precisions.
class BigReal {
public:
    explicit BigReal(mpfr_prec_t prec = 128) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    BigReal(long x, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, x, MPFR_RNDN);
    }
    BigReal(const Rat& q, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }
    BigReal(const Int& z, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
    }

    BigReal(const BigReal& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigReal(BigReal&& o) noexcept {
        mpfr_init2(v_, 2);
        mpfr_swap(v_, o.v_);
    }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigReal() { mpfr_clear(v_); }

    mpfr_prec_t prec_bits() const { return mpfr_get_prec(v_); }
    const mpfr_t& raw() const { return v_; }
    mpfr_t& raw() { return v_; }

    static BigReal pi(mpfr_prec_t prec) {
        BigReal r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    bool is_zero() const { return mpfr_zero_p(v_); }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Nearest integer, exact.
    Int round_to_int() const {
        mpfr_t t;
        mpfr_init2(t, mpfr_get_prec(v_));
        mpfr_round(t, v_);
        Int z;
        mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDZ);
        mpfr_clear(t);
        return z;
    }

    std::string str(int digits) const;

    friend BigReal operator+(const BigReal& a, const BigReal& b) {
        BigReal r(std::max(a.prec_bits(), b.prec_bits()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator-(const BigReal& a, const BigReal& b) {
        BigReal r(std::max(a.prec_bits(), b.prec_bits()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator*(const BigReal& a, const BigReal& b) {
        BigReal r(std::max(a.prec_bits(), b.prec_bits()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator/(const BigReal& a, const BigReal& b) {
        BigReal r(std::max(a.prec_bits(), b.prec_bits()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator-(const BigReal& a) {
        BigReal r(a.prec_bits());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    BigReal& operator+=(const BigReal& o) {
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigReal& operator-=(const BigReal& o) {
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigReal& operator*=(const BigReal& o) {
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigReal& operator/=(const BigReal& o) {
        mpfr_div(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    friend BigReal abs(const BigReal& a) {
        BigReal r(a.prec_bits());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal pow_si(const BigReal& a, long e) {
        BigReal r(a.prec_bits());
        mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }
    friend BigReal pow2(long e, mpfr_prec_t prec) {
        BigReal r(prec);
        mpfr_set_ui_2exp(r.raw(), 1, e, MPFR_RNDN);
        return r;
    }
    // 10^e as a BigReal (e may be negative), for tolerance thresholds.
    static BigReal pow10(long e, mpfr_prec_t prec) {
        BigReal r(prec);
        mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
        if (e < 0) mpfr_ui_div(r.raw(), 1, r.raw(), MPFR_RNDN);
        return r;
    }

    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

private:
    mpfr_t v_;
};

}  // namespace zb
