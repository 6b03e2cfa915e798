#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <functional>
#include <string>
#include <utility>

#include "certeq/errors.hpp"

namespace certeq {

using Prec = mpfr_prec_t;

inline constexpr Prec kMinPrec = 2;
// Radius mantissa is fixed at 30 bits and always rounded up.
inline constexpr Prec kRadPrec = 30;
// Nonzero refinement: 16 precision doublings starting from 64 bits,
// capped at 2^20 bits.
inline constexpr Prec kRefineStartPrec = 64;
inline constexpr int kRefineMaxDoublings = 16;
inline constexpr Prec kRefineMaxPrec = Prec(1) << 20;

namespace detail {

// RAII wrapper around a raw mpfr_t.
class Fr {
public:
    explicit Fr(Prec p) { mpfr_init2(v_, p < MPFR_PREC_MIN ? MPFR_PREC_MIN : p); }
    Fr(const Fr&) = delete;
    Fr& operator=(const Fr&) = delete;
    Fr(Fr&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    ~Fr() { mpfr_clear(v_); }
    operator mpfr_ptr() { return v_; }
    operator mpfr_srcptr() const { return v_; }
    mpfr_ptr ptr() { return v_; }
    mpfr_srcptr ptr() const { return v_; }

private:
    mpfr_t v_;
};

} // namespace detail

// Midpoint-radius enclosure of a real number.  The midpoint is a dyadic
// rational with prec-bit mantissa; the radius is a 30-bit upper bound.
// Every operation guarantees the exact mathematical result of exact inputs
// is contained in the output ball.
class BallReal {
public:
    BallReal() : BallReal(kRefineStartPrec) {}
    explicit BallReal(Prec prec);
    BallReal(const BallReal& o);
    BallReal(BallReal&& o) noexcept;
    BallReal& operator=(const BallReal& o);
    BallReal& operator=(BallReal&& o) noexcept;
    ~BallReal();

    static BallReal exact_int(long v, Prec prec);
    // Ball containing q; exact when q is dyadic representable at prec.
    static BallReal from_rational(const mpq_class& q, Prec prec);
    static BallReal from_mpfr(mpfr_srcptr m, Prec prec);
    // Smallest ball at prec covering [lo, hi].
    static BallReal from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, Prec prec);
    static BallReal from_rational_interval(const mpq_class& lo, const mpq_class& hi,
                                           Prec prec);
    // The distinguished whole-line value (radius = +inf).
    static BallReal whole_line(Prec prec);

    Prec prec() const { return prec_; }
    bool is_whole_line() const;
    bool is_exact() const; // rad == 0
    mpfr_srcptr mid() const { return mid_; }
    mpfr_srcptr rad() const { return rad_; }

    // Directed-rounding endpoints written into out (any precision).
    void get_lower(mpfr_ptr out) const;
    void get_upper(mpfr_ptr out) const;
    // Exact dyadic endpoints.
    mpq_class lower_q() const;
    mpq_class upper_q() const;
    mpq_class mid_q() const;

    bool contains_zero() const;
    bool excludes_zero() const;
    // -1 / +1 when the sign is certain, 0 when the ball contains zero.
    int sign() const;
    bool contains_rational(const mpq_class& q) const;
    // True when other is a subset of *this (closed intervals).
    bool contains_ball(const BallReal& other) const;
    bool overlaps(const BallReal& other) const;

    // width = 2*rad as an upper-bounded double exponent check helper
    // (exact dyadic width available through upper_q() - lower_q()).
    bool width_below_2exp(long e) const; // 2*rad <= 2^e, certified
    double rad_double() const;

    std::string mid_hex() const; // lossless "0x...p..." form
    std::string rad_hex() const;
    static BallReal from_hex(const std::string& mid_hex, const std::string& rad_hex,
                             Prec prec);
    // Decimal rendering of the midpoint (display only).
    std::string mid_decimal(std::size_t digits) const;

private:
    mpfr_t mid_;
    mpfr_t rad_;
    Prec prec_;
    friend class BallComplex;
    friend BallReal ball_make(mpfr_srcptr mid, mpfr_srcptr rad, Prec prec);
};

// Internal constructor used by the kernels in ball_real.cpp.
BallReal ball_make(mpfr_srcptr mid, mpfr_srcptr rad, Prec prec);

// Re-round a ball to a target precision (containment preserved).
BallReal round_to(const BallReal& a, Prec prec);

BallReal add(const BallReal& a, const BallReal& b, Prec prec);
BallReal sub(const BallReal& a, const BallReal& b, Prec prec);
BallReal mul(const BallReal& a, const BallReal& b, Prec prec);
BallReal div(const BallReal& a, const BallReal& b, Prec prec); // throws DivisorMayBeZero
BallReal neg(const BallReal& a);
BallReal abs_ball(const BallReal& a);
// Integer power by repeated squaring; negative k requires a to exclude 0.
BallReal pow_int(const BallReal& a, long k, Prec prec);
// min/max of two balls as the ball covering {min(x,y)} resp. {max(x,y)}.
BallReal min_ball(const BallReal& a, const BallReal& b, Prec prec);
BallReal max_ball(const BallReal& a, const BallReal& b, Prec prec);

enum class UnaryFn {
    Exp, Ln, Sqrt,
    Sin, Cos, Tan, Csc, Sec, Cot,
    Sinh, Cosh, Tanh, Coth,
    Asin, Acos, Atan, Acot, Asec, Acsc
};

const char* unary_fn_name(UnaryFn fn);
// Returns the UnaryFn for a name ("asin" also accepts "arcsin"), or throws.
UnaryFn unary_fn_from_name(const std::string& name);

BallReal apply(UnaryFn fn, const BallReal& a, Prec prec);

enum class NamedConst { E, Pi };
// Ball of width <= 4 ulp at prec containing the exact constant.
BallReal const_ball(NamedConst c, Prec prec);

// Rectangle enclosure of a complex number: re ball x im ball.
class BallComplex {
public:
    BallComplex() = default;
    BallComplex(BallReal re, BallReal im) : re_(std::move(re)), im_(std::move(im)) {}
    static BallComplex from_real(const BallReal& re);
    static BallComplex exact_int(long re, long im, Prec prec);
    static BallComplex from_rationals(const mpq_class& re, const mpq_class& im,
                                      Prec prec);

    const BallReal& re() const { return re_; }
    const BallReal& im() const { return im_; }
    Prec prec() const { return re_.prec() > im_.prec() ? re_.prec() : im_.prec(); }

    bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
    bool excludes_zero() const { return !contains_zero(); }
    bool is_exact() const { return re_.is_exact() && im_.is_exact(); }
    // im is the exact zero ball.
    bool is_real() const { return im_.is_exact() && im_.sign() == 0; }
    bool contains_box(const BallComplex& other) const {
        return re_.contains_ball(other.re_) && im_.contains_ball(other.im_);
    }
    bool overlaps(const BallComplex& other) const {
        return re_.overlaps(other.re_) && im_.overlaps(other.im_);
    }

private:
    BallReal re_, im_;
};

BallComplex round_to(const BallComplex& a, Prec prec);
BallComplex add(const BallComplex& a, const BallComplex& b, Prec prec);
BallComplex sub(const BallComplex& a, const BallComplex& b, Prec prec);
BallComplex mul(const BallComplex& a, const BallComplex& b, Prec prec);
BallComplex div(const BallComplex& a, const BallComplex& b, Prec prec);
BallComplex neg(const BallComplex& a);
BallComplex conj_ball(const BallComplex& a);
BallComplex pow_int(const BallComplex& a, long k, Prec prec);
BallComplex apply(UnaryFn fn, const BallComplex& a, Prec prec);
// |z| over the rectangle.
BallReal abs_ball(const BallComplex& a, Prec prec);
// Principal argument over a rectangle that excludes 0 and does not straddle
// the negative real axis.
BallReal arg_ball(const BallComplex& a, Prec prec);

enum class NonzeroResult { Nonzero, Zero, Undecided };

struct NonzeroOutcome {
    NonzeroResult result;
    Prec witness_prec; // precision at which decided, or the last tried
};

// Semi-decision procedure for "the represented value is nonzero".  The
// refiner must return containment-consistent balls at the requested
// precision.  Zero is reported only for an exactly-zero input ball.
NonzeroOutcome refine_nonzero(const BallReal& a,
                              const std::function<BallReal(Prec)>& refiner,
                              int max_doublings = kRefineMaxDoublings);
NonzeroOutcome refine_nonzero(const BallComplex& a,
                              const std::function<BallComplex(Prec)>& refiner,
                              int max_doublings = kRefineMaxDoublings);

} // namespace certeq
