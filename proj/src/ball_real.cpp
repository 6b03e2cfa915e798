#include "certeq/ball.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

namespace certeq {

namespace {

Prec clamp_prec(Prec p) {
    if (p < kMinPrec) return kMinPrec;
    return p;
}

// Working precision for endpoint kernels.
Prec wp(Prec prec) { return prec + 32; }

// Adds one ulp of mid (at precision prec) to rad, rounding up.  Upper bound
// for any half-ulp rounding error with slack.
void add_ulp(mpfr_ptr rad, mpfr_srcptr mid, Prec prec) {
    mpfr_exp_t e;
    if (mpfr_zero_p(mid)) {
        e = mpfr_get_emin() + prec; // value rounded to zero: true |x| <= 2^(emin-1)
    } else {
        e = mpfr_get_exp(mid);
    }
    detail::Fr ulp(kRadPrec);
    mpfr_set_ui_2exp(ulp, 1, e - prec, MPFR_RNDU);
    mpfr_add(rad, rad, ulp, MPFR_RNDU);
}

void check_finite_rad(mpfr_srcptr rad) {
    if (mpfr_nan_p(rad)) throw Error("internal: radius is NaN");
}

} // namespace

BallReal::BallReal(Prec prec) : prec_(clamp_prec(prec)) {
    mpfr_init2(mid_, prec_);
    mpfr_init2(rad_, kRadPrec);
    mpfr_set_zero(mid_, 1);
    mpfr_set_zero(rad_, 1);
}

BallReal::BallReal(const BallReal& o) : prec_(o.prec_) {
    mpfr_init2(mid_, mpfr_get_prec(o.mid_));
    mpfr_init2(rad_, kRadPrec);
    mpfr_set(mid_, o.mid_, MPFR_RNDN);
    mpfr_set(rad_, o.rad_, MPFR_RNDU);
}

BallReal::BallReal(BallReal&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(mid_, mpfr_get_prec(o.mid_));
    mpfr_init2(rad_, kRadPrec);
    mpfr_swap(mid_, o.mid_);
    mpfr_swap(rad_, o.rad_);
}

BallReal& BallReal::operator=(const BallReal& o) {
    if (this != &o) {
        mpfr_set_prec(mid_, mpfr_get_prec(o.mid_));
        mpfr_set(mid_, o.mid_, MPFR_RNDN);
        mpfr_set(rad_, o.rad_, MPFR_RNDU);
        prec_ = o.prec_;
    }
    return *this;
}

BallReal& BallReal::operator=(BallReal&& o) noexcept {
    if (this != &o) {
        mpfr_swap(mid_, o.mid_);
        mpfr_swap(rad_, o.rad_);
        prec_ = o.prec_;
    }
    return *this;
}

BallReal::~BallReal() {
    mpfr_clear(mid_);
    mpfr_clear(rad_);
}

BallReal ball_make(mpfr_srcptr mid, mpfr_srcptr rad, Prec prec) {
    BallReal b(prec);
    mpfr_set(b.mid_, mid, MPFR_RNDN);
    mpfr_set(b.rad_, rad, MPFR_RNDU);
    check_finite_rad(b.rad_);
    return b;
}

BallReal BallReal::exact_int(long v, Prec prec) {
    BallReal b(prec);
    int t = mpfr_set_si(b.mid_, v, MPFR_RNDN);
    if (t != 0) {
        // value not representable at prec: widen
        add_ulp(b.rad_, b.mid_, b.prec_);
    }
    return b;
}

BallReal BallReal::from_rational(const mpq_class& q, Prec prec) {
    BallReal b(prec);
    int t = mpfr_set_q(b.mid_, q.get_mpq_t(), MPFR_RNDN);
    if (t != 0) add_ulp(b.rad_, b.mid_, b.prec_);
    return b;
}

BallReal BallReal::from_mpfr(mpfr_srcptr m, Prec prec) {
    BallReal b(prec);
    int t = mpfr_set(b.mid_, m, MPFR_RNDN);
    if (t != 0) add_ulp(b.rad_, b.mid_, b.prec_);
    return b;
}

BallReal BallReal::from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, Prec prec) {
    prec = clamp_prec(prec);
    if (mpfr_nan_p(lo) || mpfr_nan_p(hi)) throw Error("internal: NaN endpoint");
    if (mpfr_inf_p(lo) || mpfr_inf_p(hi)) return whole_line(prec);
    if (mpfr_cmp(lo, hi) > 0) throw Error("internal: inverted interval");
    BallReal b(prec);
    detail::Fr s(wp(prec));
    mpfr_add(s, lo, hi, MPFR_RNDN);
    mpfr_div_2ui(s, s, 1, MPFR_RNDN);
    mpfr_set(b.mid_, s.ptr(), MPFR_RNDN); // mid ~ center, rounded to prec
    detail::Fr d1(kRadPrec), d2(kRadPrec);
    mpfr_sub(d1, hi, b.mid_, MPFR_RNDU);
    mpfr_sub(d2, b.mid_, lo, MPFR_RNDU);
    if (mpfr_sgn(d1.ptr()) < 0) mpfr_set_zero(d1, 1);
    if (mpfr_sgn(d2.ptr()) < 0) mpfr_set_zero(d2, 1);
    mpfr_max(b.rad_, d1, d2, MPFR_RNDU);
    return b;
}

BallReal BallReal::from_rational_interval(const mpq_class& lo, const mpq_class& hi,
                                          Prec prec) {
    detail::Fr l(wp(prec)), h(wp(prec));
    mpfr_set_q(l, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(h, hi.get_mpq_t(), MPFR_RNDU);
    return from_endpoints(l, h, prec);
}

BallReal BallReal::whole_line(Prec prec) {
    BallReal b(prec);
    mpfr_set_zero(b.mid_, 1);
    mpfr_set_inf(b.rad_, 1);
    return b;
}

bool BallReal::is_whole_line() const { return mpfr_inf_p(rad_); }

bool BallReal::is_exact() const { return mpfr_zero_p(rad_); }

void BallReal::get_lower(mpfr_ptr out) const {
    if (is_whole_line()) { mpfr_set_inf(out, -1); return; }
    mpfr_sub(out, mid_, rad_, MPFR_RNDD);
}

void BallReal::get_upper(mpfr_ptr out) const {
    if (is_whole_line()) { mpfr_set_inf(out, 1); return; }
    mpfr_add(out, mid_, rad_, MPFR_RNDU);
}

mpq_class BallReal::mid_q() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), mid_);
    return q;
}

mpq_class BallReal::lower_q() const {
    if (is_whole_line()) throw Error("whole-line ball has no finite endpoint");
    mpq_class m = mid_q(), r;
    mpfr_get_q(r.get_mpq_t(), rad_);
    return m - r;
}

mpq_class BallReal::upper_q() const {
    if (is_whole_line()) throw Error("whole-line ball has no finite endpoint");
    mpq_class m = mid_q(), r;
    mpfr_get_q(r.get_mpq_t(), rad_);
    return m + r;
}

bool BallReal::contains_zero() const {
    if (is_whole_line()) return true;
    return mpfr_cmpabs(mid_, rad_) <= 0; // exact comparison
}

bool BallReal::excludes_zero() const { return !contains_zero(); }

int BallReal::sign() const {
    if (contains_zero()) return 0;
    return mpfr_sgn(mid_);
}

bool BallReal::contains_rational(const mpq_class& q) const {
    if (is_whole_line()) return true;
    return q >= lower_q() && q <= upper_q();
}

bool BallReal::contains_ball(const BallReal& other) const {
    if (is_whole_line()) return true;
    if (other.is_whole_line()) return false;
    return lower_q() <= other.lower_q() && other.upper_q() <= upper_q();
}

bool BallReal::overlaps(const BallReal& other) const {
    if (is_whole_line() || other.is_whole_line()) return true;
    return !(upper_q() < other.lower_q() || other.upper_q() < lower_q());
}

bool BallReal::width_below_2exp(long e) const {
    if (is_whole_line()) return false;
    if (is_exact()) return true;
    detail::Fr w(kRadPrec);
    mpfr_mul_2ui(w, rad_, 1, MPFR_RNDU);
    detail::Fr lim(kRadPrec);
    mpfr_set_ui_2exp(lim, 1, e, MPFR_RNDD);
    return mpfr_cmp(w, lim) <= 0;
}

double BallReal::rad_double() const { return mpfr_get_d(rad_, MPFR_RNDU); }

std::string BallReal::mid_hex() const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%Ra", mid_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::string BallReal::rad_hex() const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%Ra", rad_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

BallReal BallReal::from_hex(const std::string& mid_hex, const std::string& rad_hex,
                            Prec prec) {
    BallReal b(prec);
    mpfr_set_str(b.mid_, mid_hex.c_str(), 0, MPFR_RNDN);
    mpfr_set_str(b.rad_, rad_hex.c_str(), 0, MPFR_RNDU);
    return b;
}

std::string BallReal::mid_decimal(std::size_t digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), mid_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

// ---------------------------------------------------------------------------
// binary operations

BallReal round_to(const BallReal& a, Prec prec) {
    prec = clamp_prec(prec);
    if (a.is_whole_line()) return BallReal::whole_line(prec);
    const Prec w = std::max(wp(prec), mpfr_get_prec(a.mid()) + kRadPrec);
    detail::Fr lo(w), hi(w);
    a.get_lower(lo);
    a.get_upper(hi);
    return BallReal::from_endpoints(lo, hi, prec);
}

BallReal add(const BallReal& a, const BallReal& b, Prec prec) {
    prec = clamp_prec(prec);
    if (a.is_whole_line() || b.is_whole_line()) return BallReal::whole_line(prec);
    detail::Fr m(prec), r(kRadPrec);
    int t = mpfr_add(m, a.mid(), b.mid(), MPFR_RNDN);
    mpfr_add(r, a.rad(), b.rad(), MPFR_RNDU);
    if (t != 0) add_ulp(r, m, prec);
    return ball_make(m, r, prec);
}

BallReal sub(const BallReal& a, const BallReal& b, Prec prec) {
    prec = clamp_prec(prec);
    if (a.is_whole_line() || b.is_whole_line()) return BallReal::whole_line(prec);
    detail::Fr m(prec), r(kRadPrec);
    int t = mpfr_sub(m, a.mid(), b.mid(), MPFR_RNDN);
    mpfr_add(r, a.rad(), b.rad(), MPFR_RNDU);
    if (t != 0) add_ulp(r, m, prec);
    return ball_make(m, r, prec);
}

BallReal mul(const BallReal& a, const BallReal& b, Prec prec) {
    prec = clamp_prec(prec);
    // exact zero annihilates, even against the whole line
    if (a.is_exact() && mpfr_zero_p(a.mid())) return BallReal::exact_int(0, prec);
    if (b.is_exact() && mpfr_zero_p(b.mid())) return BallReal::exact_int(0, prec);
    if (a.is_whole_line() || b.is_whole_line()) return BallReal::whole_line(prec);
    detail::Fr m(prec);
    int t = mpfr_mul(m, a.mid(), b.mid(), MPFR_RNDN);
    // rad = |ma|*rb + |mb|*ra + ra*rb (+ rounding ulp)
    detail::Fr r(kRadPrec), term(kRadPrec), aa(kRadPrec), ab(kRadPrec);
    mpfr_abs(aa, a.mid(), MPFR_RNDU);
    mpfr_abs(ab, b.mid(), MPFR_RNDU);
    mpfr_mul(r, aa, b.rad(), MPFR_RNDU);
    mpfr_mul(term, ab, a.rad(), MPFR_RNDU);
    mpfr_add(r, r, term, MPFR_RNDU);
    mpfr_mul(term, a.rad(), b.rad(), MPFR_RNDU);
    mpfr_add(r, r, term, MPFR_RNDU);
    if (t != 0) add_ulp(r, m, prec);
    return ball_make(m, r, prec);
}

BallReal div(const BallReal& a, const BallReal& b, Prec prec) {
    prec = clamp_prec(prec);
    if (b.is_whole_line() || b.contains_zero())
        throw DivisorMayBeZero("real divisor ball contains 0");
    if (a.is_whole_line()) return BallReal::whole_line(prec);
    if (a.is_exact() && mpfr_zero_p(a.mid())) return BallReal::exact_int(0, prec);
    const Prec w = wp(prec);
    detail::Fr alo(w), ahi(w), blo(w), bhi(w);
    a.get_lower(alo); a.get_upper(ahi);
    b.get_lower(blo); b.get_upper(bhi);
    detail::Fr lo(w), hi(w), q(w);
    mpfr_set_inf(lo, 1);
    mpfr_set_inf(hi, -1);
    mpfr_srcptr as[2] = {alo.ptr(), ahi.ptr()};
    mpfr_srcptr bs[2] = {blo.ptr(), bhi.ptr()};
    for (auto* x : as) {
        for (auto* y : bs) {
            mpfr_div(q, x, y, MPFR_RNDD);
            mpfr_min(lo, lo, q, MPFR_RNDD);
            mpfr_div(q, x, y, MPFR_RNDU);
            mpfr_max(hi, hi, q, MPFR_RNDU);
        }
    }
    return BallReal::from_endpoints(lo, hi, prec);
}

BallReal neg(const BallReal& a) {
    BallReal b(a);
    detail::Fr m(mpfr_get_prec(a.mid()));
    mpfr_neg(m, a.mid(), MPFR_RNDN); // exact
    return ball_make(m, a.rad(), a.prec());
}

BallReal abs_ball(const BallReal& a) {
    if (a.is_whole_line()) {
        // |whole line| = [0, inf): representable only as whole line here
        return BallReal::whole_line(a.prec());
    }
    int s = a.sign();
    if (s > 0) return a;
    if (s < 0) return neg(a);
    // straddles zero: [0, max(|lo|, |hi|)]
    const Prec w = wp(a.prec());
    detail::Fr lo(w), hi(w), m(w);
    a.get_lower(lo);
    a.get_upper(hi);
    mpfr_abs(lo, lo, MPFR_RNDU);
    mpfr_abs(hi, hi, MPFR_RNDU);
    mpfr_max(m, lo, hi, MPFR_RNDU);
    detail::Fr zero(w);
    mpfr_set_zero(zero, 1);
    return BallReal::from_endpoints(zero, m, a.prec());
}

BallReal pow_int(const BallReal& a, long k, Prec prec) {
    prec = clamp_prec(prec);
    if (k == 0) return BallReal::exact_int(1, prec);
    if (k < 0) {
        BallReal p = pow_int(a, -k, prec);
        return div(BallReal::exact_int(1, prec), p, prec);
    }
    if (a.is_whole_line()) return BallReal::whole_line(prec);
    const Prec w = wp(prec);
    detail::Fr lo(w), hi(w), plo(w), phi(w);
    a.get_lower(lo);
    a.get_upper(hi);
    if (k % 2 == 1) {
        mpfr_pow_si(plo, lo, k, MPFR_RNDD);
        mpfr_pow_si(phi, hi, k, MPFR_RNDU);
        return BallReal::from_endpoints(plo, phi, prec);
    }
    if (a.contains_zero()) {
        mpfr_abs(lo, lo, MPFR_RNDU);
        mpfr_abs(hi, hi, MPFR_RNDU);
        mpfr_max(hi, lo, hi, MPFR_RNDU);
        mpfr_pow_si(phi, hi, k, MPFR_RNDU);
        mpfr_set_zero(plo, 1);
        return BallReal::from_endpoints(plo, phi, prec);
    }
    // same-sign interval, even power: monotone in |x|
    detail::Fr l2(w), h2(w);
    mpfr_abs(lo, lo, MPFR_RNDN); // exact
    mpfr_abs(hi, hi, MPFR_RNDN);
    if (mpfr_cmp(lo, hi) > 0) mpfr_swap(lo, hi);
    mpfr_pow_si(l2, lo, k, MPFR_RNDD);
    mpfr_pow_si(h2, hi, k, MPFR_RNDU);
    return BallReal::from_endpoints(l2, h2, prec);
}

BallReal min_ball(const BallReal& a, const BallReal& b, Prec prec) {
    if (a.is_whole_line() || b.is_whole_line()) return BallReal::whole_line(prec);
    const Prec w = wp(prec);
    detail::Fr alo(w), ahi(w), blo(w), bhi(w);
    a.get_lower(alo); a.get_upper(ahi);
    b.get_lower(blo); b.get_upper(bhi);
    mpfr_min(alo, alo, blo, MPFR_RNDD);
    mpfr_min(ahi, ahi, bhi, MPFR_RNDU);
    return BallReal::from_endpoints(alo, ahi, prec);
}

BallReal max_ball(const BallReal& a, const BallReal& b, Prec prec) {
    if (a.is_whole_line() || b.is_whole_line()) return BallReal::whole_line(prec);
    const Prec w = wp(prec);
    detail::Fr alo(w), ahi(w), blo(w), bhi(w);
    a.get_lower(alo); a.get_upper(ahi);
    b.get_lower(blo); b.get_upper(bhi);
    mpfr_max(alo, alo, blo, MPFR_RNDD);
    mpfr_max(ahi, ahi, bhi, MPFR_RNDU);
    return BallReal::from_endpoints(alo, ahi, prec);
}

// ---------------------------------------------------------------------------
// constants

BallReal const_ball(NamedConst c, Prec prec) {
    prec = clamp_prec(prec);
    detail::Fr lo(prec), hi(prec);
    switch (c) {
    case NamedConst::E: {
        detail::Fr one(8);
        mpfr_set_ui(one, 1, MPFR_RNDN);
        mpfr_exp(lo, one, MPFR_RNDD);
        mpfr_exp(hi, one, MPFR_RNDU);
        break;
    }
    case NamedConst::Pi:
        mpfr_const_pi(lo, MPFR_RNDD);
        mpfr_const_pi(hi, MPFR_RNDU);
        break;
    }
    return BallReal::from_endpoints(lo, hi, prec);
}

// ---------------------------------------------------------------------------
// elementary functions

namespace {

using MpfrUnary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

BallReal endpoint_increasing(MpfrUnary f, const BallReal& a, Prec prec) {
    const Prec w = wp(prec);
    detail::Fr lo(w), hi(w), flo(w), fhi(w);
    a.get_lower(lo);
    a.get_upper(hi);
    f(flo, lo, MPFR_RNDD);
    f(fhi, hi, MPFR_RNDU);
    return BallReal::from_endpoints(flo, fhi, prec);
}

BallReal endpoint_decreasing(MpfrUnary f, const BallReal& a, Prec prec) {
    const Prec w = wp(prec);
    detail::Fr lo(w), hi(w), flo(w), fhi(w);
    a.get_lower(lo);
    a.get_upper(hi);
    f(flo, hi, MPFR_RNDD);
    f(fhi, lo, MPFR_RNDU);
    return BallReal::from_endpoints(flo, fhi, prec);
}

// Exact rational interval of pi/2 at working precision.
void half_pi_interval(Prec w, mpq_class& lo, mpq_class& hi) {
    detail::Fr plo(w), phi(w);
    mpfr_const_pi(plo, MPFR_RNDD);
    mpfr_const_pi(phi, MPFR_RNDU);
    mpfr_div_2ui(plo, plo, 1, MPFR_RNDD); // exact
    mpfr_div_2ui(phi, phi, 1, MPFR_RNDU);
    mpfr_get_q(lo.get_mpq_t(), plo);
    mpfr_get_q(hi.get_mpq_t(), phi);
}

BallReal unit_range_ball(Prec prec) {
    detail::Fr lo(8), hi(8);
    mpfr_set_si(lo, -1, MPFR_RNDN);
    mpfr_set_si(hi, 1, MPFR_RNDN);
    return BallReal::from_endpoints(lo, hi, prec);
}

// Multiples k*(pi/2) that may intersect [lo, hi], as residues mod 4.
// Returns false when the interval spans at least a full period.
bool half_pi_marks(const mpq_class& lo, const mpq_class& hi, Prec w,
                   bool inside[4]) {
    mpq_class p2lo, p2hi;
    half_pi_interval(w, p2lo, p2hi);
    // quotients lo/(pi/2), hi/(pi/2) as exact rational intervals
    mpq_class qll = lo / (lo >= 0 ? p2hi : p2lo);
    mpq_class qlh = lo / (lo >= 0 ? p2lo : p2hi);
    mpq_class qhl = hi / (hi >= 0 ? p2hi : p2lo);
    mpq_class qhh = hi / (hi >= 0 ? p2lo : p2hi);
    mpz_class kmin, kmax;
    mpz_fdiv_q(kmin.get_mpz_t(), std::min(qll, qlh).get_num_mpz_t(),
               std::min(qll, qlh).get_den_mpz_t());
    mpz_fdiv_q(kmax.get_mpz_t(), std::max(qhl, qhh).get_num_mpz_t(),
               std::max(qhl, qhh).get_den_mpz_t());
    kmax += 1;
    for (int i = 0; i < 4; ++i) inside[i] = false;
    if (kmax - kmin > 10) return false; // interval too wide, treat as full period
    for (mpz_class k = kmin; k <= kmax; ++k) {
        mpq_class clo = mpq_class(k) * (k >= 0 ? p2lo : p2hi);
        mpq_class chi = mpq_class(k) * (k >= 0 ? p2hi : p2lo);
        if (chi >= lo && clo <= hi) {
            mpz_class m = ((k % 4) + 4) % 4;
            inside[m.get_si()] = true;
        }
    }
    return true;
}

BallReal sin_cos_kernel(const BallReal& a, Prec prec, bool is_sin) {
    const Prec w = wp(prec);
    detail::Fr lo(w), hi(w);
    a.get_lower(lo);
    a.get_upper(hi);
    mpq_class loq, hiq;
    mpfr_get_q(loq.get_mpq_t(), lo);
    mpfr_get_q(hiq.get_mpq_t(), hi);
    bool inside[4];
    if (!half_pi_marks(loq, hiq, w, inside)) return unit_range_ball(prec);
    // sin: max at k=1 mod 4, min at k=3; cos: max at k=0, min at k=2
    const bool has_max = inside[is_sin ? 1 : 0];
    const bool has_min = inside[is_sin ? 3 : 2];
    MpfrUnary f = is_sin ? static_cast<MpfrUnary>(mpfr_sin)
                         : static_cast<MpfrUnary>(mpfr_cos);
    detail::Fr v1(w), v2(w), out_lo(w), out_hi(w);
    if (has_max) {
        mpfr_set_si(out_hi, 1, MPFR_RNDN);
    } else {
        f(v1, lo, MPFR_RNDU);
        f(v2, hi, MPFR_RNDU);
        mpfr_max(out_hi, v1, v2, MPFR_RNDU);
    }
    if (has_min) {
        mpfr_set_si(out_lo, -1, MPFR_RNDN);
    } else {
        f(v1, lo, MPFR_RNDD);
        f(v2, hi, MPFR_RNDD);
        mpfr_min(out_lo, v1, v2, MPFR_RNDD);
    }
    return BallReal::from_endpoints(out_lo, out_hi, prec);
}

BallReal tan_cot_kernel(const BallReal& a, Prec prec, bool is_tan) {
    const Prec w = wp(prec);
    detail::Fr lo(w), hi(w);
    a.get_lower(lo);
    a.get_upper(hi);
    mpq_class loq, hiq;
    mpfr_get_q(loq.get_mpq_t(), lo);
    mpfr_get_q(hiq.get_mpq_t(), hi);
    bool inside[4];
    if (!half_pi_marks(loq, hiq, w, inside))
        throw DomainViolation(is_tan ? "tan over a full period" : "cot over a full period");
    // tan poles at odd multiples of pi/2, cot poles at even multiples
    const bool pole = is_tan ? (inside[1] || inside[3]) : (inside[0] || inside[2]);
    if (pole)
        throw DomainViolation(is_tan ? "tan pole may lie inside argument ball"
                                     : "cot pole may lie inside argument ball");
    if (is_tan) return endpoint_increasing(mpfr_tan, a, prec);
    return endpoint_decreasing(mpfr_cot, a, prec);
}

BallReal cosh_kernel(const BallReal& a, Prec prec) {
    const Prec w = wp(prec);
    detail::Fr lo(w), hi(w), flo(w), fhi(w), v(w);
    a.get_lower(lo);
    a.get_upper(hi);
    if (a.contains_zero()) {
        mpfr_set_si(flo, 1, MPFR_RNDN);
        mpfr_cosh(fhi, lo, MPFR_RNDU);
        mpfr_cosh(v, hi, MPFR_RNDU);
        mpfr_max(fhi, fhi, v, MPFR_RNDU);
        return BallReal::from_endpoints(flo, fhi, prec);
    }
    if (mpfr_sgn(lo.ptr()) > 0) return endpoint_increasing(mpfr_cosh, a, prec);
    return endpoint_decreasing(mpfr_cosh, a, prec);
}

BallReal coth_kernel(const BallReal& a, Prec prec) {
    if (a.contains_zero()) throw DomainViolation("coth at a ball containing 0");
    return endpoint_decreasing(mpfr_coth, a, prec);
}

void require_unit_domain(const BallReal& a, const char* fn) {
    if (a.is_whole_line() || a.lower_q() < -1 || a.upper_q() > 1)
        throw DomainViolation(std::string(fn) + " requires argument ball inside [-1,1]");
}

// 1/x for |x| >= 1 intervals, clamped into [-1,1].
BallReal reciprocal_into_unit(const BallReal& a, Prec prec, const char* fn) {
    if (a.is_whole_line() || (a.lower_q() < 1 && a.upper_q() > -1))
        throw DomainViolation(std::string(fn) + " requires |argument| >= 1");
    BallReal r = div(BallReal::exact_int(1, prec), a, prec);
    // the exact image lies in [-1,1]; trim rounding overshoot
    const Prec w = wp(prec);
    detail::Fr lo(w), hi(w), one(8), mone(8);
    r.get_lower(lo);
    r.get_upper(hi);
    mpfr_set_si(one, 1, MPFR_RNDN);
    mpfr_set_si(mone, -1, MPFR_RNDN);
    mpfr_max(lo, lo, mone, MPFR_RNDD);
    mpfr_min(hi, hi, one, MPFR_RNDU);
    return BallReal::from_endpoints(lo, hi, prec);
}

BallReal acot_kernel(const BallReal& a, Prec prec) {
    // acot x = pi/2 - atan x, decreasing, range (0, pi)
    BallReal at = endpoint_increasing(mpfr_atan, a, prec + 8);
    detail::Fr plo(wp(prec)), phi(wp(prec));
    mpfr_const_pi(plo, MPFR_RNDD);
    mpfr_const_pi(phi, MPFR_RNDU);
    mpfr_div_2ui(plo, plo, 1, MPFR_RNDD);
    mpfr_div_2ui(phi, phi, 1, MPFR_RNDU);
    BallReal half_pi = BallReal::from_endpoints(plo, phi, prec + 8);
    return sub(half_pi, at, prec);
}

} // namespace

const char* unary_fn_name(UnaryFn fn) {
    switch (fn) {
    case UnaryFn::Exp: return "exp";
    case UnaryFn::Ln: return "ln";
    case UnaryFn::Sqrt: return "sqrt";
    case UnaryFn::Sin: return "sin";
    case UnaryFn::Cos: return "cos";
    case UnaryFn::Tan: return "tan";
    case UnaryFn::Csc: return "csc";
    case UnaryFn::Sec: return "sec";
    case UnaryFn::Cot: return "cot";
    case UnaryFn::Sinh: return "sinh";
    case UnaryFn::Cosh: return "cosh";
    case UnaryFn::Tanh: return "tanh";
    case UnaryFn::Coth: return "coth";
    case UnaryFn::Asin: return "asin";
    case UnaryFn::Acos: return "acos";
    case UnaryFn::Atan: return "atan";
    case UnaryFn::Acot: return "acot";
    case UnaryFn::Asec: return "asec";
    case UnaryFn::Acsc: return "acsc";
    }
    return "?";
}

UnaryFn unary_fn_from_name(const std::string& name) {
    std::string n = name;
    if (n.rfind("arc", 0) == 0) n = "a" + n.substr(3);
    static const std::pair<const char*, UnaryFn> table[] = {
        {"exp", UnaryFn::Exp},   {"ln", UnaryFn::Ln},     {"log", UnaryFn::Ln},
        {"sqrt", UnaryFn::Sqrt}, {"sin", UnaryFn::Sin},   {"cos", UnaryFn::Cos},
        {"tan", UnaryFn::Tan},   {"csc", UnaryFn::Csc},   {"sec", UnaryFn::Sec},
        {"cot", UnaryFn::Cot},   {"sinh", UnaryFn::Sinh}, {"cosh", UnaryFn::Cosh},
        {"tanh", UnaryFn::Tanh}, {"coth", UnaryFn::Coth}, {"asin", UnaryFn::Asin},
        {"acos", UnaryFn::Acos}, {"atan", UnaryFn::Atan}, {"acot", UnaryFn::Acot},
        {"asec", UnaryFn::Asec}, {"acsc", UnaryFn::Acsc},
    };
    for (const auto& [k, v] : table)
        if (n == k) return v;
    throw Error("unknown function name: " + name);
}

BallReal apply(UnaryFn fn, const BallReal& a, Prec prec) {
    prec = clamp_prec(prec);
    if (a.is_whole_line()) {
        switch (fn) {
        case UnaryFn::Sin:
        case UnaryFn::Cos:
        case UnaryFn::Tanh:
            return unit_range_ball(prec);
        case UnaryFn::Atan: { // range (-pi/2, pi/2)
            detail::Fr hp(wp(prec)), nhp(wp(prec));
            mpfr_const_pi(hp, MPFR_RNDU);
            mpfr_div_2ui(hp, hp, 1, MPFR_RNDU);
            mpfr_neg(nhp, hp, MPFR_RNDN);
            return BallReal::from_endpoints(nhp, hp, prec);
        }
        case UnaryFn::Acot: { // range (0, pi)
            detail::Fr pi_hi(wp(prec)), zero(8);
            mpfr_const_pi(pi_hi, MPFR_RNDU);
            mpfr_set_zero(zero, 1);
            return BallReal::from_endpoints(zero, pi_hi, prec);
        }
        default:
            throw DomainViolation(std::string(unary_fn_name(fn)) +
                                  " of the whole-line ball");
        }
    }
    switch (fn) {
    case UnaryFn::Exp:
        return endpoint_increasing(mpfr_exp, a, prec);
    case UnaryFn::Ln:
        if (a.lower_q() <= 0)
            throw DomainViolation("ln requires ball strictly inside (0, inf)");
        return endpoint_increasing(mpfr_log, a, prec);
    case UnaryFn::Sqrt:
        if (a.lower_q() < 0)
            throw DomainViolation("sqrt requires nonnegative ball");
        return endpoint_increasing(mpfr_sqrt, a, prec);
    case UnaryFn::Sin:
        return sin_cos_kernel(a, prec, true);
    case UnaryFn::Cos:
        return sin_cos_kernel(a, prec, false);
    case UnaryFn::Tan:
        return tan_cot_kernel(a, prec, true);
    case UnaryFn::Cot:
        return tan_cot_kernel(a, prec, false);
    case UnaryFn::Csc: {
        BallReal s = sin_cos_kernel(a, prec + 8, true);
        if (s.contains_zero()) throw DomainViolation("csc pole may lie inside argument ball");
        return div(BallReal::exact_int(1, prec), s, prec);
    }
    case UnaryFn::Sec: {
        BallReal c = sin_cos_kernel(a, prec + 8, false);
        if (c.contains_zero()) throw DomainViolation("sec pole may lie inside argument ball");
        return div(BallReal::exact_int(1, prec), c, prec);
    }
    case UnaryFn::Sinh:
        return endpoint_increasing(mpfr_sinh, a, prec);
    case UnaryFn::Cosh:
        return cosh_kernel(a, prec);
    case UnaryFn::Tanh:
        return endpoint_increasing(mpfr_tanh, a, prec);
    case UnaryFn::Coth:
        return coth_kernel(a, prec);
    case UnaryFn::Asin:
        require_unit_domain(a, "asin");
        return endpoint_increasing(mpfr_asin, a, prec);
    case UnaryFn::Acos:
        require_unit_domain(a, "acos");
        return endpoint_decreasing(mpfr_acos, a, prec);
    case UnaryFn::Atan:
        return endpoint_increasing(mpfr_atan, a, prec);
    case UnaryFn::Acot:
        return acot_kernel(a, prec);
    case UnaryFn::Asec:
        return apply(UnaryFn::Acos, reciprocal_into_unit(a, prec + 8, "asec"), prec);
    case UnaryFn::Acsc:
        return apply(UnaryFn::Asin, reciprocal_into_unit(a, prec + 8, "acsc"), prec);
    }
    throw Error("unreachable");
}

// ---------------------------------------------------------------------------
// nonzero refinement

NonzeroOutcome refine_nonzero(const BallReal& a,
                              const std::function<BallReal(Prec)>& refiner,
                              int max_doublings) {
    if (a.excludes_zero()) return {NonzeroResult::Nonzero, a.prec()};
    if (a.is_exact()) return {NonzeroResult::Zero, a.prec()};
    Prec p = kRefineStartPrec;
    for (int i = 0; i < max_doublings; ++i) {
        p = std::min<Prec>(p * 2, kRefineMaxPrec);
        BallReal b = refiner(p);
        if (b.excludes_zero()) return {NonzeroResult::Nonzero, p};
        if (b.is_exact()) return {NonzeroResult::Zero, p};
        if (p >= kRefineMaxPrec) break;
    }
    return {NonzeroResult::Undecided, p};
}

NonzeroOutcome refine_nonzero(const BallComplex& a,
                              const std::function<BallComplex(Prec)>& refiner,
                              int max_doublings) {
    if (a.excludes_zero()) return {NonzeroResult::Nonzero, a.prec()};
    if (a.is_exact()) return {NonzeroResult::Zero, a.prec()};
    Prec p = kRefineStartPrec;
    for (int i = 0; i < max_doublings; ++i) {
        p = std::min<Prec>(p * 2, kRefineMaxPrec);
        BallComplex b = refiner(p);
        if (b.excludes_zero()) return {NonzeroResult::Nonzero, p};
        if (b.is_exact()) return {NonzeroResult::Zero, p};
        if (p >= kRefineMaxPrec) break;
    }
    return {NonzeroResult::Undecided, p};
}

} // namespace certeq
