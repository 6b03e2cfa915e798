#include "certeq/ball.hpp"

namespace certeq {

namespace {

BallReal half_pi_ball(Prec prec) {
    detail::Fr lo(prec + 16), hi(prec + 16);
    mpfr_const_pi(lo, MPFR_RNDD);
    mpfr_const_pi(hi, MPFR_RNDU);
    mpfr_div_2ui(lo, lo, 1, MPFR_RNDD);
    mpfr_div_2ui(hi, hi, 1, MPFR_RNDU);
    return BallReal::from_endpoints(lo, hi, prec);
}

BallReal half_ball(Prec prec) {
    return BallReal::from_rational(mpq_class(1, 2), prec);
}

// i*z and -i*z are exact rotations of the rectangle.
BallComplex mul_i(const BallComplex& z) {
    return BallComplex(neg(z.im()), z.re());
}

BallComplex mul_neg_i(const BallComplex& z) {
    return BallComplex(z.im(), neg(z.re()));
}

BallComplex scale(const BallComplex& z, const BallReal& s, Prec prec) {
    return BallComplex(mul(z.re(), s, prec), mul(z.im(), s, prec));
}

BallComplex complex_one(Prec prec) { return BallComplex::exact_int(1, 0, prec); }

// |z|^2 as a real ball; lower bound positive iff the rectangle excludes 0.
BallReal abs2_ball(const BallComplex& a, Prec prec) {
    return add(pow_int(a.re(), 2, prec), pow_int(a.im(), 2, prec), prec);
}

} // namespace

BallComplex BallComplex::from_real(const BallReal& re) {
    return BallComplex(re, BallReal::exact_int(0, re.prec()));
}

BallComplex BallComplex::exact_int(long re, long im, Prec prec) {
    return BallComplex(BallReal::exact_int(re, prec), BallReal::exact_int(im, prec));
}

BallComplex BallComplex::from_rationals(const mpq_class& re, const mpq_class& im,
                                        Prec prec) {
    return BallComplex(BallReal::from_rational(re, prec),
                       BallReal::from_rational(im, prec));
}

BallComplex add(const BallComplex& a, const BallComplex& b, Prec prec) {
    return BallComplex(add(a.re(), b.re(), prec), add(a.im(), b.im(), prec));
}

BallComplex sub(const BallComplex& a, const BallComplex& b, Prec prec) {
    return BallComplex(sub(a.re(), b.re(), prec), sub(a.im(), b.im(), prec));
}

BallComplex mul(const BallComplex& a, const BallComplex& b, Prec prec) {
    BallReal ac = mul(a.re(), b.re(), prec);
    BallReal bd = mul(a.im(), b.im(), prec);
    BallReal ad = mul(a.re(), b.im(), prec);
    BallReal bc = mul(a.im(), b.re(), prec);
    return BallComplex(sub(ac, bd, prec), add(ad, bc, prec));
}

BallComplex div(const BallComplex& a, const BallComplex& b, Prec prec) {
    if (b.contains_zero()) throw DivisorMayBeZero("complex divisor ball contains 0");
    const Prec w = prec + 16;
    BallReal den = abs2_ball(b, w);
    // (a*conj(b)) / |b|^2
    BallReal re_num = add(mul(a.re(), b.re(), w), mul(a.im(), b.im(), w), w);
    BallReal im_num = sub(mul(a.im(), b.re(), w), mul(a.re(), b.im(), w), w);
    return BallComplex(div(re_num, den, prec), div(im_num, den, prec));
}

BallComplex neg(const BallComplex& a) {
    return BallComplex(neg(a.re()), neg(a.im()));
}

BallComplex conj_ball(const BallComplex& a) {
    return BallComplex(a.re(), neg(a.im()));
}

BallComplex pow_int(const BallComplex& a, long k, Prec prec) {
    if (k == 0) return complex_one(prec);
    if (k < 0)
        return div(complex_one(prec), pow_int(a, -k, prec), prec);
    if (a.is_real()) {
        return BallComplex::from_real(pow_int(a.re(), k, prec));
    }
    const Prec w = prec + 32;
    BallComplex acc = complex_one(w);
    BallComplex base = a;
    unsigned long e = static_cast<unsigned long>(k);
    while (e) {
        if (e & 1) acc = mul(acc, base, w);
        e >>= 1;
        if (e) base = mul(base, base, w);
    }
    return round_to(acc, prec);
}

BallComplex round_to(const BallComplex& a, Prec prec) {
    return BallComplex(round_to(a.re(), prec), round_to(a.im(), prec));
}

BallReal abs_ball(const BallComplex& a, Prec prec) {
    return apply(UnaryFn::Sqrt, abs2_ball(a, prec + 16), prec);
}

BallReal arg_ball(const BallComplex& a, Prec prec) {
    const Prec w = prec + 16;
    const BallReal& x = a.re();
    const BallReal& y = a.im();
    if (a.contains_zero())
        throw DomainViolation("arg of a ball containing 0");
    if (x.sign() > 0) {
        return apply(UnaryFn::Atan, div(y, x, w), prec);
    }
    if (y.sign() > 0) {
        BallReal t = apply(UnaryFn::Atan, div(x, y, w), w);
        return sub(half_pi_ball(w), t, prec);
    }
    if (y.sign() < 0) {
        BallReal t = apply(UnaryFn::Atan, div(x, y, w), w);
        return sub(neg(half_pi_ball(w)), t, prec);
    }
    throw BranchCutStraddle("argument rectangle straddles the negative real axis");
}

BallComplex apply(UnaryFn fn, const BallComplex& a, Prec prec) {
    const Prec w = prec + 16;
    // exact-real rectangles route through the real kernels so realness is
    // preserved exactly
    if (a.is_real()) {
        switch (fn) {
        case UnaryFn::Ln:
            if (a.re().sign() < 0) {
                // strictly negative real axis: ln|x| + i*pi on the principal branch
                BallReal lnabs = apply(UnaryFn::Ln, neg(a.re()), prec);
                detail::Fr plo(w), phi(w);
                mpfr_const_pi(plo, MPFR_RNDD);
                mpfr_const_pi(phi, MPFR_RNDU);
                return BallComplex(lnabs, BallReal::from_endpoints(plo, phi, prec));
            }
            [[fallthrough]];
        default:
            try {
                return BallComplex::from_real(apply(fn, a.re(), prec));
            } catch (const DomainViolation&) {
                // fall through to the complex formulas (e.g. sqrt of a
                // negative real, asin outside [-1,1])
                if (fn == UnaryFn::Exp || fn == UnaryFn::Sin || fn == UnaryFn::Cos ||
                    fn == UnaryFn::Sinh || fn == UnaryFn::Cosh || fn == UnaryFn::Atan)
                    throw;
                break;
            }
        }
    }
    switch (fn) {
    case UnaryFn::Exp: {
        BallReal ex = apply(UnaryFn::Exp, a.re(), w);
        BallReal c = apply(UnaryFn::Cos, a.im(), w);
        BallReal s = apply(UnaryFn::Sin, a.im(), w);
        return BallComplex(mul(ex, c, prec), mul(ex, s, prec));
    }
    case UnaryFn::Ln: {
        BallReal theta = arg_ball(a, prec); // also performs the cut/zero checks
        BallReal a2 = abs2_ball(a, w);
        BallReal r = mul(apply(UnaryFn::Ln, a2, w), half_ball(w), prec);
        return BallComplex(r, theta);
    }
    case UnaryFn::Sqrt: {
        BallComplex l = apply(UnaryFn::Ln, a, w);
        return apply(UnaryFn::Exp, scale(l, half_ball(w), w), prec);
    }
    case UnaryFn::Sin: {
        BallReal sx = apply(UnaryFn::Sin, a.re(), w);
        BallReal cx = apply(UnaryFn::Cos, a.re(), w);
        BallReal chy = apply(UnaryFn::Cosh, a.im(), w);
        BallReal shy = apply(UnaryFn::Sinh, a.im(), w);
        return BallComplex(mul(sx, chy, prec), mul(cx, shy, prec));
    }
    case UnaryFn::Cos: {
        BallReal sx = apply(UnaryFn::Sin, a.re(), w);
        BallReal cx = apply(UnaryFn::Cos, a.re(), w);
        BallReal chy = apply(UnaryFn::Cosh, a.im(), w);
        BallReal shy = apply(UnaryFn::Sinh, a.im(), w);
        return BallComplex(mul(cx, chy, prec), neg(mul(sx, shy, prec)));
    }
    case UnaryFn::Tan:
        return div(apply(UnaryFn::Sin, a, w), apply(UnaryFn::Cos, a, w), prec);
    case UnaryFn::Csc:
        return div(complex_one(w), apply(UnaryFn::Sin, a, w), prec);
    case UnaryFn::Sec:
        return div(complex_one(w), apply(UnaryFn::Cos, a, w), prec);
    case UnaryFn::Cot:
        return div(apply(UnaryFn::Cos, a, w), apply(UnaryFn::Sin, a, w), prec);
    case UnaryFn::Sinh: {
        BallReal shx = apply(UnaryFn::Sinh, a.re(), w);
        BallReal chx = apply(UnaryFn::Cosh, a.re(), w);
        BallReal cy = apply(UnaryFn::Cos, a.im(), w);
        BallReal sy = apply(UnaryFn::Sin, a.im(), w);
        return BallComplex(mul(shx, cy, prec), mul(chx, sy, prec));
    }
    case UnaryFn::Cosh: {
        BallReal shx = apply(UnaryFn::Sinh, a.re(), w);
        BallReal chx = apply(UnaryFn::Cosh, a.re(), w);
        BallReal cy = apply(UnaryFn::Cos, a.im(), w);
        BallReal sy = apply(UnaryFn::Sin, a.im(), w);
        return BallComplex(mul(chx, cy, prec), mul(shx, sy, prec));
    }
    case UnaryFn::Tanh:
        return div(apply(UnaryFn::Sinh, a, w), apply(UnaryFn::Cosh, a, w), prec);
    case UnaryFn::Coth:
        return div(apply(UnaryFn::Cosh, a, w), apply(UnaryFn::Sinh, a, w), prec);
    case UnaryFn::Asin: {
        // -i ln(iz + sqrt(1 - z^2))
        BallComplex z2 = pow_int(a, 2, w);
        BallComplex rad = apply(UnaryFn::Sqrt, sub(complex_one(w), z2, w), w);
        BallComplex l = apply(UnaryFn::Ln, add(mul_i(a), rad, w), w);
        return round_to(mul_neg_i(l), prec);
    }
    case UnaryFn::Acos: {
        BallComplex as = apply(UnaryFn::Asin, a, w);
        return sub(BallComplex::from_real(half_pi_ball(w)), as, prec);
    }
    case UnaryFn::Atan: {
        // -(i/2) ln((1+iz)/(1-iz))
        BallComplex iz = mul_i(a);
        BallComplex num = add(complex_one(w), iz, w);
        BallComplex den = sub(complex_one(w), iz, w);
        BallComplex l = apply(UnaryFn::Ln, div(num, den, w), w);
        return scale(mul_neg_i(l), half_ball(w), prec);
    }
    case UnaryFn::Acot: {
        BallComplex at = apply(UnaryFn::Atan, a, w);
        return sub(BallComplex::from_real(half_pi_ball(w)), at, prec);
    }
    case UnaryFn::Asec:
        return apply(UnaryFn::Acos, div(complex_one(w), a, w), prec);
    case UnaryFn::Acsc:
        return apply(UnaryFn::Asin, div(complex_one(w), a, w), prec);
    }
    throw Error("unreachable");
}

} // namespace certeq
