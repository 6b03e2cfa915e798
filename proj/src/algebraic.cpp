#include "certeq/algebraic.hpp"

#include <algorithm>

#include "certeq/winding_core.hpp"

namespace certeq {

namespace {

constexpr unsigned long kSurdFactorBound = 1000000;

// Extracts the largest square divisor found by trial division up to the
// factor bound: n = s^2 * rest.
void extract_square_part(mpz_class n, mpz_class& s, mpz_class& rest) {
    s = 1;
    rest = 1;
    for (unsigned long p = 2; p <= kSurdFactorBound && n > 1;
         p = (p == 2 ? 3 : p + 2)) {
        if (mpz_class(p) * p > n) break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        for (unsigned i = 0; i < e / 2; ++i) s *= p;
        if (e % 2 == 1) rest *= p;
    }
    if (n > 1) {
        if (mpz_perfect_square_p(n.get_mpz_t())) {
            mpz_class r;
            mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
            s *= r;
        } else {
            rest *= n;
        }
    }
}

// Complete factorization into primes; returns false when a cofactor beyond
// the trial bound is not (probably) prime.
bool factorize(mpz_class n, std::vector<std::pair<mpz_class, unsigned>>& out) {
    out.clear();
    if (n < 0) n = -n;
    if (n <= 1) return true;
    for (unsigned long p = 2; p <= kSurdFactorBound && n > 1;
         p = (p == 2 ? 3 : p + 2)) {
        if (mpz_class(p) * p > n) break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        if (e) out.emplace_back(p, e);
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
            out.emplace_back(n, 1);
        } else {
            return false;
        }
    }
    return true;
}

void divisors_rec(const std::vector<std::pair<mpz_class, unsigned>>& f, std::size_t i,
                  mpz_class cur, std::vector<mpz_class>& out) {
    if (i == f.size()) {
        out.push_back(cur);
        return;
    }
    mpz_class m = cur;
    for (unsigned e = 0; e <= f[i].second; ++e) {
        divisors_rec(f, i + 1, m, out);
        m *= f[i].first;
    }
}

std::vector<mpz_class> all_divisors(const mpz_class& n) {
    std::vector<std::pair<mpz_class, unsigned>> f;
    if (!factorize(n, f)) throw Error("coefficient too large to factor for root scan");
    std::vector<mpz_class> out;
    divisors_rec(f, 0, 1, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string q_to_string(const mpq_class& q) {
    return q.get_str();
}

} // namespace

mpq_class int_poly_eval_q(const std::vector<mpz_class>& coeffs, const mpq_class& x) {
    mpq_class acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + mpq_class(*it);
    return acc;
}

std::vector<mpq_class> int_poly_rational_roots(const std::vector<mpz_class>& coeffs) {
    std::vector<mpq_class> roots;
    if (coeffs.empty()) return roots;
    // strip trailing zero coefficients of x^0: x = 0 root
    std::size_t low = 0;
    while (low < coeffs.size() && coeffs[low] == 0) ++low;
    if (low == coeffs.size()) return roots; // zero polynomial: not handled here
    if (low > 0) roots.emplace_back(0);
    std::vector<mpz_class> c(coeffs.begin() + low, coeffs.end());
    if (c.size() < 2) return roots;
    auto ps = all_divisors(c.front());
    auto qs = all_divisors(c.back());
    for (const auto& p : ps) {
        for (const auto& q : qs) {
            for (int s : {1, -1}) {
                mpq_class cand(s * p, q);
                cand.canonicalize();
                if (int_poly_eval_q(c, cand) == 0) roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// ---------------------------------------------------------------------------
// AlgebraicNumber

AlgebraicNumber AlgebraicNumber::from_rational(const mpq_class& q) {
    AlgebraicNumber a;
    mpq_class v = q;
    v.canonicalize();
    a.v_ = v;
    return a;
}

AlgebraicNumber AlgebraicNumber::make_surd(const mpq_class& a, const mpq_class& b,
                                           const mpz_class& d) {
    if (d < 0) throw Error("surd radicand must be nonnegative");
    if (b == 0 || d == 0) return from_rational(a);
    mpz_class s, rest;
    extract_square_part(d, s, rest);
    if (rest == 1) return from_rational(a + b * mpq_class(s));
    AlgebraicNumber out;
    SurdData sd;
    sd.a = a;
    sd.a.canonicalize();
    sd.b = b * mpq_class(s);
    sd.b.canonicalize();
    sd.d = rest;
    out.v_ = sd;
    return out;
}

AlgebraicNumber AlgebraicNumber::sqrt_of(const mpz_class& n) {
    return make_surd(0, 1, n);
}

std::optional<AlgebraicNumber> AlgebraicNumber::make_poly_root(
    std::vector<mpz_class> coeffs, const mpq_class& re_lo, const mpq_class& re_hi,
    const mpq_class& im_lo, const mpq_class& im_hi, Prec verify_prec) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.size() < 2) return std::nullopt;
    // Rejected when a rational root exists anywhere: is_irrational would not
    // be decidable by the rational-root scan.
    if (!int_poly_rational_roots(coeffs).empty()) return std::nullopt;
    RatRect rect{re_lo, re_hi, im_lo, im_hi};
    if (!rect.valid()) return std::nullopt;
    auto eval = [&coeffs](const BallComplex& z, Prec p) {
        BallComplex acc = BallComplex::exact_int(0, 0, p);
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
            acc = mul(acc, z, p);
            acc = add(acc, BallComplex::from_rationals(mpq_class(*it), 0, p), p);
        }
        return acc;
    };
    int w;
    try {
        w = winding_number_fn(eval, rect, verify_prec);
    } catch (const Error&) {
        return std::nullopt;
    }
    if (w != 1) return std::nullopt;
    PolyRootData pd;
    pd.coeffs = std::move(coeffs);
    pd.re_lo = re_lo;
    pd.re_hi = re_hi;
    pd.im_lo = im_lo;
    pd.im_hi = im_hi;
    pd.real = (im_lo == -im_hi);
    AlgebraicNumber out;
    out.v_ = pd;
    return out;
}

AlgebraicNumber::Kind AlgebraicNumber::kind() const {
    if (std::holds_alternative<mpq_class>(v_)) return Kind::Rational;
    if (std::holds_alternative<SurdData>(v_)) return Kind::Surd;
    return Kind::PolyRoot;
}

bool AlgebraicNumber::is_zero() const {
    return is_rational() && rational() == 0;
}

bool AlgebraicNumber::is_one() const {
    return is_rational() && rational() == 1;
}

std::optional<long> AlgebraicNumber::as_long() const {
    if (!is_rational()) return std::nullopt;
    const mpq_class& q = rational();
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) return std::nullopt;
    return q.get_num().get_si();
}

bool AlgebraicNumber::is_irrational() const {
    switch (kind()) {
    case Kind::Rational: return false;
    case Kind::Surd: return true;
    case Kind::PolyRoot: return true; // construction rejects rational-rooted polys
    }
    return false;
}

bool AlgebraicNumber::is_real() const {
    return kind() != Kind::PolyRoot || poly_root().real;
}

int AlgebraicNumber::sign() const {
    switch (kind()) {
    case Kind::Rational:
        return sgn(rational());
    case Kind::Surd: {
        const SurdData& s = surd();
        // sign of a + b*sqrt(d): compare a^2 and b^2 d when signs differ
        int sa = sgn(s.a), sb = sgn(s.b);
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        mpq_class lhs = s.a * s.a, rhs = s.b * s.b * mpq_class(s.d);
        if (lhs == rhs) return 0; // impossible for nonsquare d, kept for safety
        return (lhs > rhs) ? sa : sb;
    }
    case Kind::PolyRoot: {
        if (!poly_root().real) throw Error("sign of a complex algebraic number");
        for (Prec p = 64; p <= kRefineMaxPrec; p *= 2) {
            BallReal b = to_real_ball(p);
            if (b.excludes_zero()) return b.sign();
        }
        throw Error("sign of poly root undecided within budget");
    }
    }
    return 0;
}

Tri AlgebraicNumber::equals(const AlgebraicNumber& o) const {
    if (kind() == Kind::Rational && o.kind() == Kind::Rational)
        return rational() == o.rational() ? Tri::True : Tri::False;
    if (kind() == Kind::Surd && o.kind() == Kind::Surd) {
        const SurdData& s = surd();
        const SurdData& t = o.surd();
        return (s.a == t.a && s.b == t.b && s.d == t.d) ? Tri::True : Tri::False;
    }
    // rational vs surd: never equal (b != 0 and d nonsquare)
    if ((kind() == Kind::Rational && o.kind() == Kind::Surd) ||
        (kind() == Kind::Surd && o.kind() == Kind::Rational))
        return Tri::False;
    const AlgebraicNumber& pr = kind() == Kind::PolyRoot ? *this : o;
    const AlgebraicNumber& other = kind() == Kind::PolyRoot ? o : *this;
    if (other.kind() != Kind::PolyRoot) {
        // other is rational or surd: it equals the root iff it is a root of
        // the polynomial and lies inside the isolating box
        const auto& pd = pr.poly_root();
        bool is_root = false;
        if (other.kind() == Kind::Rational) {
            is_root = false; // the polynomial has no rational roots
        } else {
            // evaluate in Q(sqrt(d)) by Horner
            AlgebraicNumber acc = AlgebraicNumber::from_rational(0);
            bool ok = true;
            for (auto it = pd.coeffs.rbegin(); it != pd.coeffs.rend(); ++it) {
                auto m = acc.mul(other);
                if (!m) { ok = false; break; }
                auto s = m->add(AlgebraicNumber::from_rational(mpq_class(*it)));
                if (!s) { ok = false; break; }
                acc = *s;
            }
            if (!ok) return Tri::Unknown;
            is_root = acc.is_zero();
        }
        if (!is_root) return Tri::False;
        // membership in the refined box decides equality
        for (Prec p = 64; p <= 4096; p *= 2) {
            BallComplex box = pr.to_ball(p);
            BallComplex val = other.to_ball(p + 16);
            if (!box.overlaps(val)) return Tri::False;
            if (box.contains_box(val)) return Tri::True;
        }
        return Tri::Unknown;
    }
    // two poly roots: refine boxes until disjoint, else Undecided
    for (Prec p = 64; p <= 4096; p *= 2) {
        BallComplex b1 = pr.to_ball(p);
        BallComplex b2 = other.to_ball(p);
        if (!b1.overlaps(b2)) return Tri::False;
    }
    return Tri::Unknown;
}

AlgebraicNumber AlgebraicNumber::negated() const {
    switch (kind()) {
    case Kind::Rational:
        return from_rational(-rational());
    case Kind::Surd:
        return make_surd(-surd().a, -surd().b, surd().d);
    case Kind::PolyRoot: {
        // negate odd coefficients: q(x) = p(-x), box mirrored
        PolyRootData pd = poly_root();
        for (std::size_t i = 1; i < pd.coeffs.size(); i += 2) pd.coeffs[i] = -pd.coeffs[i];
        std::swap(pd.re_lo, pd.re_hi);
        pd.re_lo = -pd.re_lo;
        pd.re_hi = -pd.re_hi;
        std::swap(pd.im_lo, pd.im_hi);
        pd.im_lo = -pd.im_lo;
        pd.im_hi = -pd.im_hi;
        AlgebraicNumber out;
        out.v_ = pd;
        return out;
    }
    }
    return {};
}

std::optional<AlgebraicNumber> AlgebraicNumber::add(const AlgebraicNumber& o) const {
    if (kind() == Kind::PolyRoot || o.kind() == Kind::PolyRoot) return std::nullopt;
    if (is_rational() && o.is_rational())
        return from_rational(rational() + o.rational());
    if (is_rational()) return make_surd(rational() + o.surd().a, o.surd().b, o.surd().d);
    if (o.is_rational()) return make_surd(surd().a + o.rational(), surd().b, surd().d);
    if (surd().d != o.surd().d) return std::nullopt;
    return make_surd(surd().a + o.surd().a, surd().b + o.surd().b, surd().d);
}

std::optional<AlgebraicNumber> AlgebraicNumber::sub(const AlgebraicNumber& o) const {
    return add(o.negated());
}

std::optional<AlgebraicNumber> AlgebraicNumber::mul(const AlgebraicNumber& o) const {
    if (kind() == Kind::PolyRoot || o.kind() == Kind::PolyRoot) return std::nullopt;
    if (is_rational() && o.is_rational())
        return from_rational(rational() * o.rational());
    if (is_rational())
        return make_surd(rational() * o.surd().a, rational() * o.surd().b, o.surd().d);
    if (o.is_rational())
        return make_surd(surd().a * o.rational(), surd().b * o.rational(), surd().d);
    const SurdData& s = surd();
    const SurdData& t = o.surd();
    if (s.d == t.d) {
        return make_surd(s.a * t.a + s.b * t.b * mpq_class(s.d),
                         s.a * t.b + s.b * t.a, s.d);
    }
    if (s.a == 0 && t.a == 0) {
        // b1*sqrt(d1) * b2*sqrt(d2) = b1*b2*sqrt(d1*d2)
        return make_surd(0, s.b * t.b, s.d * t.d);
    }
    return std::nullopt;
}

std::optional<AlgebraicNumber> AlgebraicNumber::div(const AlgebraicNumber& o) const {
    if (o.is_zero()) throw Error("division of algebraic numbers by zero");
    if (kind() == Kind::PolyRoot || o.kind() == Kind::PolyRoot) return std::nullopt;
    if (o.is_rational()) {
        mpq_class inv = 1 / o.rational();
        if (is_rational()) return from_rational(rational() * inv);
        return make_surd(surd().a * inv, surd().b * inv, surd().d);
    }
    // invert the surd: 1/(a + b sqrt(d)) = (a - b sqrt(d)) / (a^2 - b^2 d)
    const SurdData& t = o.surd();
    mpq_class den = t.a * t.a - t.b * t.b * mpq_class(t.d);
    AlgebraicNumber inv = make_surd(t.a / den, -t.b / den, t.d);
    return mul(inv);
}

BallReal AlgebraicNumber::to_real_ball(Prec prec) const {
    switch (kind()) {
    case Kind::Rational:
        return BallReal::from_rational(rational(), prec);
    case Kind::Surd: {
        const Prec w = prec + 16;
        const SurdData& s = surd();
        BallReal rt = apply(UnaryFn::Sqrt,
                            BallReal::from_rational(mpq_class(s.d), w), w);
        return add(BallReal::from_rational(s.a, w),
                   mul(BallReal::from_rational(s.b, w), rt, w), prec);
    }
    case Kind::PolyRoot: {
        const PolyRootData& pd = poly_root();
        if (!pd.real) throw Error("complex algebraic number used as real");
        // exact-sign bisection, then interval Newton
        mpq_class lo = pd.re_lo, hi = pd.re_hi;
        int slo = sgn(int_poly_eval_q(pd.coeffs, lo));
        int shi = sgn(int_poly_eval_q(pd.coeffs, hi));
        if (slo == 0 || shi == 0 || slo == shi) {
            // endpoint sign pattern unusable (tangency cannot happen for an
            // isolated simple root; endpoints may need nudging)
            throw Error("poly root box endpoints do not bracket");
        }
        while (true) {
            BallReal cur = BallReal::from_rational_interval(lo, hi, prec);
            if (cur.width_below_2exp(-(long)prec + 2)) return cur;
            mpq_class mid = (lo + hi) / 2;
            int sm = sgn(int_poly_eval_q(pd.coeffs, mid));
            if (sm == 0) throw Error("unexpected rational root in poly root box");
            if (sm == slo) lo = mid; else hi = mid;
        }
    }
    }
    throw Error("unreachable");
}

BallComplex AlgebraicNumber::to_ball(Prec prec) const {
    if (kind() != Kind::PolyRoot || poly_root().real)
        return BallComplex::from_real(to_real_ball(prec));
    const PolyRootData& pd = poly_root();
    // complex interval Newton from the stored box
    auto eval_at = [&](const BallComplex& z, Prec p) {
        BallComplex acc = BallComplex::exact_int(0, 0, p);
        for (auto it = pd.coeffs.rbegin(); it != pd.coeffs.rend(); ++it) {
            acc = mul(acc, z, p);
            acc = add(acc, BallComplex::from_rationals(mpq_class(*it), 0, p), p);
        }
        return acc;
    };
    std::vector<mpz_class> dcoeffs;
    for (std::size_t i = 1; i < pd.coeffs.size(); ++i)
        dcoeffs.push_back(mpz_class(i) * pd.coeffs[i]);
    auto eval_d = [&](const BallComplex& z, Prec p) {
        BallComplex acc = BallComplex::exact_int(0, 0, p);
        for (auto it = dcoeffs.rbegin(); it != dcoeffs.rend(); ++it) {
            acc = mul(acc, z, p);
            acc = add(acc, BallComplex::from_rationals(mpq_class(*it), 0, p), p);
        }
        return acc;
    };
    BallComplex box = BallComplex(
        BallReal::from_rational_interval(pd.re_lo, pd.re_hi, prec + 32),
        BallReal::from_rational_interval(pd.im_lo, pd.im_hi, prec + 32));
    const Prec w = prec + 64;
    for (int i = 0; i < 128; ++i) {
        if (box.re().width_below_2exp(-(long)prec + 2) &&
            box.im().width_below_2exp(-(long)prec + 2))
            break;
        BallComplex m(BallReal::from_mpfr(box.re().mid(), w),
                      BallReal::from_mpfr(box.im().mid(), w));
        BallComplex fm = eval_at(m, w);
        BallComplex fd = eval_d(box, w);
        if (fd.contains_zero()) break;
        BallComplex n = sub(m, div(fm, fd, w), w);
        // intersect with the current box componentwise
        mpq_class rlo = std::max(box.re().lower_q(), n.re().lower_q());
        mpq_class rhi = std::min(box.re().upper_q(), n.re().upper_q());
        mpq_class ilo = std::max(box.im().lower_q(), n.im().lower_q());
        mpq_class ihi = std::min(box.im().upper_q(), n.im().upper_q());
        if (rlo > rhi || ilo > ihi) break; // numerical trouble; keep last box
        BallComplex next(BallReal::from_rational_interval(rlo, rhi, w),
                         BallReal::from_rational_interval(ilo, ihi, w));
        box = next;
    }
    return round_to(box, prec);
}

std::string AlgebraicNumber::to_string() const {
    switch (kind()) {
    case Kind::Rational:
        return q_to_string(rational());
    case Kind::Surd: {
        const SurdData& s = surd();
        std::string rt = "sqrt(" + s.d.get_str() + ")";
        std::string bpart;
        if (s.b == 1) bpart = rt;
        else if (s.b == -1) bpart = "-" + rt;
        else bpart = q_to_string(s.b) + "*" + rt;
        if (s.a == 0) return bpart;
        if (s.b > 0) return q_to_string(s.a) + " + " + bpart;
        return q_to_string(s.a) + " - " + (s.b == -1 ? rt : q_to_string(-s.b) + "*" + rt);
    }
    case Kind::PolyRoot: {
        const PolyRootData& pd = poly_root();
        std::string p;
        for (std::size_t i = 0; i < pd.coeffs.size(); ++i) {
            if (pd.coeffs[i] == 0) continue;
            if (!p.empty()) p += " + ";
            p += pd.coeffs[i].get_str();
            if (i == 1) p += "*x";
            else if (i > 1) p += "*x^" + std::to_string(i);
        }
        return "root(" + p + " = 0 near [" + pd.re_lo.get_str() + "," +
               pd.re_hi.get_str() + "]x[" + pd.im_lo.get_str() + "," +
               pd.im_hi.get_str() + "])";
    }
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<AlgebraicNumber> coeffs) : c_(std::move(coeffs)) {
    normalize();
}

void Polynomial::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::constant(const AlgebraicNumber& a) {
    return Polynomial(std::vector<AlgebraicNumber>{a});
}

Polynomial Polynomial::variable() {
    return Polynomial({AlgebraicNumber::from_long(0), AlgebraicNumber::from_long(1)});
}

bool Polynomial::rational_coeffs() const {
    for (const auto& a : c_)
        if (!a.is_rational()) return false;
    return true;
}

bool Polynomial::real_coeffs() const {
    for (const auto& a : c_)
        if (!a.is_real()) return false;
    return true;
}

std::optional<Polynomial> Polynomial::add(const Polynomial& p, const Polynomial& q) {
    std::vector<AlgebraicNumber> out(std::max(p.c_.size(), q.c_.size()),
                                     AlgebraicNumber::from_long(0));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < p.c_.size() && i < q.c_.size()) {
            auto s = p.c_[i].add(q.c_[i]);
            if (!s) return std::nullopt;
            out[i] = *s;
        } else if (i < p.c_.size()) {
            out[i] = p.c_[i];
        } else {
            out[i] = q.c_[i];
        }
    }
    return Polynomial(std::move(out));
}

std::optional<Polynomial> Polynomial::sub(const Polynomial& p, const Polynomial& q) {
    Polynomial nq = q;
    for (auto& a : nq.c_) a = a.negated();
    return add(p, nq);
}

std::optional<Polynomial> Polynomial::mul(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return Polynomial::zero();
    std::vector<AlgebraicNumber> out(p.c_.size() + q.c_.size() - 1,
                                     AlgebraicNumber::from_long(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i) {
        for (std::size_t j = 0; j < q.c_.size(); ++j) {
            auto m = p.c_[i].mul(q.c_[j]);
            if (!m) return std::nullopt;
            auto s = out[i + j].add(*m);
            if (!s) return std::nullopt;
            out[i + j] = *s;
        }
    }
    return Polynomial(std::move(out));
}

std::optional<Polynomial> Polynomial::scaled(const AlgebraicNumber& s) const {
    std::vector<AlgebraicNumber> out;
    out.reserve(c_.size());
    for (const auto& a : c_) {
        auto m = a.mul(s);
        if (!m) return std::nullopt;
        out.push_back(*m);
    }
    return Polynomial(std::move(out));
}

std::optional<Polynomial> Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial::zero();
    std::vector<AlgebraicNumber> out;
    out.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        auto m = c_[i].mul(AlgebraicNumber::from_long(static_cast<long>(i)));
        if (!m) return std::nullopt;
        out.push_back(*m);
    }
    return Polynomial(std::move(out));
}

std::optional<Polynomial> Polynomial::monic() const {
    if (is_zero()) return std::nullopt;
    std::vector<AlgebraicNumber> out;
    out.reserve(c_.size());
    for (const auto& a : c_) {
        auto d = a.div(leading());
        if (!d) return std::nullopt;
        out.push_back(*d);
    }
    return Polynomial(std::move(out));
}

BallComplex Polynomial::eval_ball(const BallComplex& z, Prec prec) const {
    const Prec w = prec + 16;
    BallComplex acc = BallComplex::exact_int(0, 0, w);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = mul(acc, z, w);
        acc = add(acc, it->to_ball(w), w);
    }
    return round_to(acc, prec);
}

BallReal Polynomial::eval_real_ball(const BallReal& x, Prec prec) const {
    const Prec w = prec + 16;
    BallReal acc = BallReal::exact_int(0, w);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = mul(acc, x, w);
        acc = add(acc, it->to_real_ball(w), w);
    }
    return round_to(acc, prec);
}

std::optional<AlgebraicNumber> Polynomial::eval_exact(const AlgebraicNumber& a) const {
    AlgebraicNumber acc = AlgebraicNumber::from_long(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        auto m = acc.mul(a);
        if (!m) return std::nullopt;
        auto s = m->add(*it);
        if (!s) return std::nullopt;
        acc = *s;
    }
    return acc;
}

Tri Polynomial::equals(const Polynomial& o) const {
    if (c_.size() != o.c_.size()) return Tri::False;
    bool unknown = false;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        Tri t = c_[i].equals(o.c_[i]);
        if (t == Tri::False) return Tri::False;
        if (t == Tri::Unknown) unknown = true;
    }
    return unknown ? Tri::Unknown : Tri::True;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string coef = c_[i].to_string();
        if (i == 0) {
            out += coef;
        } else {
            std::string xpow = (i == 1) ? var : var + "^" + std::to_string(i);
            if (c_[i].is_one()) out += xpow;
            else out += "(" + coef + ")*" + xpow;
        }
    }
    return out;
}

} // namespace certeq
