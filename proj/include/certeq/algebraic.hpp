#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "certeq/ball.hpp"

namespace certeq {

enum class Tri { False, True, Unknown };

// Exact representation of the algebraic coefficients appearing in the
// supported equation families: rationals, quadratic surds a + b*sqrt(d),
// and isolated roots of integer polynomials.
class AlgebraicNumber {
public:
    enum class Kind { Rational, Surd, PolyRoot };

    struct SurdData {
        mpq_class a, b;  // value a + b*sqrt(d), b != 0
        mpz_class d;     // positive nonsquare, square factors extracted up to bound
    };

    struct PolyRootData {
        std::vector<mpz_class> coeffs; // low to high, leading nonzero
        // Dyadic box certified (at construction) to hold exactly one root.
        mpq_class re_lo, re_hi, im_lo, im_hi;
        bool real; // box symmetric about the real axis => the unique root is real
    };

    AlgebraicNumber() : v_(mpq_class(0)) {}
    static AlgebraicNumber from_rational(const mpq_class& q);
    static AlgebraicNumber from_long(long n) { return from_rational(mpq_class(n)); }
    // a + b*sqrt(d); canonicalizes (square factors of d, b = 0, d square).
    static AlgebraicNumber make_surd(const mpq_class& a, const mpq_class& b,
                                     const mpz_class& d);
    // sqrt(n) for a nonnegative integer n.
    static AlgebraicNumber sqrt_of(const mpz_class& n);
    // Isolated polynomial root.  Returns nullopt (Rejected) when the
    // polynomial has a rational root, or when the box cannot be certified to
    // contain exactly one root.
    static std::optional<AlgebraicNumber> make_poly_root(
        std::vector<mpz_class> coeffs, const mpq_class& re_lo, const mpq_class& re_hi,
        const mpq_class& im_lo, const mpq_class& im_hi, Prec verify_prec = 128);

    Kind kind() const;
    bool is_rational() const { return kind() == Kind::Rational; }
    const mpq_class& rational() const { return std::get<mpq_class>(v_); }
    const SurdData& surd() const { return std::get<SurdData>(v_); }
    const PolyRootData& poly_root() const { return std::get<PolyRootData>(v_); }

    bool is_zero() const;
    bool is_one() const;
    // Rational with denominator 1 fitting a long.
    std::optional<long> as_long() const;
    bool is_irrational() const;
    bool is_real() const;
    // Exact sign for rationals and surds; sign of a real PolyRoot by box
    // refinement (the value is provably nonzero).  Throws for complex roots.
    int sign() const;

    Tri equals(const AlgebraicNumber& o) const;

    // Exact field operations where the representation is closed
    // (rational <op> rational/surd, surds sharing one radicand, pure surd
    // products).  PolyRoot operands are not combined.
    std::optional<AlgebraicNumber> add(const AlgebraicNumber& o) const;
    std::optional<AlgebraicNumber> sub(const AlgebraicNumber& o) const;
    std::optional<AlgebraicNumber> mul(const AlgebraicNumber& o) const;
    std::optional<AlgebraicNumber> div(const AlgebraicNumber& o) const; // o nonzero
    AlgebraicNumber negated() const;

    BallComplex to_ball(Prec prec) const;
    BallReal to_real_ball(Prec prec) const; // throws for complex roots

    std::string to_string() const;

private:
    std::variant<mpq_class, SurdData, PolyRootData> v_;
};

// Dense polynomial with exact algebraic coefficients, low degree first.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<AlgebraicNumber> coeffs);
    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(const AlgebraicNumber& a);
    static Polynomial variable(); // x

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 when zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const AlgebraicNumber& coeff(std::size_t i) const { return c_[i]; }
    const std::vector<AlgebraicNumber>& coeffs() const { return c_; }
    const AlgebraicNumber& leading() const { return c_.back(); }
    bool rational_coeffs() const;
    bool real_coeffs() const;

    static std::optional<Polynomial> add(const Polynomial& p, const Polynomial& q);
    static std::optional<Polynomial> sub(const Polynomial& p, const Polynomial& q);
    static std::optional<Polynomial> mul(const Polynomial& p, const Polynomial& q);
    std::optional<Polynomial> scaled(const AlgebraicNumber& s) const;
    std::optional<Polynomial> derivative() const;
    // p / lc as a monic polynomial (exact); nullopt when division fails.
    std::optional<Polynomial> monic() const;

    BallComplex eval_ball(const BallComplex& z, Prec prec) const;
    BallReal eval_real_ball(const BallReal& x, Prec prec) const;
    std::optional<AlgebraicNumber> eval_exact(const AlgebraicNumber& a) const;

    // Structural equality; Unknown when PolyRoot coefficients cannot be
    // decided within budget.
    Tri equals(const Polynomial& o) const;

    std::string to_string(const std::string& var = "x") const;

private:
    std::vector<AlgebraicNumber> c_;
    void normalize();
};

// Exact-rational evaluation helpers for integer polynomials.
mpq_class int_poly_eval_q(const std::vector<mpz_class>& coeffs, const mpq_class& x);
// All rational roots of an integer polynomial (rational root theorem scan
// with full factorization of the outer coefficients).
std::vector<mpq_class> int_poly_rational_roots(const std::vector<mpz_class>& coeffs);

} // namespace certeq
