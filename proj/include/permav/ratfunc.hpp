#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "permav/errors.hpp"

namespace permav {

/// Dense univariate polynomial over the integers, coefficients ascending by
/// degree, normalized with no trailing zeros. The zero polynomial is the
/// empty coefficient sequence.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<mpz_class> coeffs);
    Poly(std::initializer_list<long> coeffs);
    static Poly constant(const mpz_class& c);
    static Poly x();

    const std::vector<mpz_class>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    mpz_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }
    const mpz_class& leading() const;

    bool operator==(const Poly&) const = default;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const mpz_class& k) const;

    mpz_class eval(const mpz_class& x) const;

private:
    void normalize();
    std::vector<mpz_class> c_;
};

/// Quotient and remainder over the rationals are not closed over Z[x]; this
/// divmod requires the division to stay integral at each step and is used
/// where exactness is known (Bareiss pivots, gcd cofactors). Throws on
/// division by zero.
struct PolyDivMod {
    Poly quotient;
    Poly remainder;
};
PolyDivMod poly_divmod(const Poly& a, const Poly& b);

/// Exact division; throws InvalidArgumentError if the remainder is nonzero.
Poly poly_exact_div(const Poly& a, const Poly& b);

mpz_class poly_content(const Poly& a);
Poly poly_primitive_part(const Poly& a);

/// GCD via a primitive pseudo-remainder sequence; result is primitive with a
/// positive leading coefficient (times the gcd of the contents).
Poly poly_gcd(const Poly& a, const Poly& b);

/// Ascending-power rendering with explicit '*' and '^': "1 - 4*x + x^2".
std::string to_string(const Poly& p);

/// Reduced quotient of two integer polynomials. Canonical form: numerator
/// and denominator coprime as polynomials and with coprime contents, and the
/// denominator sign-normalized (positive constant term when nonzero,
/// otherwise positive lowest nonzero coefficient).
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Poly::constant(1)) {}
    RationalFunction(Poly num, Poly den);
    static RationalFunction constant(long k) {
        return RationalFunction(Poly::constant(k), Poly::constant(1));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool operator==(const RationalFunction&) const = default;

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;

private:
    Poly num_, den_;
};

/// "(num) / (den)"
std::string to_string(const RationalFunction& f);

/// Counting sequence indexed by permutation length.
using Series = std::vector<mpz_class>;

std::string to_string(const Series& s);  // "1,1,2,6,22"

/// Taylor coefficients of f through order n_max, by the linear recurrence
/// read off the denominator. Throws when the denominator's constant term is
/// zero (not a power series) or a coefficient is not an integer.
Series series_from_gf(const RationalFunction& f, int n_max);

/// Determinant of a square polynomial matrix by fraction-free (Bareiss)
/// elimination with full pivoting on the lowest-degree nonzero entry.
Poly bareiss_determinant(std::vector<std::vector<Poly>> m);

}  // namespace permav
