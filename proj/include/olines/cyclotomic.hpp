#pragma once

#include "olines/gaussian.hpp"
#include "olines/rational.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace olines {

unsigned euler_phi(unsigned n);

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long long>& cyclotomic_polynomial(unsigned n);

namespace detail {
struct CyclotomicContext;
}

/// An element of the cyclotomic field Q(zeta_N), zeta_N = exp(2*pi*i/N), stored
/// in the power basis 1, zeta, ..., zeta^(phi(N)-1) and reduced modulo the N-th
/// cyclotomic polynomial. Elements of different orders combine in
/// Q(zeta_lcm). Rationals live at order 1.
class Cyclotomic {
public:
    Cyclotomic();
    Cyclotomic(long v);                     // NOLINT(google-explicit-constructor)
    Cyclotomic(const Rational& q);          // NOLINT
    Cyclotomic(const GaussianRational& z);  // NOLINT

    /// zeta_order^exponent.
    static Cyclotomic zeta(unsigned order, long exponent = 1);

    /// sum_e coeffs[e] * zeta_order^e; any length, exponents taken mod order.
    static Cyclotomic from_powers(unsigned order, const std::vector<Rational>& coeffs);

    unsigned order() const;
    /// Power-basis coefficients, length phi(order()).
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// The same number written over Q(zeta_target); target must be a multiple of order().
    Cyclotomic lifted(unsigned target) const;

    bool is_rational() const;
    std::optional<Rational> as_rational() const;
    std::optional<GaussianRational> as_gaussian() const;

    Cyclotomic inverse() const;

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    friend Cyclotomic operator-(const Cyclotomic& a);

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    friend bool is_zero(const Cyclotomic& a);
    /// Complex conjugation, zeta -> zeta^-1.
    friend Cyclotomic conj(const Cyclotomic& a);
    /// Sign of the real part. Zero is detected exactly; a nonzero real part
    /// is evaluated in multiprecision until the error bound separates it from 0.
    friend int real_sign(const Cyclotomic& a);
    friend std::complex<double> to_complex(const Cyclotomic& a);

private:
    Cyclotomic(const detail::CyclotomicContext* ctx, std::vector<Rational> coeffs);
    void simplify();

    const detail::CyclotomicContext* ctx_;
    std::vector<Rational> coeffs_;
};

/// "z" means zeta_order. Gaussian syntax when the value lies in Q(i).
std::string to_string(const Cyclotomic& a);
/// Terms "c z^e" over the power basis of Q(zeta_order); order must be a multiple of a.order().
std::string to_string(const Cyclotomic& a, unsigned order);

}  // namespace olines
