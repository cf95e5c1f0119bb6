#pragma once

#include "olines/cyclotomic.hpp"
#include "olines/gaussian.hpp"

#include <complex>
#include <concepts>

namespace olines {

// Double-precision complex numbers model the same free-function surface so the
// cancellation functionals can run on Sinkhorn output.
inline bool is_zero(const std::complex<double>& z) { return z == std::complex<double>{}; }
inline std::complex<double> conj(const std::complex<double>& z) { return std::conj(z); }
inline int real_sign(const std::complex<double>& z) { return (z.real() > 0) - (z.real() < 0); }
inline std::complex<double> to_complex(const std::complex<double>& z) { return z; }

/// The seam between the geometry and the number field it runs over: an exact
/// field closed under complex conjugation, with decidable zero and decidable
/// sign of the real part.
template <class F>
concept ComplexField = std::regular<F> && requires(const F a, const F b) {
    F(0);
    F(1);
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { is_zero(a) } -> std::same_as<bool>;
    { conj(a) } -> std::convertible_to<F>;
    { real_sign(a) } -> std::same_as<int>;
    { to_complex(a) } -> std::same_as<std::complex<double>>;
};

template <class F>
concept ExactField = ComplexField<F> && !std::same_as<F, std::complex<double>>;

/// |a|^2 as a field element (its imaginary part is exactly zero).
template <ComplexField F>
F norm2(const F& a) {
    return a * conj(a);
}

static_assert(ExactField<GaussianRational>);
static_assert(ExactField<Cyclotomic>);
static_assert(ComplexField<std::complex<double>>);

}  // namespace olines
