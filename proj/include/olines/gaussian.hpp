#pragma once

#include "olines/rational.hpp"

#include <complex>
#include <stdexcept>
#include <string>

namespace olines {

/// re + im*i with exact rational parts. mpq keeps both parts reduced with a
/// positive denominator after every operation.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    Rational norm2() const { return re_ * re_ + im_ * im_; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        Rational n = o.norm2();
        if (n == 0) throw std::domain_error("GaussianRational: division by zero");
        Rational r = (re_ * o.re_ + im_ * o.im_) / n;
        im_ = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {Rational(-a.re_), Rational(-a.im_)}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    friend bool is_zero(const GaussianRational& a) { return a.re_ == 0 && a.im_ == 0; }
    friend GaussianRational conj(const GaussianRational& a) { return {a.re_, Rational(-a.im_)}; }
    friend int real_sign(const GaussianRational& a) { return sgn(a.re_); }
    friend std::complex<double> to_complex(const GaussianRational& a) {
        return {a.re_.get_d(), a.im_.get_d()};
    }

private:
    Rational re_{0};
    Rational im_{0};
};

/// "a/b", "a/b+c/d i", "c/d i" -- the literal syntax of the config format.
std::string to_string(const GaussianRational& z);

}  // namespace olines
