#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

#include "forge/errors.hpp"

namespace forge {

// Exact element of Q(i): re + im*i with arbitrary-precision rational parts.
// mpq_class keeps denominators positive and in lowest terms, so equality is
// plain component comparison.
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long v) : re_(v), im_(0) {}  // NOLINT: implicit by design
    Scalar(long num, long den);
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }
    // Parses "p", "p/q", with optional sign.
    static mpq_class parse_rational(const std::string& s);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar operator+(const Scalar& o) const { return Scalar(re_ + o.re_, im_ + o.im_); }
    Scalar operator-(const Scalar& o) const { return Scalar(re_ - o.re_, im_ - o.im_); }
    Scalar operator*(const Scalar& o) const {
        return Scalar(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    Scalar operator/(const Scalar& o) const { return *this * o.inv(); }
    Scalar& operator+=(const Scalar& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar conj() const { return Scalar(re_, -im_); }
    Scalar inv() const;
    Scalar pow(long e) const;

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    // Canonical text: "3/2", "-1", "1/2*i", "(3/2 + 1/2*i)", "(3/2 - 1/2*i)".
    std::string str() const;

private:
    mpq_class re_, im_;
};

inline Scalar operator*(long k, const Scalar& s) { return Scalar(k) * s; }

}  // namespace forge
