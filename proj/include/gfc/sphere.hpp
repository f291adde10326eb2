#pragma once

#include "gfc/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <ostream>

namespace gfc {

using Complex = std::complex<double>;
using Rational = boost::multiprecision::cpp_rational;

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
    static bool is_zero(const Complex& z) { return z == Complex(0.0, 0.0); }
    static bool near(const Complex& a, const Complex& b, double tol = 1e-12) {
        return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
    }
    static Complex to_complex(const Complex& z) { return z; }
};

template <>
struct ScalarTraits<Rational> {
    static bool is_zero(const Rational& z) { return z == 0; }
    static bool near(const Rational& a, const Rational& b, double = 0) { return a == b; }
    static Complex to_complex(const Rational& z) { return {z.template convert_to<double>(), 0.0}; }
};

// Point of the Riemann sphere; nullopt is infinity.
template <class T>
class SpherePoint {
public:
    SpherePoint() = default;  // infinity
    SpherePoint(T v) : v_(std::move(v)) {}
    static SpherePoint infinity() { return SpherePoint(); }

    bool is_infinity() const { return !v_.has_value(); }
    const T& value() const {
        if (!v_) throw DomainError("point at infinity has no finite value");
        return *v_;
    }

    bool operator==(const SpherePoint& o) const { return v_ == o.v_; }

    bool near(const SpherePoint& o, double tol = 1e-12) const {
        if (is_infinity() || o.is_infinity()) return is_infinity() && o.is_infinity();
        return ScalarTraits<T>::near(*v_, *o.v_, tol);
    }

private:
    std::optional<T> v_;
};

template <class T>
std::ostream& operator<<(std::ostream& os, const SpherePoint<T>& z) {
    if (z.is_infinity()) return os << "inf";
    return os << z.value();
}

// z -> (a z + b)/(c z + d)
template <class T>
class Moebius {
public:
    Moebius(T a, T b, T c, T d) : a_(a), b_(b), c_(c), d_(d) {
        if (ScalarTraits<T>::is_zero(a_ * d_ - b_ * c_)) throw DomainError("degenerate Moebius map");
    }
    static Moebius identity() { return Moebius(T(1), T(0), T(0), T(1)); }

    // Sends z1 -> inf, z2 -> 0, z3 -> 1.
    static Moebius from_three_points(const SpherePoint<T>& z1, const SpherePoint<T>& z2,
                                     const SpherePoint<T>& z3) {
        if (z1.near(z2) || z1.near(z3) || z2.near(z3))
            throw DomainError("three points must be pairwise distinct");
        if (z1.is_infinity()) {
            // (z - z2)/(z3 - z2)
            return Moebius(T(1), -z2.value(), T(0), z3.value() - z2.value());
        }
        if (z2.is_infinity()) {
            // (z3 - z1)/(z - z1)
            return Moebius(T(0), z3.value() - z1.value(), T(1), -z1.value());
        }
        if (z3.is_infinity()) {
            // (z - z2)/(z - z1)
            return Moebius(T(1), -z2.value(), T(1), -z1.value());
        }
        const T& b1 = z1.value();
        const T& b2 = z2.value();
        const T& b3 = z3.value();
        return Moebius(b3 - b1, -b2 * (b3 - b1), b3 - b2, -b1 * (b3 - b2));
    }

    SpherePoint<T> operator()(const SpherePoint<T>& z) const {
        if (z.is_infinity()) {
            if (ScalarTraits<T>::is_zero(c_)) return SpherePoint<T>::infinity();
            return SpherePoint<T>(a_ / c_);
        }
        const T& x = z.value();
        T den = c_ * x + d_;
        if (ScalarTraits<T>::is_zero(den)) return SpherePoint<T>::infinity();
        return SpherePoint<T>((a_ * x + b_) / den);
    }

    Moebius inverse() const { return Moebius(d_, -b_, -c_, a_); }

    // (*this)(o(z))
    Moebius compose(const Moebius& o) const {
        return Moebius(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_,
                       c_ * o.b_ + d_ * o.d_);
    }

    const T& a() const { return a_; }
    const T& b() const { return b_; }
    const T& c() const { return c_; }
    const T& d() const { return d_; }

private:
    T a_, b_, c_, d_;
};

using SpherePointC = SpherePoint<Complex>;
using MoebiusC = Moebius<Complex>;

inline MoebiusC moebius_from_three_points(const SpherePointC& z1, const SpherePointC& z2,
                                          const SpherePointC& z3) {
    return MoebiusC::from_three_points(z1, z2, z3);
}

}  // namespace gfc
