#pragma once

// Scalar backends for the polytope pipeline. Three modes:
//   Rational   -- exact GMP rationals, for shapes with rational Bloch coordinates
//   Golden     -- exact quadratic ring Q[phi] with phi^2 = phi + 1, for the
//                 icosahedron/dodecahedron family (golden-ratio coordinates)
//   double     -- tolerance arithmetic for custom shapes
// All exact-geometry code is templated on the scalar and dispatches zero tests
// and sign computations through these helpers.

#include <cmath>
#include <cstdint>
#include <string>
#include <gmpxx.h>

namespace ncbell {

using Rational = mpq_class;

inline Rational rational_from_double(double x) {
    Rational q;
    mpq_set_d(q.get_mpq_t(), x);  // exact: doubles are dyadic rationals
    return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

// value = a + b*phi with phi = (1+sqrt5)/2, so phi^2 = phi + 1
class Golden {
  public:
    Golden() : a_(0), b_(0) {}
    Golden(long v) : a_(v), b_(0) {}  // NOLINT(google-explicit-constructor)
    Golden(Rational a) : a_(std::move(a)), b_(0) {}  // NOLINT
    Golden(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static Golden phi() { return Golden(Rational(0), Rational(1)); }

    const Rational& rat_part() const { return a_; }
    const Rational& phi_part() const { return b_; }

    Golden operator-() const { return Golden(-a_, -b_); }
    Golden& operator+=(const Golden& o) { a_ += o.a_; b_ += o.b_; return *this; }
    Golden& operator-=(const Golden& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    Golden& operator*=(const Golden& o) {
        // (a1 + b1 p)(a2 + b2 p) = a1 a2 + b1 b2 + (a1 b2 + a2 b1 + b1 b2) p
        Rational na = a_ * o.a_ + b_ * o.b_;
        Rational nb = a_ * o.b_ + b_ * o.a_ + b_ * o.b_;
        a_ = std::move(na);
        b_ = std::move(nb);
        return *this;
    }
    Golden inverse() const {
        // conjugate root is 1 - phi; field norm N = a^2 + a b - b^2
        Rational n = a_ * a_ + a_ * b_ - b_ * b_;
        return Golden((a_ + b_) / n, -b_ / n);
    }
    Golden& operator/=(const Golden& o) { return *this *= o.inverse(); }

    friend Golden operator+(Golden l, const Golden& r) { return l += r; }
    friend Golden operator-(Golden l, const Golden& r) { return l -= r; }
    friend Golden operator*(Golden l, const Golden& r) { return l *= r; }
    friend Golden operator/(Golden l, const Golden& r) { return l /= r; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    // sign of (2a+b)/2 + (b/2) sqrt5
    int sign() const {
        Rational u = 2 * a_ + b_;
        const Rational& v = b_;
        int su = sgn(u), sv = sgn(v);
        if (su == sv) return su;
        if (su == 0) return sv;
        if (sv == 0) return su;
        // opposite signs: compare u^2 with 5 v^2
        int c = cmp(u * u, 5 * v * v);
        return c == 0 ? 0 : (c > 0 ? su : sv);
    }

    friend bool operator==(const Golden& l, const Golden& r) {
        return l.a_ == r.a_ && l.b_ == r.b_;
    }
    friend bool operator!=(const Golden& l, const Golden& r) { return !(l == r); }
    friend bool operator<(const Golden& l, const Golden& r) { return (l - r).sign() < 0; }
    friend bool operator>(const Golden& l, const Golden& r) { return (l - r).sign() > 0; }
    friend bool operator<=(const Golden& l, const Golden& r) { return (l - r).sign() <= 0; }
    friend bool operator>=(const Golden& l, const Golden& r) { return (l - r).sign() >= 0; }

  private:
    Rational a_, b_;
};

inline double to_double(const Golden& g) {
    static const double kPhi = (std::sqrt(5.0) + 1.0) / 2.0;
    return g.rat_part().get_d() + g.phi_part().get_d() * kPhi;
}

inline std::string to_string(const Golden& g) {
    if (g.phi_part() == 0) return g.rat_part().get_str();
    return g.rat_part().get_str() + "+" + g.phi_part().get_str() + "*phi";
}

// ---- uniform scalar operations -------------------------------------------

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
    static constexpr bool exact = true;
    static bool is_zero(const Rational& v) { return v == 0; }
    static int sign(const Rational& v) { return sgn(v); }
    static Rational abs(const Rational& v) { return ::abs(v); }
};

template <>
struct ScalarOps<Golden> {
    static constexpr bool exact = true;
    static bool is_zero(const Golden& v) { return v.is_zero(); }
    static int sign(const Golden& v) { return v.sign(); }
    static Golden abs(const Golden& v) { return v.sign() < 0 ? -v : v; }
};

template <>
struct ScalarOps<double> {
    static constexpr bool exact = false;
    static constexpr double eps = 1e-10;
    static bool is_zero(double v) { return std::fabs(v) < eps; }
    static int sign(double v) { return v > eps ? 1 : (v < -eps ? -1 : 0); }
    static double abs(double v) { return std::fabs(v); }
};

}  // namespace ncbell
