#pragma once

// Exact coefficient arithmetic. Everything in this library is integer or
// rational; there is no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "chow/errors.hpp"

namespace chow {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

/// Residue class with a runtime modulus. A value constructed without a
/// modulus ("unbound", modulus 0) acts as a plain integer literal and picks
/// up the modulus of the first bound operand it meets; this is what lets
/// generic polynomial code write C(0) and C(1) without knowing the modulus.
class Mod {
public:
    Mod() : v_(0), m_(0) {}
    Mod(int v) : v_(v), m_(0) {}
    Mod(Int v) : v_(std::move(v)), m_(0) {}
    Mod(Int v, Int m) : v_(std::move(v)), m_(std::move(m)) {
        if (m_ < 2) throw Error("modulus must be >= 2");
        normalize();
    }

    const Int& value() const { return v_; }
    const Int& modulus() const { return m_; }
    bool bound() const { return m_ != 0; }
    bool is_zero() const { return v_ == 0; }

    friend Mod operator+(const Mod& a, const Mod& b) {
        Int m = joint_modulus(a, b);
        return make(a.v_ + b.v_, m);
    }
    friend Mod operator-(const Mod& a, const Mod& b) {
        Int m = joint_modulus(a, b);
        return make(a.v_ - b.v_, m);
    }
    friend Mod operator*(const Mod& a, const Mod& b) {
        Int m = joint_modulus(a, b);
        return make(a.v_ * b.v_, m);
    }
    Mod operator-() const { return make(-v_, m_); }
    Mod& operator+=(const Mod& o) { return *this = *this + o; }
    Mod& operator-=(const Mod& o) { return *this = *this - o; }
    Mod& operator*=(const Mod& o) { return *this = *this * o; }

    friend bool operator==(const Mod& a, const Mod& b) {
        Int m = joint_modulus(a, b);
        if (m == 0) return a.v_ == b.v_;
        return ((a.v_ - b.v_) % m) == 0;
    }

    /// Multiplicative inverse; requires a bound modulus coprime to the value.
    Mod inverse() const {
        if (!bound()) throw Error("inverse of unbound residue");
        Int g, x, y;
        ext_gcd(v_, m_, g, x, y);
        if (g != 1) throw Error("residue not invertible: gcd(" + v_.str() + ", " + m_.str() + ") != 1");
        return Mod(x, m_);
    }

    std::string str() const { return v_.str(); }

private:
    Int v_, m_;

    void normalize() {
        if (m_ == 0) return;
        v_ %= m_;
        if (v_ < 0) v_ += m_;
    }
    static Mod make(Int v, const Int& m) {
        Mod r;
        r.v_ = std::move(v);
        r.m_ = m;
        r.normalize();
        return r;
    }
    static Int joint_modulus(const Mod& a, const Mod& b) {
        if (a.m_ != 0 && b.m_ != 0 && a.m_ != b.m_)
            throw Error("modulus mismatch: " + a.m_.str() + " vs " + b.m_.str());
        return a.m_ != 0 ? a.m_ : b.m_;
    }
    static void ext_gcd(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
        if (b == 0) { g = a; x = 1; y = 0; return; }
        Int x1, y1;
        ext_gcd(b, a % b, g, x1, y1);
        x = y1;
        y = x1 - (a / b) * y1;
    }
};

// Coefficient helpers used by the generic polynomial rendering code.

inline bool coeff_is_zero(const Int& c) { return c == 0; }
inline bool coeff_is_zero(const Rat& c) { return c == 0; }
inline bool coeff_is_zero(const Mod& c) { return c.is_zero(); }

inline bool coeff_is_one(const Int& c) { return c == 1; }
inline bool coeff_is_one(const Rat& c) { return c == 1; }
inline bool coeff_is_one(const Mod& c) { return c == Mod(1); }

inline bool coeff_is_negative(const Int& c) { return c < 0; }
inline bool coeff_is_negative(const Rat& c) { return c < 0; }
inline bool coeff_is_negative(const Mod&) { return false; }  // residues print as canonical representatives

inline std::string coeff_str(const Int& c) { return c.str(); }
inline std::string coeff_str(const Rat& c) {
    if (boost::multiprecision::denominator(c) == 1)
        return boost::multiprecision::numerator(c).str();
    return boost::multiprecision::numerator(c).str() + "/" + boost::multiprecision::denominator(c).str();
}
inline std::string coeff_str(const Mod& c) { return c.str(); }

} // namespace chow
