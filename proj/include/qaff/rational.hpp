#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qaff {

/// Exact rational number with 64-bit numerator/denominator.
///
/// Used for q-exponents on the spectral lattice and for symmetrizers.
/// Values stay tiny in practice; arithmetic is always reduced, den > 0.
class Rat {
public:
    Rat() = default;
    Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    Rat operator-() const { return Rat(-num_, den_); }
    Rat operator+(const Rat& o) const { return Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
    Rat operator-(const Rat& o) const { return Rat(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
    Rat operator*(const Rat& o) const { return Rat(num_ * o.num_, den_ * o.den_); }
    Rat operator/(const Rat& o) const {
        if (o.num_ == 0) throw std::domain_error("Rat: division by zero");
        return Rat(num_ * o.den_, den_ * o.num_);
    }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return a.num_ * b.den_ < b.num_ * a.den_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("Rat: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    long long num_ = 0;
    long long den_ = 1;
};

} // namespace qaff
