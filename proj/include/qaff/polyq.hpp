#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace qaff {

using BigInt = boost::multiprecision::cpp_int;

/// Dense univariate polynomial in q with arbitrary-precision integer
/// coefficients.  coeff(k) is the coefficient of q^k; no trailing zeros.
class Poly {
public:
    Poly() = default;
    Poly(long long c);
    Poly(BigInt c);
    explicit Poly(std::vector<BigInt> coeffs);

    static Poly q_power(long long k);   // k >= 0

    bool is_zero() const { return c_.empty(); }
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }
    const BigInt& coeff(size_t k) const;
    const BigInt& leading() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Integer content (gcd of coefficients, nonnegative; 0 for zero).
    BigInt content() const;
    Poly divide_content(const BigInt& g) const;

    /// Exact division; throws std::logic_error if the remainder is nonzero.
    Poly divide_exact(const Poly& d) const;

    /// Primitive polynomial gcd with positive leading coefficient.
    static Poly gcd(Poly a, Poly b);

    std::string str() const;   // "q^2 - 2*q + 1" style, deterministic

private:
    void trim();
    std::vector<BigInt> c_;
};

/// Element of the field Q(q), stored as a reduced fraction of integer
/// polynomials: gcd(num, den) = 1, gcd of integer contents 1, leading
/// coefficient of den positive.  Equality is componentwise.
class RatFunc {
public:
    RatFunc() : num_(0), den_(1) {}
    RatFunc(long long c) : num_(c), den_(1) {}
    RatFunc(Poly n) : num_(std::move(n)), den_(1) {}
    RatFunc(Poly n, Poly d);

    static RatFunc q_power(long long k);   // any sign

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == Poly(1) && den_ == Poly(1); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    RatFunc inverse() const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    std::string str() const;   // "num" or "(num)/(den)"

private:
    void reduce();
    Poly num_, den_;
};

/// [n]_q! as a polynomial times q^{-k}: returns the balanced q-factorial
/// as a RatFunc (Laurent), used by divided powers in relation checks.
RatFunc q_factorial(int n);

} // namespace qaff
