#include "qaff/polyq.hpp"

#include <sstream>
#include <stdexcept>

namespace qaff {

Poly::Poly(long long c) {
    if (c != 0) c_.push_back(BigInt(c));
}

Poly::Poly(BigInt c) {
    if (c != 0) c_.push_back(std::move(c));
}

Poly::Poly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::q_power(long long k) {
    if (k < 0) throw std::invalid_argument("Poly::q_power: negative exponent");
    std::vector<BigInt> c(static_cast<size_t>(k) + 1, BigInt(0));
    c.back() = 1;
    return Poly(std::move(c));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& Poly::coeff(size_t k) const {
    static const BigInt zero(0);
    return k < c_.size() ? c_[k] : zero;
}

const BigInt& Poly::leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& x : p.c_) x = -x;
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<BigInt> c(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<BigInt> c(c_.size() + o.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    }
    return Poly(std::move(c));
}

BigInt Poly::content() const {
    BigInt g(0);
    for (const auto& x : c_) {
        g = boost::multiprecision::gcd(g, x);
        if (g == 1) break;
    }
    return g;
}

Poly Poly::divide_content(const BigInt& g) const {
    if (g == 0 || g == 1) return *this;
    Poly p = *this;
    for (auto& x : p.c_) {
        if (x % g != 0) throw std::logic_error("divide_content: not divisible");
        x /= g;
    }
    return p;
}

Poly Poly::divide_exact(const Poly& d) const {
    if (d.is_zero()) throw std::logic_error("divide_exact: division by zero polynomial");
    if (is_zero()) return Poly();
    if (degree() < d.degree()) throw std::logic_error("divide_exact: not divisible (degree)");
    std::vector<BigInt> rem = c_;
    std::vector<BigInt> quot(static_cast<size_t>(degree() - d.degree()) + 1, BigInt(0));
    const auto dd = static_cast<size_t>(d.degree());
    for (size_t k = quot.size(); k-- > 0;) {
        BigInt& lead = rem[k + dd];
        if (lead == 0) continue;
        if (lead % d.leading() != 0) throw std::logic_error("divide_exact: not divisible");
        BigInt f = lead / d.leading();
        quot[k] = f;
        for (size_t j = 0; j <= dd; ++j) rem[k + j] -= f * d.c_[j];
    }
    for (const auto& x : rem)
        if (x != 0) throw std::logic_error("divide_exact: nonzero remainder");
    return Poly(std::move(quot));
}

namespace {

// pseudo-remainder of a by b (deg a >= deg b, b nonzero)
Poly prem(Poly a, const Poly& b) {
    const long long db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        long long shift = a.degree() - db;
        Poly t = Poly(a.leading()) * Poly::q_power(shift) * b;
        a = a * Poly(b.leading()) - t;
    }
    return a;
}

Poly make_primitive(const Poly& p) {
    if (p.is_zero()) return p;
    Poly q = p.divide_content(p.content());
    if (q.leading() < 0) q = -q;
    return q;
}

} // namespace

Poly Poly::gcd(Poly a, Poly b) {
    a = make_primitive(a);
    b = make_primitive(b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        Poly r = make_primitive(prem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return make_primitive(a);
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = c_.size(); k-- > 0;) {
        const BigInt& x = c_[k];
        if (x == 0) continue;
        BigInt a = x;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (k == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "q";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

RatFunc::RatFunc(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    reduce();
}

RatFunc RatFunc::q_power(long long k) {
    if (k >= 0) return RatFunc(Poly::q_power(k));
    return RatFunc(Poly(1), Poly::q_power(-k));
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (!(den_ == Poly(1))) {
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divide_exact(g);
            den_ = den_.divide_exact(g);
        }
        BigInt ig = boost::multiprecision::gcd(num_.content(), den_.content());
        if (ig > 1) {
            num_ = num_.divide_content(ig);
            den_ = den_.divide_content(ig);
        }
        if (den_.leading() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return RatFunc();
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

std::string RatFunc::str() const {
    if (den_ == Poly(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc q_factorial(int n) {
    if (n < 0) throw std::invalid_argument("q_factorial: negative argument");
    RatFunc out(1);
    for (int k = 2; k <= n; ++k) {
        // [k]_q = q^{-(k-1)} (1 + q^2 + ... + q^{2(k-1)})
        std::vector<BigInt> c(static_cast<size_t>(2 * (k - 1)) + 1, BigInt(0));
        for (int t = 0; t < k; ++t) c[static_cast<size_t>(2 * t)] = 1;
        out *= RatFunc(Poly(std::move(c))) * RatFunc::q_power(-(k - 1));
    }
    return out;
}

} // namespace qaff
