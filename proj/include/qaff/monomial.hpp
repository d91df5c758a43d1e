#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qaff/cartan.hpp"
#include "qaff/rational.hpp"

namespace qaff {

/// Point of the spectral lattice epsilon^Z q^Q: kappa is the exponent of
/// the twisting root of unity (reduced mod the twisting order), lambda
/// the exact rational exponent of q.
struct SpectralPoint {
    int kappa = 0;
    Rat lambda;

    SpectralPoint() = default;
    SpectralPoint(int k, Rat l) : kappa(k), lambda(std::move(l)) {}

    SpectralPoint reduced(int twist) const {
        int k = kappa % twist;
        if (k < 0) k += twist;
        return {k, lambda};
    }
    bool operator==(const SpectralPoint&) const = default;
};

/// Canonical key of a Y-variable: node index together with the literal
/// spectral argument.  Two variables are equal iff the keys coincide.
struct YKey {
    int node = 1;
    int kappa = 0;
    Rat lambda;

    friend bool operator==(const YKey& a, const YKey& b) {
        return a.node == b.node && a.kappa == b.kappa && a.lambda == b.lambda;
    }
    friend bool operator<(const YKey& a, const YKey& b) {
        if (a.node != b.node) return a.node < b.node;
        if (a.kappa != b.kappa) return a.kappa < b.kappa;
        return a.lambda < b.lambda;
    }
};

/// Sparse Laurent monomial in the Y-variables.  Stored as a sorted
/// key/exponent vector with no zero exponents; the empty product is 1.
/// Value type with total ordering, usable as a map key.
class Monomial {
public:
    Monomial() = default;

    static Monomial one() { return {}; }
    static Monomial variable(const YKey& k, int exponent = 1);

    bool is_one() const { return factors_.empty(); }
    int exponent_of(const YKey& k) const;
    size_t size() const { return factors_.size(); }
    const std::vector<std::pair<YKey, int>>& factors() const { return factors_; }

    Monomial& mul_key(const YKey& k, int exponent);

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    friend bool operator<(const Monomial& a, const Monomial& b);

private:
    std::vector<std::pair<YKey, int>> factors_;
};

/// Position of an A-monomial: node plus the literal subscript point.
struct APosition {
    int node = 1;
    SpectralPoint point;

    friend bool operator==(const APosition& a, const APosition& b) {
        return a.node == b.node && a.point == b.point;
    }
    friend bool operator<(const APosition& a, const APosition& b) {
        if (a.node != b.node) return a.node < b.node;
        if (a.point.kappa != b.point.kappa) return a.point.kappa < b.point.kappa;
        return a.point.lambda < b.point.lambda;
    }
};

// ---- free abelian group structure ----

Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_inv(const Monomial& m);
Monomial mono_pow(const Monomial& m, int e);

// ---- lattice constructions ----

/// The variable Y_{i, p^{d_i}}: the argument already carries the d_i-th power.
YKey y_of_point(const CartanData& cd, int i, const SpectralPoint& p);

/// The root-analog monomial A_{i,a} at the given literal subscript, per
/// the untwisted/twisted case table.  Throws domain_error when the
/// twisted short-root case needs lattice roots that do not exist
/// (epsilon-exponent of the point not divisible by the twisting order).
Monomial a_monomial(const CartanData& cd, const APosition& pos);

Weight weight_of(const CartanData& cd, const Monomial& m);
bool is_dominant(const Monomial& m);

/// Unique multiset S with m = mref * prod_{p in S} A_p^{-1}, if one
/// exists.  Exact integer linear solve over a finite candidate set of
/// positions near the combined supports; absence signals incomparability.
std::optional<std::vector<APosition>> decompose_over_A(const CartanData& cd, const Monomial& m,
                                                       const Monomial& mref);

/// The monomial order: m <= mref iff the ratio is a product of A^{-1}.
bool leq(const CartanData& cd, const Monomial& m, const Monomial& mref);

/// Extremal-level sign tests; levels are read on base points lambda/d_i.
/// Reject m = 1 (the notion is undefined there).
bool is_right_negative(const CartanData& cd, const Monomial& m);
bool is_left_negative(const CartanData& cd, const Monomial& m);

/// Base level lambda/d_i of a key; integral() variants throw on
/// non-integral levels.
Rat base_level(const CartanData& cd, const YKey& k);
long long base_level_int(const CartanData& cd, const YKey& k);

/// Splits by base level into the (<= L, == L, >= L) parts.  Requires all
/// levels integral.  The outer parts overlap at level L, so that
/// m^{<=L} * m^{>=L+1} = m.
struct TruncParts {
    Monomial leq_part, eq_part, geq_part;
};
TruncParts trunc_parts(const CartanData& cd, const Monomial& m, long long level);

/// Spectral shift by q^s: each key gains d_i * s in lambda.
Monomial tau_shift(const CartanData& cd, const Monomial& m, const Rat& s);

/// The involution inverting both spectral exponents and all powers.
Monomial sigma_involution(const Monomial& m, int twist);

/// Highest monomial of the sigma-dual simple module: node relabeling (or
/// sign twist for the A^(2) families at short nodes) composed with
/// argument inversion and the shift q^{-d_i rvee hvee}.  Input must be
/// dominant.
Monomial dual_highest_monomial(const CartanData& cd, const Monomial& m);

/// Level reflection l -> ell - l with kappa -> -kappa on keys whose base
/// level lies in [0, ell]; throws domain_error outside that window.
Monomial bar_monomial(const CartanData& cd, const Monomial& m, long long ell);

/// Membership in the level window of the truncated category: dominant
/// with all base levels integral in [0, ell].
bool in_c_ell(const CartanData& cd, const Monomial& m, long long ell);

/// Support condition guaranteeing cyclicity of L(m) (x) L(m'): no point
/// of m' sits strictly above a point of m along q^{r} epsilon^{k} steps
/// scaled by d_i.
bool cyclic_pair_ok(const CartanData& cd, const Monomial& m, const Monomial& mprime);

/// One factor of a monomial over the simply-laced cover of a twisted
/// type: orbit representative, power of the diagram twisting, argument.
struct TildeFactor {
    int node = 1;        // orbit representative in I
    int sigma_power = 0;
    SpectralPoint point;
    int exponent = 1;
};

/// Folds cover variables down to the twisted lattice, multiplicatively.
Monomial pi_twisted(const CartanData& cd, const std::vector<TildeFactor>& tilde_m);

// ---- presentation ----

/// Canonical text form: factors "Y[i,kappa,lambda]^e" joined by ';'
/// (exponent omitted when 1, lambda printed as num or num/den); "1" for
/// the empty product.
std::string to_string(const Monomial& m);
std::string to_string(const APosition& p);

/// Parses the grammar above; '*' is accepted as a factor separator in
/// addition to ';' (lists of monomials reserve ';' for the list level).
Monomial parse_monomial(const std::string& text);

} // namespace qaff
