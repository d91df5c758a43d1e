#pragma once

#include <cstdint>
#include <vector>

#include "qaff/qchar.hpp"

namespace qaff {

/// Kirillov-Reshetikhin segment: spectral base exponent and length.  The
/// highest monomial is the q^2-string Y at base, base+2, ..., base+2(k-1).
struct KRString {
    long long base = 0;
    int length = 1;

    friend bool operator==(const KRString& a, const KRString& b) {
        return a.base == b.base && a.length == b.length;
    }
    friend bool operator<(const KRString& a, const KRString& b) {
        if (a.base != b.base) return a.base < b.base;
        return a.length < b.length;
    }
};

struct StringFactorization {
    std::vector<KRString> strings;
};

Monomial kr_monomial(const KRString& s);

/// False exactly when the union of the two supports is a q^2-segment
/// properly containing both; strings of distinct parity never interact.
bool in_general_position(const KRString& a, const KRString& b);

/// Greedy maximal-run peeling into pairwise nested-or-separated strings.
/// The pairwise general-position invariant and exact reconstruction are
/// asserted on the result.
StringFactorization factor_into_strings(const Monomial& m);

/// The (k+1)-term ladder character of one segment.  Validated once
/// against the matrix-engine oracle on all lengths <= 3 before first use
/// on longer segments.
QCharacter chi_kr(const KRString& s);

/// Simple character: product of the segment ladders of the string
/// factorization, tagged after structural validation.
QCharacter chi_simple_sl2(const Monomial& m);

/// Simplicity of the full tensor product of the given simples: true iff
/// every cross pair of strings from the concatenated factorizations is
/// in general position.
bool tensor_simple_sl2(const std::vector<Monomial>& ms);

// ---- window enumeration and verification harness ----

/// All segments with support inside [0, ell] and length <= maxk.
std::vector<KRString> window_strings(long long ell, int maxk);

/// Deterministic pool of window simples: single segments plus products
/// of two segments in general position (deduplicated, sorted).
std::vector<Monomial> window_simples(long long ell, int maxk);

struct CheckReport {
    std::string name;
    size_t checked = 0;
    std::vector<std::string> failures;

    bool pass() const { return failures.empty(); }
    Json to_json() const;
};

/// Pairwise-versus-global simplicity over all tuples (sizes 2..max_tuple)
/// of pool simples, with sampled matrix-oracle confirmations on thin
/// configurations.
struct PairwiseGlobalReport {
    long long ell = 0;
    int maxk = 0;
    int max_tuple = 0;
    size_t pool_size = 0;
    size_t tuples_checked = 0;
    std::vector<std::string> counterexamples;
    size_t oracle_checked = 0;
    size_t oracle_agreements = 0;
    std::vector<std::string> oracle_disagreements;

    bool pass() const { return counterexamples.empty() && oracle_disagreements.empty(); }
    Json to_json() const;
};

PairwiseGlobalReport verify_pairwise_global(long long ell, int maxk, int max_tuple,
                                            size_t oracle_samples, uint64_t seed);

/// Both truncation filters agree on every pool simple and cut level.
CheckReport verify_trunc_agreement(long long ell, int maxk);

/// Upper truncation equals low part times the character of the high part.
CheckReport verify_trunc_factorization(long long ell, int maxk);

/// Termwise spectral inversion matches the character of the dual monomial.
CheckReport verify_duality(long long ell, int maxk);

/// Character-level reflection compatibility on the window [0, ell].
CheckReport verify_reflection(long long ell, int maxk);

/// Every tuple of level-zero simples is simple.
CheckReport verify_level_zero(int max_copies, int max_tuple);

} // namespace qaff
