#pragma once

#include <string>
#include <vector>

#include "qaff/linalg.hpp"
#include "qaff/qchar.hpp"

namespace qaff {

/// The rank-one untwisted Cartan data shared by the whole engine.
const CartanData& sl2_cartan();

/// Exact matrix realization of a finite-dimensional module over the
/// rational-function field in q.  Spectral parameters are specialized to
/// integer powers of q; the evaluation parameter of the r-th tensor
/// factor is q^{factor_alphas[r]}.  Immutable after construction.
struct Rep {
    int dim = 0;
    Mat x0p, x0m, x1p, x1m;
    Mat k0, k1, k0i, k1i;
    std::vector<long long> factor_alphas;
    bool restricted = false;   // proper submodule of the tensor of its factors
    std::string note;          // diagnostics from construction retries
};

/// The two-dimensional module with evaluation parameter a = q^alpha:
/// highest l-weight monomial Y_{1, q^{alpha-2}}.
Rep fundamental_rep(long long alpha);

/// Kronecker model of the coproduct action on a tensor product.
Rep tensor_rep(const Rep& a, const Rep& b);

/// The element q^{-2} x1+ x0+ - x0+ x1+ separating l-weights.
Mat h11_matrix(const Rep& r);

struct RelationReport {
    bool ok = true;
    std::string first_violation;
};

/// Checks every defining relation of the rank-one affine algebra as an
/// exact matrix identity and reports the first violation.
RelationReport verify_defining_relations(const Rep& r);

struct LWeightBlock {
    Monomial monomial;
    std::vector<Vec> basis;    // full-dimension column vectors
};

struct LWeightDecomp {
    std::vector<LWeightBlock> blocks;
    size_t covered = 0;
};

/// Splits each k1-weight space into generalized h11-eigenspaces matched
/// against the candidate monomials.  Requires a pairwise-distinct
/// candidate list whose (weight, eigenvalue) map separates candidates of
/// equal weight; throws domain_error on ambiguity or when the candidates
/// do not exhaust the spectrum.
LWeightDecomp lweight_decomposition(const Rep& r, const std::vector<Monomial>& candidates);

/// All products of one l-weight monomial per tensor factor.
std::vector<Monomial> factor_candidates(const Rep& r);

/// q-character read off the l-weight decomposition with factor-product
/// candidates.  For unrestricted tensor products the result is checked
/// against the product of the factor characters.
QCharacter extract_qchar(const Rep& r);

/// Realizes the simple module with the given dominant highest monomial
/// as the submodule generated by the top vector inside the tensor of its
/// fundamental factors, ordered with nondecreasing spectral exponents.
/// The character self-check guards the ordering convention; on failure
/// the reversed order is tried once (recorded in note).
Rep realize_simple(const Monomial& m);

/// Complete simplicity test for thin modules (all l-weight spaces of
/// dimension one): true iff every l-weight vector generates the whole
/// space.  Refuses non-thin input with domain_error.
bool is_simple_thin(const Rep& r);

/// Audit dump: all eight action matrices as rational-function strings.
Json rep_to_json(const Rep& r);

} // namespace qaff
