#pragma once

#include <string>
#include <vector>

#include "qaff/rational.hpp"

namespace qaff {

/// Errors raised by domain-level preconditions (bad labels, inadmissible
/// lattice points, spectra that cannot be separated, ...).  Distinct from
/// std::invalid_argument, which we reserve for plain API misuse.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Kac label of an indecomposable affine Cartan matrix, e.g. A_5^(2) is
/// {family 'A', index 5, twist 2}.  The finite rank n is derived.
struct AffineType {
    char family = 'A';   // 'A'..'G'
    int index = 1;       // the subscript of the Kac label
    int twist = 1;       // 1, 2 or 3

    int rank() const;                 // rank n of the finite part
    std::string label() const;        // "A5^2", "D4^3", ...
    bool is_twisted() const { return twist > 1; }

    /// True for the family A twisted on an even subscript (the type with
    /// the exceptional node weight mu_n = 2; reversed node numbering).
    bool is_a_even_twisted() const { return family == 'A' && twist == 2 && index % 2 == 0; }

    bool operator==(const AffineType&) const = default;
};

/// Parses labels of the form "A1^1", "a2^2", "D4^3" (case-insensitive).
AffineType parse_affine_type(const std::string& s);

/// Integer weight in fundamental-weight coordinates over I = {1..n}.
struct Weight {
    std::vector<long long> coeffs;

    Weight() = default;
    explicit Weight(std::vector<long long> c) : coeffs(std::move(c)) {}

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    bool operator==(const Weight& o) const { return coeffs == o.coeffs; }
    bool is_zero() const;
};

/// All numerical data attached to an affine Cartan matrix: the matrix
/// itself (rows/columns 0..n), symmetrizers r_i (exact rationals), the
/// node weights mu_i, the lattice dilations d_i on I, the twisting order
/// with its root of unity, the longest-element node involution and the
/// dual Coxeter pairing r_vee * h_vee.
///
/// Immutable after build_cartan; all member queries are pure.
struct CartanData {
    AffineType type;
    int n = 1;                               // finite rank, I = {1..n}
    std::vector<std::vector<int>> C;         // (n+1) x (n+1)
    std::vector<Rat> r;                      // symmetrizers, indices 0..n
    std::vector<int> mu;                     // indices 0..n, values in {1,2}
    std::vector<int> d;                      // indices 0..n (slot 0 unused), d_i on I
    int twist = 1;                           // 1, 2 or 3; epsilon is a primitive twist-th root of 1
    std::vector<int> bar_node;               // i -> bar(i) on 1..n (slot 0 unused)
    long long rvee_hvee = 0;

    int cij(int i, int j) const { return C[i][j]; }
    /// mu_i * r_i, always a positive integer after normalization.
    long long mur(int i) const;
    bool valid_node(int i) const { return i >= 1 && i <= n; }
};

/// Builds the full Cartan data for a valid affine label.  The embedded
/// diagram tables are self-checked at construction: the matrix must have
/// strictly positive proper principal minors and determinant zero, and
/// diag(r) * C must be symmetric.  Throws domain_error on an invalid
/// label/rank pair and logic_error if a table self-check fails.
CartanData build_cartan(const AffineType& t);

/// Convenience: build from a label string.
CartanData build_cartan(const std::string& label);

/// Standard partial order on the weight lattice: w1 <= w2 iff w2 - w1 is
/// a nonnegative integer combination of simple roots.  Solved exactly.
bool weight_leq(const Weight& w1, const Weight& w2, const CartanData& cd);

} // namespace qaff
