#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "qaff/monomial.hpp"

namespace qaff {

using Json = nlohmann::ordered_json;

/// Finite integer-multiplicity sum of monomials with a designated
/// highest-weight monomial.  Multiplicities are kept strictly positive;
/// the highest is stored explicitly because products of characters may
/// have several maximal dominant terms.
struct QCharacter {
    Monomial highest;
    std::map<Monomial, int> terms;
    bool simple_validated = false;   // set once structural validation passed; ignored by ==

    static QCharacter from_monomial(const Monomial& m);
    static QCharacter unit() { return from_monomial(Monomial::one()); }

    int multiplicity(const Monomial& m) const;
    long long dimension() const;   // sum of multiplicities

    bool operator==(const QCharacter& o) const { return highest == o.highest && terms == o.terms; }
};

QCharacter char_add(const CartanData& cd, const QCharacter& a, const QCharacter& b);
QCharacter char_mul(const CartanData& cd, const QCharacter& a, const QCharacter& b);

/// Upper/lower truncations: keep the terms whose low (resp. high) part
/// agrees with the highest monomial across the level cut.
QCharacter char_trunc_geq(const CartanData& cd, const QCharacter& c, long long level);
QCharacter char_trunc_leq(const CartanData& cd, const QCharacter& c, long long level);

/// The same truncations computed through the A-decomposition window:
/// keep the terms whose ratio to the highest uses only positions with
/// base shift at least (resp. at most) the cut.
QCharacter char_trunc_geq_alt(const CartanData& cd, const QCharacter& c, long long level);
QCharacter char_trunc_leq_alt(const CartanData& cd, const QCharacter& c, long long level);

struct ValidationReport {
    bool pass = true;
    std::vector<std::string> failures;

    void fail(std::string why) {
        pass = false;
        failures.push_back(std::move(why));
    }
};

/// Structural checks for a simple-module character: every non-highest
/// term strictly below the highest; for fundamentals additionally the
/// forced first descent and strict positivity of all A-shifts.
ValidationReport validate_simple_character(const CartanData& cd, const QCharacter& c,
                                           bool fundamental = false);

/// Character-level form of the level reflection: inverts every variable
/// through the window [0, ell], sending the character of L(m) to the
/// character of L(bar m).  An involution on characters.
QCharacter zeta_map(const CartanData& cd, const QCharacter& c, long long ell);

using CharacterProvider = std::function<QCharacter(const Monomial&)>;

/// Expresses a product of simple characters in the basis of simple
/// characters by peeling maximal dominant monomials.  The provider must
/// return the validated simple character of any dominant monomial below
/// the highest of the product.  Throws domain_error on negative
/// multiplicities or a nonzero residual without dominant terms.
std::map<Monomial, long long> triangular_decompose(const CartanData& cd, const QCharacter& product,
                                                   const CharacterProvider& provider);

// ---- persistence ----

struct TableEntry {
    QCharacter character;
    std::string provenance;   // "computed-sl2" or "ingested"
};

struct CharacterTable {
    std::string type_label;
    std::map<Monomial, TableEntry> entries;
};

Json monomial_to_json(const Monomial& m);
Monomial monomial_from_json(const Json& j);
Json character_to_json(const QCharacter& c);
QCharacter character_from_json(const Json& j);
Json table_to_json(const CharacterTable& t);

void save_table(const CharacterTable& t, const std::string& path);

/// Loads and validates; every entry must pass validate_simple_character
/// and have its key equal to its highest monomial.  Failures name the
/// offending entry.
CharacterTable load_table(const CartanData& cd, const std::string& path);

std::string to_string(const QCharacter& c);

} // namespace qaff
