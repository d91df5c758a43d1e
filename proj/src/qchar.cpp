#include "qaff/qchar.hpp"

#include <fstream>
#include <sstream>

namespace qaff {

QCharacter QCharacter::from_monomial(const Monomial& m) {
    QCharacter c;
    c.highest = m;
    c.terms[m] = 1;
    return c;
}

int QCharacter::multiplicity(const Monomial& m) const {
    auto it = terms.find(m);
    return it == terms.end() ? 0 : it->second;
}

long long QCharacter::dimension() const {
    long long d = 0;
    for (const auto& [m, k] : terms) d += k;
    return d;
}

namespace {

Monomial pick_highest(const CartanData& cd, const Monomial& a, const Monomial& b) {
    if (a == b) return a;
    Weight wa = weight_of(cd, a), wb = weight_of(cd, b);
    if (weight_leq(wa, wb, cd) && !(wb == wa)) return b;
    if (weight_leq(wb, wa, cd) && !(wa == wb)) return a;
    return a < b ? a : b;
}

} // namespace

QCharacter char_add(const CartanData& cd, const QCharacter& a, const QCharacter& b) {
    QCharacter c;
    c.terms = a.terms;
    for (const auto& [m, k] : b.terms) {
        c.terms[m] += k;
        if (c.terms[m] == 0) c.terms.erase(m);
    }
    c.highest = pick_highest(cd, a.highest, b.highest);
    return c;
}

QCharacter char_mul(const CartanData& cd, const QCharacter& a, const QCharacter& b) {
    (void)cd;
    QCharacter c;
    c.highest = mono_mul(a.highest, b.highest);
    for (const auto& [ma, ka] : a.terms)
        for (const auto& [mb, kb] : b.terms) c.terms[mono_mul(ma, mb)] += ka * kb;
    return c;
}

namespace {

QCharacter filter_terms(const QCharacter& c, const std::function<bool(const Monomial&)>& keep) {
    QCharacter out;
    out.highest = c.highest;
    for (const auto& [m, k] : c.terms)
        if (keep(m)) out.terms[m] = k;
    return out;
}

} // namespace

QCharacter char_trunc_geq(const CartanData& cd, const QCharacter& c, long long level) {
    Monomial ref = trunc_parts(cd, c.highest, level - 1).leq_part;
    return filter_terms(c, [&](const Monomial& m) {
        return trunc_parts(cd, m, level - 1).leq_part == ref;
    });
}

QCharacter char_trunc_leq(const CartanData& cd, const QCharacter& c, long long level) {
    Monomial ref = trunc_parts(cd, c.highest, level + 1).geq_part;
    return filter_terms(c, [&](const Monomial& m) {
        return trunc_parts(cd, m, level + 1).geq_part == ref;
    });
}

namespace {

// Window test for A-subscripts: lambda in d_i (level + N) + mu_i r_i for
// the upper window, d_i (level - N) - mu_i r_i for the lower one, with
// the epsilon exponent in d_i Z.
bool position_in_window(const CartanData& cd, const APosition& p, long long level, bool upper) {
    const size_t i = static_cast<size_t>(p.node);
    const int di = cd.d[i];
    if (di % cd.twist == 0 && p.point.kappa % cd.twist != 0) return false;
    Rat steps = upper ? (p.point.lambda - Rat(cd.mur(p.node))) / Rat(di) - Rat(level)
                      : Rat(level) - (p.point.lambda + Rat(cd.mur(p.node))) / Rat(di);
    return steps.is_integer() && steps.num() >= 0;
}

QCharacter trunc_alt(const CartanData& cd, const QCharacter& c, long long level, bool upper) {
    return filter_terms(c, [&](const Monomial& m) {
        auto dec = decompose_over_A(cd, m, c.highest);
        if (!dec) return false;
        for (const APosition& p : *dec)
            if (!position_in_window(cd, p, level, upper)) return false;
        return true;
    });
}

} // namespace

QCharacter char_trunc_geq_alt(const CartanData& cd, const QCharacter& c, long long level) {
    return trunc_alt(cd, c, level, true);
}

QCharacter char_trunc_leq_alt(const CartanData& cd, const QCharacter& c, long long level) {
    return trunc_alt(cd, c, level, false);
}

ValidationReport validate_simple_character(const CartanData& cd, const QCharacter& c,
                                           bool fundamental) {
    ValidationReport rep;
    if (c.terms.empty()) {
        rep.fail("character has no terms");
        return rep;
    }
    auto it = c.terms.find(c.highest);
    if (it == c.terms.end() || it->second < 1) {
        rep.fail("highest monomial " + to_string(c.highest) + " missing from terms");
        return rep;
    }

    std::optional<APosition> first_descent;
    Rat base_lambda;
    if (fundamental) {
        if (c.highest.size() != 1 || c.highest.factors()[0].second != 1) {
            rep.fail("fundamental tag on a non-fundamental highest monomial");
            return rep;
        }
        const YKey& hk = c.highest.factors()[0].first;
        first_descent = APosition{hk.node, SpectralPoint{hk.kappa, hk.lambda + Rat(cd.mur(hk.node))}};
        base_lambda = base_level(cd, hk);
    }

    for (const auto& [m, k] : c.terms) {
        if (m == c.highest) continue;
        auto dec = decompose_over_A(cd, m, c.highest);
        if (!dec || dec->empty()) {
            rep.fail("term " + to_string(m) + " is not strictly below the highest monomial");
            continue;
        }
        if (fundamental) {
            bool has_first = false;
            for (const APosition& p : *dec) {
                if (p == *first_descent) has_first = true;
                Rat shift = p.point.lambda / Rat(cd.d[static_cast<size_t>(p.node)]) - base_lambda;
                if (!(shift > Rat(0)))
                    rep.fail("term " + to_string(m) + " uses non-positive shift at " + to_string(p));
            }
            if (!has_first)
                rep.fail("term " + to_string(m) + " misses the forced first descent " +
                         to_string(*first_descent));
        }
    }
    return rep;
}

QCharacter zeta_map(const CartanData& cd, const QCharacter& c, long long ell) {
    auto map_key = [&](const YKey& k) {
        const size_t i = static_cast<size_t>(k.node);
        long long l = base_level_int(cd, k);
        const bool sign_twist =
            cd.type.is_twisted() && cd.type.family == 'A' && cd.r[i] <= Rat(1);
        int node = cd.type.is_twisted() ? k.node : cd.bar_node[i];
        int kappa = (-k.kappa + (sign_twist ? 1 : 0)) % cd.twist;
        if (kappa < 0) kappa += cd.twist;
        return YKey{node, kappa, Rat(cd.d[i] * (ell - l + cd.rvee_hvee))};
    };
    QCharacter out;
    for (const auto& [m, k] : c.terms) {
        Monomial im;
        for (const auto& [key, e] : m.factors()) im.mul_key(map_key(key), -e);
        out.terms[im] += k;
    }
    try {
        out.highest = bar_monomial(cd, c.highest, ell);
    } catch (const domain_error&) {
        // highest outside the reflection window: fall back to a maximal term
        bool first = true;
        for (const auto& [m, k] : out.terms) {
            if (first) { out.highest = m; first = false; continue; }
            out.highest = pick_highest(cd, out.highest, m);
        }
    }
    return out;
}

std::map<Monomial, long long> triangular_decompose(const CartanData& cd, const QCharacter& product,
                                                   const CharacterProvider& provider) {
    std::map<Monomial, long long> residual;
    for (const auto& [m, k] : product.terms) residual[m] = k;
    std::map<Monomial, long long> result;

    const int max_rounds = 100000;
    for (int round = 0; round < max_rounds; ++round) {
        while (!residual.empty() && residual.begin()->second == 0) residual.erase(residual.begin());
        for (auto it = residual.begin(); it != residual.end();)
            it = it->second == 0 ? residual.erase(it) : std::next(it);
        if (residual.empty()) return result;

        std::vector<Monomial> dominants;
        for (const auto& [m, k] : residual)
            if (is_dominant(m)) dominants.push_back(m);
        if (dominants.empty())
            throw domain_error("triangular_decompose: nonzero residual with no dominant monomial");

        // maximal dominant under the A-order; lexicographically least on ties
        Monomial pick;
        bool found = false;
        for (const Monomial& m : dominants) {
            bool maximal = true;
            for (const Monomial& other : dominants) {
                if (other == m) continue;
                if (leq(cd, m, other)) { maximal = false; break; }
            }
            if (maximal) { pick = m; found = true; break; }   // dominants are sorted
        }
        if (!found) throw std::logic_error("triangular_decompose: no maximal dominant monomial");

        long long mult = residual[pick];
        if (mult < 0)
            throw domain_error("triangular_decompose: negative multiplicity at " + to_string(pick));
        QCharacter simple = provider(pick);
        if (simple.highest != pick)
            throw domain_error("triangular_decompose: provider returned highest " +
                               to_string(simple.highest) + " for " + to_string(pick));
        for (const auto& [m, k] : simple.terms) residual[m] -= mult * k;
        result[pick] += mult;
    }
    throw std::logic_error("triangular_decompose: did not terminate");
}

Json monomial_to_json(const Monomial& m) {
    Json arr = Json::array();
    for (const auto& [k, e] : m.factors())
        arr.push_back({k.node, k.kappa, k.lambda.num(), k.lambda.den(), e});
    return arr;
}

Monomial monomial_from_json(const Json& j) {
    if (!j.is_array()) throw domain_error("monomial JSON must be an array");
    Monomial m;
    for (const auto& f : j) {
        if (!f.is_array() || f.size() != 5)
            throw domain_error("monomial factor must be [node,kappa,num,den,exp]");
        YKey k{f[0].get<int>(), f[1].get<int>(),
               Rat(f[2].get<long long>(), f[3].get<long long>())};
        m.mul_key(k, f[4].get<int>());
    }
    return m;
}

Json character_to_json(const QCharacter& c) {
    Json j;
    j["highest"] = monomial_to_json(c.highest);
    Json terms = Json::array();
    for (const auto& [m, k] : c.terms) terms.push_back({monomial_to_json(m), k});
    j["terms"] = terms;
    return j;
}

QCharacter character_from_json(const Json& j) {
    QCharacter c;
    if (!j.contains("highest") || !j.contains("terms"))
        throw domain_error("character JSON needs 'highest' and 'terms'");
    c.highest = monomial_from_json(j["highest"]);
    for (const auto& t : j["terms"]) {
        if (!t.is_array() || t.size() != 2) throw domain_error("character term must be [monomial, mult]");
        int mult = t[1].get<int>();
        if (mult <= 0) throw domain_error("character multiplicity must be positive");
        c.terms[monomial_from_json(t[0])] += mult;
    }
    return c;
}

Json table_to_json(const CharacterTable& t) {
    Json j;
    j["type"] = t.type_label;
    Json entries = Json::object();
    for (const auto& [m, e] : t.entries) {
        Json item;
        item["provenance"] = e.provenance;
        item["character"] = character_to_json(e.character);
        entries[to_string(m)] = item;
    }
    j["entries"] = entries;
    return j;
}

void save_table(const CharacterTable& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw domain_error("cannot open '" + path + "' for writing");
    out << table_to_json(t).dump(2) << "\n";
}

CharacterTable load_table(const CartanData& cd, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw domain_error("parse error in '" + path + "': " + e.what());
    }
    CharacterTable t;
    if (!j.contains("type") || !j.contains("entries"))
        throw domain_error("table '" + path + "' needs 'type' and 'entries'");
    t.type_label = j["type"].get<std::string>();
    if (parse_affine_type(t.type_label) != cd.type)
        throw domain_error("table type " + t.type_label + " does not match " + cd.type.label());
    for (const auto& [key, item] : j["entries"].items()) {
        TableEntry e;
        if (!item.contains("character")) throw domain_error("entry '" + key + "' has no character");
        e.character = character_from_json(item["character"]);
        e.provenance = item.value("provenance", std::string("ingested"));
        if (e.provenance != "computed-sl2" && e.provenance != "ingested")
            throw domain_error("entry '" + key + "' has unknown provenance '" + e.provenance + "'");
        Monomial m = parse_monomial(key);
        if (m != e.character.highest)
            throw domain_error("entry '" + key + "' key differs from its highest monomial");
        ValidationReport rep = validate_simple_character(cd, e.character);
        if (!rep.pass)
            throw domain_error("entry '" + key + "' fails validation: " + rep.failures.front());
        t.entries[m] = std::move(e);
    }
    return t;
}

std::string to_string(const QCharacter& c) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, k] : c.terms) {
        if (!first) os << " + ";
        first = false;
        if (k != 1) os << k << "*";
        os << to_string(m);
    }
    if (first) os << "0";
    return os.str();
}

} // namespace qaff
