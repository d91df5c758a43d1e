// Acceptance suite: runs every agreed criterion exactly (integer and
// rational-function arithmetic, zero tolerance) and prints one line per
// criterion.  Exit code is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "qaff/qchar.hpp"
#include "qaff/sl2engine.hpp"
#include "qaff/sl2theory.hpp"

using namespace qaff;

namespace {

struct criterion_failure : std::runtime_error {
    explicit criterion_failure(const std::string& what) : std::runtime_error(what) {}
};

void require(bool ok, const std::string& what) {
    if (!ok) throw criterion_failure(what);
}

Monomial ym(long long lambda, int e = 1) { return Monomial::variable(YKey{1, 0, Rat(lambda)}, e); }
RatFunc qp(long long k) { return RatFunc::q_power(k); }

QCharacter fundamental_character(long long alpha) {
    QCharacter c = QCharacter::from_monomial(ym(alpha - 2));
    c.terms[ym(alpha, -1)] = 1;
    return c;
}

// shared state across criteria: realized segment modules and the thin
// pair tensors, reused by the relation sweep
struct Context {
    std::map<Monomial, Rep> realized;
    std::vector<Rep> pair_tensors;
    std::vector<std::string> notes;

    const Rep& realize(const Monomial& m) {
        auto it = realized.find(m);
        if (it == realized.end()) it = realized.emplace(m, realize_simple(m)).first;
        return it->second;
    }
};

// ---- criteria ----

void c1_fundamental_characters(Context&) {
    for (long long alpha = -4; alpha <= 4; ++alpha) {
        QCharacter got = extract_qchar(fundamental_rep(alpha));
        require(got == fundamental_character(alpha),
                "fundamental character mismatch at alpha = " + std::to_string(alpha));
    }
}

void c2_adjacent_pair(Context& ctx) {
    // evaluation parameters a = 1, b = q^2
    Rep t = tensor_rep(fundamental_rep(0), fundamental_rep(2));
    ctx.pair_tensors.push_back(t);
    Mat h = h11_matrix(t);
    RatFunc a(1), b = qp(2);
    // weight-zero basis (v- (x) w+, v+ (x) w-) at indices (2, 1)
    require(h.at(2, 2) == qp(-2) * b - a, "h11 entry (1,1) wrong");
    require(h.at(2, 1) == a * (qp(-3) - qp(1)), "h11 entry (1,2) wrong");
    require(h.at(1, 2) == RatFunc(), "h11 entry (2,1) wrong");
    require(h.at(1, 1) == qp(-2) * a - b, "h11 entry (2,2) wrong");

    QCharacter got = extract_qchar(t);
    QCharacter expect = char_mul(sl2_cartan(), fundamental_character(0), fundamental_character(2));
    require(got == expect, "four-term character mismatch");
    require(got.terms.size() == 4, "character does not have four distinct l-weights");

    LWeightDecomp dec = lweight_decomposition(t, factor_candidates(t));
    Monomial target = mono_mul(ym(-2), ym(2, -1));
    bool found = false;
    for (const auto& blk : dec.blocks) {
        if (blk.monomial != target) continue;
        found = true;
        require(blk.basis.size() == 1, "l-weight space of the mixed monomial not thin");
        const Vec& v = blk.basis.front();
        require(v[0].is_zero() && v[3].is_zero(), "l-weight vector leaves the zero-weight space");
        RatFunc c1 = b - a;                // coefficient on v+ (x) w-, index 1
        RatFunc c2 = a * (qp(1) - qp(-1)); // coefficient on v- (x) w+, index 2
        require(v[1] * c2 == v[2] * c1, "l-weight vector is not proportional to the stated one");
        require(!v[1].is_zero(), "l-weight vector degenerate");
    }
    require(found, "mixed l-weight monomial missing");
}

void c3_segment_oracle(Context& ctx, std::ostream& log) {
    std::vector<KRString> strings;
    for (int k = 1; k <= 3; ++k)
        for (long long base = 0; base + 2 * (k - 1) <= 8; ++base) strings.push_back({base, k});

    size_t thin = 0, agree = 0;
    for (size_t i = 0; i < strings.size(); ++i) {
        for (size_t j = i; j < strings.size(); ++j) {
            const KRString &s1 = strings[i], &s2 = strings[j];
            long long dim = static_cast<long long>(s1.length + 1) * (s2.length + 1);
            if (dim > 64) continue;
            Monomial m1 = kr_monomial(s1), m2 = kr_monomial(s2);
            QCharacter prod = char_mul(sl2_cartan(), chi_simple_sl2(m1), chi_simple_sl2(m2));
            bool is_thin = true;
            for (const auto& [m, mult] : prod.terms)
                if (mult != 1) { is_thin = false; break; }
            if (!is_thin) continue;
            ++thin;
            Rep t = tensor_rep(ctx.realize(m1), ctx.realize(m2));
            bool matrix_simple = is_simple_thin(t);
            bool segment_simple = in_general_position(s1, s2);
            if (matrix_simple == segment_simple) ++agree;
            ctx.pair_tensors.push_back(std::move(t));
        }
    }
    log << "    [" << thin << " thin pairs of " << strings.size() * (strings.size() + 1) / 2
        << ", agreement " << agree << "/" << thin << "]\n";
    require(thin > 0, "no thin pairs found");
    require(agree == thin, "segment criterion and matrix oracle disagree");
}

void c4_pairwise_global(Context&, std::ostream& log) {
    PairwiseGlobalReport rep = verify_pairwise_global(4, 2, 3, 20, 1);
    log << "    [" << rep.tuples_checked << " tuples, oracle " << rep.oracle_agreements << "/"
        << rep.oracle_checked << "]\n";
    require(rep.counterexamples.empty(), "pairwise/global counterexample found");
    require(rep.oracle_checked >= 20, "fewer than 20 oracle confirmations");
    require(rep.oracle_disagreements.empty(), "matrix oracle disagreement");
}

void c5_trunc_agreement(Context&) {
    CheckReport rep = verify_trunc_agreement(4, 2);
    require(rep.pass(), rep.failures.empty() ? "no checks ran" : rep.failures.front());
    require(rep.checked > 0, "no checks ran");
}

void c6_trunc_factorization(Context&) {
    const CartanData& cd = sl2_cartan();
    size_t checked = 0;
    for (const Monomial& m : window_simples(4, 2)) {
        QCharacter c = chi_simple_sl2(m);
        for (long long level = -2; level <= 6; ++level) {
            Monomial low = trunc_parts(cd, m, level - 1).leq_part;
            Monomial high = trunc_parts(cd, m, level).geq_part;
            QCharacter rhs = char_mul(cd, QCharacter::from_monomial(low), chi_simple_sl2(high));
            require(char_trunc_geq(cd, c, level) == rhs,
                    "factorization identity fails at " + to_string(m) + ", L = " +
                        std::to_string(level));
            ++checked;
        }
    }
    require(checked > 0, "no checks ran");
}

void c7_character_validation(Context&) {
    const CartanData& cd = sl2_cartan();
    for (const Monomial& m : window_simples(4, 2)) {
        ValidationReport rep = validate_simple_character(cd, chi_simple_sl2(m));
        require(rep.pass, "window simple fails validation: " + to_string(m));
    }
    for (long long alpha = -4; alpha <= 4; ++alpha) {
        ValidationReport rep =
            validate_simple_character(cd, extract_qchar(fundamental_rep(alpha)), true);
        require(rep.pass, "fundamental descent check fails at alpha = " + std::to_string(alpha));
    }
    // rank-two ingested fundamental: forced first descent through the
    // shifted root monomial of its own node
    CartanData a2 = build_cartan("A2^1");
    auto y = [](int node, long long lambda, int e = 1) {
        return Monomial::variable(YKey{node, 0, Rat(lambda)}, e);
    };
    QCharacter ingested = QCharacter::from_monomial(y(1, 0));
    ingested.terms[mono_mul(y(1, 2, -1), y(2, 1))] = 1;
    ingested.terms[y(2, 3, -1)] = 1;
    require(validate_simple_character(a2, ingested, true).pass,
            "rank-two ingested fundamental fails validation");
}

void c8_triangular(Context&) {
    const CartanData& cd = sl2_cartan();
    CharacterProvider provider = [](const Monomial& m) { return chi_simple_sl2(m); };

    QCharacter prod = char_mul(cd, fundamental_character(2), fundamental_character(4));
    auto mult = triangular_decompose(cd, prod, provider);
    require(mult.size() == 2, "adjacent product should have two constituents");
    require(mult[mono_mul(ym(0), ym(2))] == 1 && mult[Monomial::one()] == 1,
            "adjacent product multiplicities wrong");

    std::vector<Monomial> pool = window_simples(4, 2);
    for (size_t i = 0; i < pool.size(); ++i) {
        for (size_t j = i; j < pool.size(); ++j) {
            QCharacter p = char_mul(cd, chi_simple_sl2(pool[i]), chi_simple_sl2(pool[j]));
            auto result = triangular_decompose(cd, p, provider);   // throws on negatives
            Monomial top = mono_mul(pool[i], pool[j]);
            auto it = result.find(top);
            require(it != result.end() && it->second == 1,
                    "top coefficient differs from one at " + to_string(top));
        }
    }
}

void c9_duality(Context&) {
    CheckReport rep = verify_duality(4, 2);
    require(rep.pass(), rep.failures.empty() ? "no checks ran" : rep.failures.front());
}

void c10_reflection(Context& ctx) {
    const CartanData& cd = sl2_cartan();
    for (long long ell : {2LL, 3LL, 4LL}) {
        CheckReport rep = verify_reflection(ell, 2);
        require(rep.pass(), "reflection identity fails in window " + std::to_string(ell));
    }
    // the literal variable-wise reflection (no inversion) is evaluated for
    // documentation: it is expected to fail termwise on this window
    size_t failed = 0, total = 0;
    for (const Monomial& m : window_simples(2, 2)) {
        ++total;
        QCharacter c = chi_simple_sl2(m);
        QCharacter target = chi_simple_sl2(bar_monomial(cd, m, 2));
        try {
            QCharacter literal;
            literal.highest = bar_monomial(cd, c.highest, 2);
            for (const auto& [t, k] : c.terms) literal.terms[bar_monomial(cd, t, 2)] += k;
            if (!(literal == target)) ++failed;
        } catch (const domain_error&) {
            ++failed;   // a term leaves the reflection window
        }
    }
    std::ostringstream note;
    note << "literal termwise reflection fails on " << failed << "/" << total
         << " window simples (recorded open question); the inverted form holds everywhere";
    ctx.notes.push_back(note.str());
    require(failed > 0, "expected the literal termwise reflection to fail somewhere");
}

void c11_root_monomial_cases(Context&) {
    auto yv = [](int node, int kappa, Rat lambda, int e = 1) {
        return Monomial::variable(YKey{node, kappa, lambda}, e);
    };
    CartanData a1 = build_cartan("A1^1");
    require(a_monomial(a1, {1, {0, Rat(1)}}) == mono_mul(ym(0), ym(2)),
            "rank-one root monomial wrong");
    CartanData a2 = build_cartan("A2^1");
    Monomial expect2 = mono_mul(mono_mul(yv(1, 0, Rat(0)), yv(1, 0, Rat(2))), yv(2, 0, Rat(1), -1));
    require(a_monomial(a2, {1, {0, Rat(1)}}) == expect2, "rank-two root monomial wrong");
    CartanData a22 = build_cartan("A2^2");
    Monomial expect22 =
        mono_mul(mono_mul(yv(1, 0, Rat(0)), yv(1, 0, Rat(2))), yv(1, 1, Rat(1), -1));
    require(a_monomial(a22, {1, {0, Rat(1)}}) == expect22, "twisted rank-one root monomial wrong");
    CartanData d43 = build_cartan("D4^3");
    bool rejected = false;
    try {
        (void)a_monomial(d43, {2, {1, Rat(0)}});
    } catch (const domain_error&) {
        rejected = true;
    }
    require(rejected, "root-inadmissible point was not rejected");
    Monomial roots = a_monomial(d43, {2, {0, Rat(3)}});
    Monomial expect43 = mono_mul(mono_mul(yv(2, 0, Rat(0)), yv(2, 0, Rat(6))),
                                 mono_inv(mono_mul(mono_mul(yv(1, 0, Rat(1)), yv(1, 1, Rat(1))),
                                                   yv(1, 2, Rat(1)))));
    require(roots == expect43, "triality root extraction wrong");
}

void c12_relations(Context& ctx, std::ostream& log) {
    size_t checked = 0;
    for (long long alpha = -4; alpha <= 4; ++alpha) {
        require(verify_defining_relations(fundamental_rep(alpha)).ok,
                "fundamental violates relations at alpha = " + std::to_string(alpha));
        ++checked;
    }
    for (const auto& [m, rep] : ctx.realized) {
        require(verify_defining_relations(rep).ok, "realized module violates relations");
        ++checked;
    }
    for (const Rep& t : ctx.pair_tensors) {
        require(verify_defining_relations(t).ok, "tensor module violates relations");
        ++checked;
    }
    log << "    [" << checked << " modules checked]\n";

    Rep corrupted = fundamental_rep(0);
    corrupted.x1p.at(0, 1) = RatFunc::q_power(1);
    RelationReport bad = verify_defining_relations(corrupted);
    require(!bad.ok, "corrupted module passes the relation check");
    require(!bad.first_violation.empty(), "violation not reported");
}

void c13_level_zero(Context&) {
    CheckReport rep = verify_level_zero(3, 3);
    require(rep.pass(), rep.failures.empty() ? "no checks ran" : rep.failures.front());
    require(rep.checked > 0, "no checks ran");
}

} // namespace

int main() {
    Context ctx;
    struct Item {
        int id;
        const char* label;
        std::function<void(Context&, std::ostream&)> run;
    };
    std::vector<Item> items = {
        {1, "fundamental module characters (alpha in [-4,4])",
         [](Context& c, std::ostream&) { c1_fundamental_characters(c); }},
        {2, "adjacent-pair h11 block and l-weight vectors",
         [](Context& c, std::ostream&) { c2_adjacent_pair(c); }},
        {3, "segment criterion vs matrix simplicity oracle (lengths <= 3, bases in [0,8])",
         [](Context& c, std::ostream& l) { c3_segment_oracle(c, l); }},
        {4, "pairwise vs global simplicity window (ell 4, lengths <= 2, tuples <= 3)",
         [](Context& c, std::ostream& l) { c4_pairwise_global(c, l); }},
        {5, "agreement of the two truncation filters on all window simples",
         [](Context& c, std::ostream&) { c5_trunc_agreement(c); }},
        {6, "upper truncation equals low part times high-part character",
         [](Context& c, std::ostream&) { c6_trunc_factorization(c); }},
        {7, "structural validation of every computed character",
         [](Context& c, std::ostream&) { c7_character_validation(c); }},
        {8, "triangular decomposition of products of window simples",
         [](Context& c, std::ostream&) { c8_triangular(c); }},
        {9, "termwise spectral inversion matches dual characters",
         [](Context& c, std::ostream&) { c9_duality(c); }},
        {10, "window reflection compatibility (ell in {2,3,4})",
         [](Context& c, std::ostream&) { c10_reflection(c); }},
        {11, "root-monomial case table including twisted rejection",
         [](Context& c, std::ostream&) { c11_root_monomial_cases(c); }},
        {12, "algebra relations on every module used above, with negative control",
         [](Context& c, std::ostream& l) { c12_relations(c, l); }},
        {13, "level-zero tuples are all simple",
         [](Context& c, std::ostream&) { c13_level_zero(c); }},
    };

    int failures = 0;
    for (const Item& item : items) {
        auto start = std::chrono::steady_clock::now();
        std::ostringstream log;
        std::string error;
        try {
            item.run(ctx, log);
        } catch (const std::exception& e) {
            error = e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (error.empty()) {
            std::cout << "[PASS] " << item.id << ". " << item.label << " ("
                      << static_cast<double>(ms) / 1000.0 << "s)\n";
        } else {
            ++failures;
            std::cout << "[FAIL] " << item.id << ". " << item.label << " ("
                      << static_cast<double>(ms) / 1000.0 << "s): " << error << "\n";
        }
        std::cout << log.str();
    }
    for (const std::string& note : ctx.notes) std::cout << "note: " << note << "\n";
    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed\n"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criteria failed\n");
    return failures;
}
