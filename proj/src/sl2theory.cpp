#include "qaff/sl2theory.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>

#include "qaff/sl2engine.hpp"

namespace qaff {

namespace {

YKey ykey(long long lambda) { return YKey{1, 0, Rat(lambda)}; }

void require_sl2_lattice(const Monomial& m, const char* where) {
    if (!is_dominant(m)) throw domain_error(std::string(where) + ": monomial not dominant");
    for (const auto& [k, e] : m.factors())
        if (k.node != 1 || k.kappa != 0 || !k.lambda.is_integer())
            throw domain_error(std::string(where) + ": monomial outside the rank-one integer lattice");
}

} // namespace

Monomial kr_monomial(const KRString& s) {
    if (s.length < 0) throw std::invalid_argument("kr_monomial: negative length");
    Monomial m;
    for (int j = 0; j < s.length; ++j) m.mul_key(ykey(s.base + 2 * j), 1);
    return m;
}

bool in_general_position(const KRString& a, const KRString& b) {
    if (a.length == 0 || b.length == 0) return true;
    long long pa = ((a.base % 2) + 2) % 2, pb = ((b.base % 2) + 2) % 2;
    if (pa != pb) return true;
    // work in step units: the support of a is [ua, ua + length - 1]
    long long ua = (a.base - pa) / 2, ub = (b.base - pb) / 2;
    long long ea = ua + a.length - 1, eb = ub + b.length - 1;
    bool union_is_segment = std::max(ua, ub) <= std::min(ea, eb) + 1;
    if (!union_is_segment) return true;
    long long lo = std::min(ua, ub), hi = std::max(ea, eb);
    bool proper_a = !(lo == ua && hi == ea);
    bool proper_b = !(lo == ub && hi == eb);
    return !(proper_a && proper_b);
}

StringFactorization factor_into_strings(const Monomial& m) {
    require_sl2_lattice(m, "factor_into_strings");
    // strings never mix parity classes, so peel runs inside each class
    std::map<long long, int> by_parity[2];
    for (const auto& [k, e] : m.factors()) {
        long long l = k.lambda.num();
        by_parity[((l % 2) + 2) % 2][l] = e;
    }

    StringFactorization out;
    for (auto& mult : by_parity) {
        while (!mult.empty()) {
            // peel one copy of every point of each maximal consecutive run
            auto it = mult.begin();
            while (it != mult.end()) {
                long long start = it->first;
                long long cur = start;
                std::vector<long long> run{cur};
                auto jt = std::next(it);
                while (jt != mult.end() && jt->first == cur + 2) {
                    cur = jt->first;
                    run.push_back(cur);
                    ++jt;
                }
                out.strings.push_back(KRString{start, static_cast<int>(run.size())});
                for (long long l : run) {
                    auto mt = mult.find(l);
                    if (--mt->second == 0) mult.erase(mt);
                }
                it = mult.lower_bound(cur + 1);
            }
        }
    }
    std::sort(out.strings.begin(), out.strings.end());

    // invariant guard: pairwise general position and exact reconstruction
    Monomial rebuilt;
    for (const KRString& s : out.strings) rebuilt = mono_mul(rebuilt, kr_monomial(s));
    if (rebuilt != m) throw std::logic_error("factor_into_strings: reconstruction failed");
    for (size_t i = 0; i < out.strings.size(); ++i)
        for (size_t j = i + 1; j < out.strings.size(); ++j)
            if (!in_general_position(out.strings[i], out.strings[j]))
                throw std::logic_error("factor_into_strings: special-position strings produced");
    return out;
}

namespace {

QCharacter chi_kr_ladder(const KRString& s) {
    const CartanData& cd = sl2_cartan();
    QCharacter c;
    Monomial top = kr_monomial(s);
    c.highest = top;
    Monomial term = top;
    c.terms[term] = 1;
    for (int j = 1; j <= s.length; ++j) {
        APosition pos{1, SpectralPoint{0, Rat(s.base + 2 * (s.length - j) + 1)}};
        term = mono_mul(term, mono_inv(a_monomial(cd, pos)));
        c.terms[term] += 1;
    }
    return c;
}

// one-time cross-validation of the ladder against the matrix engine
void validate_ladder_against_engine() {
    for (long long base : {-2LL, 0LL, 1LL}) {
        for (int k = 1; k <= 3; ++k) {
            KRString s{base, k};
            QCharacter ladder = chi_kr_ladder(s);
            QCharacter oracle = extract_qchar(realize_simple(kr_monomial(s)));
            if (!(ladder == oracle))
                throw std::logic_error("segment ladder disagrees with the matrix oracle at base " +
                                       std::to_string(base) + ", length " + std::to_string(k));
        }
    }
}

} // namespace

QCharacter chi_kr(const KRString& s) {
    if (s.length > 3) {
        static std::once_flag flag;
        std::call_once(flag, validate_ladder_against_engine);
    }
    return chi_kr_ladder(s);
}

QCharacter chi_simple_sl2(const Monomial& m) {
    const CartanData& cd = sl2_cartan();
    require_sl2_lattice(m, "chi_simple_sl2");
    QCharacter c = QCharacter::unit();
    for (const KRString& s : factor_into_strings(m).strings) c = char_mul(cd, c, chi_kr(s));
    ValidationReport rep = validate_simple_character(cd, c);
    if (!rep.pass)
        throw std::logic_error("chi_simple_sl2: structural validation failed: " + rep.failures.front());
    c.simple_validated = true;
    return c;
}

bool tensor_simple_sl2(const std::vector<Monomial>& ms) {
    std::vector<std::vector<KRString>> factors;
    factors.reserve(ms.size());
    for (const Monomial& m : ms) factors.push_back(factor_into_strings(m).strings);
    for (size_t i = 0; i < factors.size(); ++i)
        for (size_t j = i + 1; j < factors.size(); ++j)
            for (const KRString& a : factors[i])
                for (const KRString& b : factors[j])
                    if (!in_general_position(a, b)) return false;
    return true;
}

std::vector<KRString> window_strings(long long ell, int maxk) {
    std::vector<KRString> out;
    for (int k = 1; k <= maxk; ++k)
        for (long long base = 0; base + 2 * (k - 1) <= ell; ++base)
            out.push_back(KRString{base, k});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Monomial> window_simples(long long ell, int maxk) {
    std::vector<KRString> strings = window_strings(ell, maxk);
    std::set<Monomial> pool;
    for (const KRString& s : strings) pool.insert(kr_monomial(s));
    for (size_t i = 0; i < strings.size(); ++i)
        for (size_t j = i; j < strings.size(); ++j)
            if (in_general_position(strings[i], strings[j]))
                pool.insert(mono_mul(kr_monomial(strings[i]), kr_monomial(strings[j])));
    return {pool.begin(), pool.end()};
}

Json CheckReport::to_json() const {
    Json j;
    j["check"] = name;
    j["checked"] = checked;
    j["pass"] = pass();
    j["failures"] = failures;
    return j;
}

Json PairwiseGlobalReport::to_json() const {
    Json j;
    j["window"] = {{"ell", ell}, {"maxk", maxk}, {"max_tuple", max_tuple}};
    j["pool_size"] = pool_size;
    j["tuples_checked"] = tuples_checked;
    j["counterexamples"] = counterexamples;
    Json oracle;
    oracle["checked"] = oracle_checked;
    oracle["agreements"] = oracle_agreements;
    oracle["disagreements"] = oracle_disagreements;
    j["oracle"] = oracle;
    j["pass"] = pass();
    return j;
}

namespace {

std::string tuple_key(const std::vector<Monomial>& tuple) {
    std::ostringstream os;
    for (size_t i = 0; i < tuple.size(); ++i) {
        if (i) os << " | ";
        os << to_string(tuple[i]);
    }
    return os.str();
}

void for_each_multiset(size_t pool, int size, const std::function<void(const std::vector<size_t>&)>& fn) {
    std::vector<size_t> idx(static_cast<size_t>(size), 0);
    while (true) {
        fn(idx);
        int p = size - 1;
        while (p >= 0 && idx[static_cast<size_t>(p)] == pool - 1) --p;
        if (p < 0) return;
        size_t v = idx[static_cast<size_t>(p)] + 1;
        for (size_t t = static_cast<size_t>(p); t < idx.size(); ++t) idx[t] = v;
    }
}

long long simple_dimension(const Monomial& m) {
    long long d = 1;
    for (const KRString& s : factor_into_strings(m).strings) d *= s.length + 1;
    return d;
}

} // namespace

PairwiseGlobalReport verify_pairwise_global(long long ell, int maxk, int max_tuple,
                                            size_t oracle_samples, uint64_t seed) {
    PairwiseGlobalReport rep;
    rep.ell = ell;
    rep.maxk = maxk;
    rep.max_tuple = max_tuple;
    std::vector<Monomial> pool = window_simples(ell, maxk);
    rep.pool_size = pool.size();

    for (int size = 2; size <= max_tuple; ++size) {
        for_each_multiset(pool.size(), size, [&](const std::vector<size_t>& idx) {
            std::vector<Monomial> tuple;
            tuple.reserve(idx.size());
            for (size_t i : idx) tuple.push_back(pool[i]);
            bool pairwise = true;
            for (size_t i = 0; i < tuple.size() && pairwise; ++i)
                for (size_t j = i + 1; j < tuple.size() && pairwise; ++j)
                    pairwise = tensor_simple_sl2({tuple[i], tuple[j]});
            bool global = tensor_simple_sl2(tuple);
            ++rep.tuples_checked;
            if (pairwise != global) rep.counterexamples.push_back(tuple_key(tuple));
        });
    }

    // sampled confirmations against the matrix oracle on thin configurations
    std::mt19937_64 rng(seed);
    std::map<Monomial, Rep> rep_cache;
    auto realized = [&](const Monomial& m) -> const Rep& {
        auto it = rep_cache.find(m);
        if (it == rep_cache.end()) it = rep_cache.emplace(m, realize_simple(m)).first;
        return it->second;
    };
    size_t attempts = 0;
    const size_t max_attempts = oracle_samples * 60 + 100;
    std::uniform_int_distribution<size_t> pick(0, pool.empty() ? 0 : pool.size() - 1);
    std::uniform_int_distribution<int> tuple_size(2, std::max(2, std::min(max_tuple, 3)));
    while (rep.oracle_checked < oracle_samples && attempts++ < max_attempts && !pool.empty()) {
        std::vector<Monomial> tuple;
        int size = tuple_size(rng);
        long long dim = 1;
        for (int t = 0; t < size; ++t) {
            tuple.push_back(pool[pick(rng)]);
            dim *= simple_dimension(tuple.back());
        }
        if (dim > 64) continue;
        try {
            Rep big = realized(tuple[0]);
            for (size_t t = 1; t < tuple.size(); ++t) big = tensor_rep(big, realized(tuple[t]));
            bool matrix_simple = is_simple_thin(big);
            bool combinatorial = tensor_simple_sl2(tuple);
            ++rep.oracle_checked;
            if (matrix_simple == combinatorial)
                ++rep.oracle_agreements;
            else
                rep.oracle_disagreements.push_back(tuple_key(tuple));
        } catch (const domain_error&) {
            // non-thin configuration, resample
        }
    }
    return rep;
}

CheckReport verify_trunc_agreement(long long ell, int maxk) {
    const CartanData& cd = sl2_cartan();
    CheckReport rep;
    rep.name = "trunc-agreement";
    for (const Monomial& m : window_simples(ell, maxk)) {
        QCharacter c = chi_simple_sl2(m);
        for (long long level = -1; level <= ell + 1; ++level) {
            ++rep.checked;
            if (!(char_trunc_geq(cd, c, level) == char_trunc_geq_alt(cd, c, level)))
                rep.failures.push_back("upper filters differ at " + to_string(m) + ", L=" +
                                       std::to_string(level));
            if (!(char_trunc_leq(cd, c, level) == char_trunc_leq_alt(cd, c, level)))
                rep.failures.push_back("lower filters differ at " + to_string(m) + ", L=" +
                                       std::to_string(level));
        }
    }
    return rep;
}

CheckReport verify_trunc_factorization(long long ell, int maxk) {
    const CartanData& cd = sl2_cartan();
    CheckReport rep;
    rep.name = "trunc-factorization";
    for (const Monomial& m : window_simples(ell, maxk)) {
        QCharacter c = chi_simple_sl2(m);
        for (long long level = -1; level <= ell + 1; ++level) {
            ++rep.checked;
            Monomial low = trunc_parts(cd, m, level - 1).leq_part;
            Monomial high = trunc_parts(cd, m, level).geq_part;
            QCharacter rhs = char_mul(cd, QCharacter::from_monomial(low), chi_simple_sl2(high));
            if (!(char_trunc_geq(cd, c, level) == rhs))
                rep.failures.push_back("factorization identity fails at " + to_string(m) + ", L=" +
                                       std::to_string(level));
        }
    }
    return rep;
}

CheckReport verify_duality(long long ell, int maxk) {
    const CartanData& cd = sl2_cartan();
    CheckReport rep;
    rep.name = "duality";
    for (const Monomial& m : window_simples(ell, maxk)) {
        ++rep.checked;
        QCharacter c = chi_simple_sl2(m);
        Monomial dual = dual_highest_monomial(cd, m);
        QCharacter image;
        image.highest = dual;
        for (const auto& [t, k] : c.terms) image.terms[sigma_involution(t, cd.twist)] += k;
        if (!(image == chi_simple_sl2(dual)))
            rep.failures.push_back("duality fails at " + to_string(m));
    }
    return rep;
}

CheckReport verify_reflection(long long ell, int maxk) {
    const CartanData& cd = sl2_cartan();
    CheckReport rep;
    rep.name = "reflection";
    for (const Monomial& m : window_simples(ell, maxk)) {
        ++rep.checked;
        QCharacter lhs = zeta_map(cd, chi_simple_sl2(m), ell);
        QCharacter rhs = chi_simple_sl2(bar_monomial(cd, m, ell));
        if (!(lhs == rhs))
            rep.failures.push_back("reflection fails at " + to_string(m) + ", ell=" +
                                   std::to_string(ell));
    }
    return rep;
}

CheckReport verify_level_zero(int max_copies, int max_tuple) {
    CheckReport rep;
    rep.name = "level-zero";
    std::vector<Monomial> pool;
    for (int t = 1; t <= max_copies; ++t)
        pool.push_back(mono_pow(Monomial::variable(ykey(0)), t));
    for (int size = 2; size <= max_tuple; ++size) {
        for_each_multiset(pool.size(), size, [&](const std::vector<size_t>& idx) {
            std::vector<Monomial> tuple;
            for (size_t i : idx) tuple.push_back(pool[i]);
            ++rep.checked;
            if (!tensor_simple_sl2(tuple))
                rep.failures.push_back("level-zero tuple not simple: " + tuple_key(tuple));
        });
    }
    return rep;
}

} // namespace qaff
