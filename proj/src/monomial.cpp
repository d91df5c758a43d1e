#include "qaff/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace qaff {

Monomial Monomial::variable(const YKey& k, int exponent) {
    Monomial m;
    m.mul_key(k, exponent);
    return m;
}

int Monomial::exponent_of(const YKey& k) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), k,
                               [](const auto& f, const YKey& key) { return f.first < key; });
    if (it != factors_.end() && it->first == k) return it->second;
    return 0;
}

Monomial& Monomial::mul_key(const YKey& k, int exponent) {
    if (exponent == 0) return *this;
    auto it = std::lower_bound(factors_.begin(), factors_.end(), k,
                               [](const auto& f, const YKey& key) { return f.first < key; });
    if (it != factors_.end() && it->first == k) {
        it->second += exponent;
        if (it->second == 0) factors_.erase(it);
    } else {
        factors_.insert(it, {k, exponent});
    }
    return *this;
}

bool operator<(const Monomial& a, const Monomial& b) {
    const auto& fa = a.factors_;
    const auto& fb = b.factors_;
    for (size_t i = 0; i < fa.size() && i < fb.size(); ++i) {
        if (fa[i].first < fb[i].first) return true;
        if (fb[i].first < fa[i].first) return false;
        if (fa[i].second != fb[i].second) return fa[i].second < fb[i].second;
    }
    return fa.size() < fb.size();
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (const auto& [k, e] : b.factors()) out.mul_key(k, e);
    return out;
}

Monomial mono_inv(const Monomial& m) {
    Monomial out;
    for (const auto& [k, e] : m.factors()) out.mul_key(k, -e);
    return out;
}

Monomial mono_pow(const Monomial& m, int e) {
    Monomial out;
    for (const auto& [k, u] : m.factors()) out.mul_key(k, u * e);
    return out;
}

YKey y_of_point(const CartanData& cd, int i, const SpectralPoint& p) {
    if (!cd.valid_node(i)) throw domain_error("y_of_point: invalid node");
    const int di = cd.d[static_cast<size_t>(i)];
    int kappa = (p.kappa * di) % cd.twist;
    if (kappa < 0) kappa += cd.twist;
    return YKey{i, kappa, p.lambda * Rat(di)};
}

Monomial a_monomial(const CartanData& cd, const APosition& pos) {
    const int i = pos.node;
    if (!cd.valid_node(i)) throw domain_error("a_monomial: invalid node");
    const SpectralPoint p = pos.point.reduced(cd.twist);
    const auto ri = cd.r[static_cast<size_t>(i)];
    Monomial out;

    auto key = [&](int node, int kappa, Rat lambda) {
        kappa %= cd.twist;
        if (kappa < 0) kappa += cd.twist;
        return YKey{node, kappa, std::move(lambda)};
    };

    if (cd.twist == 1) {
        const long long shift = ri.num();
        out.mul_key(key(i, p.kappa, p.lambda - Rat(shift)), 1);
        out.mul_key(key(i, p.kappa, p.lambda + Rat(shift)), 1);
        for (int j = 1; j <= cd.n; ++j) {
            if (j == i) continue;
            switch (cd.C[j][i]) {
                case -1:
                    out.mul_key(key(j, p.kappa, p.lambda), -1);
                    break;
                case -2:
                    out.mul_key(key(j, p.kappa, p.lambda - Rat(1)), -1);
                    out.mul_key(key(j, p.kappa, p.lambda + Rat(1)), -1);
                    break;
                case -3:
                    out.mul_key(key(j, p.kappa, p.lambda - Rat(2)), -1);
                    out.mul_key(key(j, p.kappa, p.lambda), -1);
                    out.mul_key(key(j, p.kappa, p.lambda + Rat(2)), -1);
                    break;
                default:
                    break;
            }
        }
        return out;
    }

    if (cd.type.is_a_even_twisted() && i == cd.n) {
        out.mul_key(key(i, p.kappa, p.lambda - Rat(1)), 1);
        out.mul_key(key(i, p.kappa, p.lambda + Rat(1)), 1);
        out.mul_key(key(i, p.kappa + 1, p.lambda), -1);      // the -a factor
        if (cd.n > 1) out.mul_key(key(i - 1, p.kappa, p.lambda), -1);
        return out;
    }

    if (ri == Rat(1)) {
        out.mul_key(key(i, p.kappa, p.lambda - Rat(1)), 1);
        out.mul_key(key(i, p.kappa, p.lambda + Rat(1)), 1);
        for (int j = 1; j <= cd.n; ++j) {
            if (j == i || cd.C[i][j] >= 0) continue;
            Rat power = cd.r[static_cast<size_t>(j)] * Rat(-cd.C[j][i]);
            if (!power.is_integer() || power.num() <= 0)
                throw std::logic_error("a_monomial: non-integral neighbor power");
            const long long mj = power.num();
            out.mul_key(key(j, p.kappa * static_cast<int>(mj), p.lambda * Rat(mj)), -1);
        }
        return out;
    }

    // long node of a twisted type: r_i equals the twisting order
    const int R = cd.twist;
    out.mul_key(key(i, p.kappa, p.lambda - Rat(R)), 1);
    out.mul_key(key(i, p.kappa, p.lambda + Rat(R)), 1);
    for (int j = 1; j <= cd.n; ++j) {
        if (j == i || cd.C[i][j] >= 0) continue;
        if (cd.r[static_cast<size_t>(j)] == Rat(R)) {
            out.mul_key(key(j, p.kappa, p.lambda), -1);
        } else {
            if (p.kappa % R != 0)
                throw domain_error("a_monomial: root-inadmissible point for node " + std::to_string(i));
            for (int t = 0; t < R; ++t)
                out.mul_key(key(j, t, p.lambda / Rat(R)), -1);
        }
    }
    return out;
}

Weight weight_of(const CartanData& cd, const Monomial& m) {
    Weight w(std::vector<long long>(static_cast<size_t>(cd.n), 0));
    for (const auto& [k, e] : m.factors()) {
        if (!cd.valid_node(k.node)) throw std::invalid_argument("weight_of: key node out of range");
        w.coeffs[static_cast<size_t>(k.node - 1)] += static_cast<long long>(e) * cd.mu[static_cast<size_t>(k.node)];
    }
    return w;
}

bool is_dominant(const Monomial& m) {
    return std::all_of(m.factors().begin(), m.factors().end(),
                       [](const auto& f) { return f.second > 0; });
}

namespace {

// Candidate subscripts for decompose_over_A: for each node, the inverse
// images of every combined-support key under every factor rule of that
// node's A-monomial.  Any position taking part in a decomposition has a
// factor meeting the combined support, so this set is complete for the
// lattice workloads here.
std::set<APosition> candidate_positions(const CartanData& cd, const Monomial& m, const Monomial& mref) {
    std::set<APosition> cands;
    std::vector<YKey> keys;
    for (const auto& [k, e] : m.factors()) keys.push_back(k);
    for (const auto& [k, e] : mref.factors()) keys.push_back(k);

    auto add = [&](int node, int kappa, Rat lambda) {
        kappa %= cd.twist;
        if (kappa < 0) kappa += cd.twist;
        cands.insert(APosition{node, SpectralPoint{kappa, std::move(lambda)}});
    };

    for (int j = 1; j <= cd.n; ++j) {
        const auto rj = cd.r[static_cast<size_t>(j)];
        const bool a_even_special = cd.type.is_a_even_twisted() && j == cd.n;
        for (const YKey& k : keys) {
            if (k.node == j) {
                // own factors sit at subscript +- shift
                long long shift = 1;
                if (cd.twist == 1) shift = rj.num();
                else if (!a_even_special && rj == Rat(cd.twist)) shift = cd.twist;
                add(j, k.kappa, k.lambda - Rat(shift));
                add(j, k.kappa, k.lambda + Rat(shift));
                if (a_even_special) add(j, k.kappa + 1, k.lambda);
            }
            if (cd.C[k.node][j] < 0 && k.node != j) {
                if (cd.twist == 1) {
                    switch (cd.C[k.node][j]) {
                        case -1: add(j, k.kappa, k.lambda); break;
                        case -2:
                            add(j, k.kappa, k.lambda - Rat(1));
                            add(j, k.kappa, k.lambda + Rat(1));
                            break;
                        case -3:
                            add(j, k.kappa, k.lambda - Rat(2));
                            add(j, k.kappa, k.lambda);
                            add(j, k.kappa, k.lambda + Rat(2));
                            break;
                        default: break;
                    }
                } else if (a_even_special || rj == Rat(1)) {
                    Rat power = cd.r[static_cast<size_t>(k.node)] * Rat(-cd.C[k.node][j]);
                    if (a_even_special) power = Rat(1);
                    if (power.is_integer() && power.num() > 0) {
                        const long long mj = power.num();
                        for (int kap = 0; kap < cd.twist; ++kap)
                            if ((kap * mj - k.kappa) % cd.twist == 0)
                                add(j, kap, k.lambda / Rat(mj));
                    }
                } else {
                    // long node: neighbor either plain or via roots
                    if (cd.r[static_cast<size_t>(k.node)] == Rat(cd.twist))
                        add(j, k.kappa, k.lambda);
                    else
                        add(j, 0, k.lambda * Rat(cd.twist));
                }
            }
        }
    }

    std::set<APosition> valid;
    for (const APosition& p : cands) {
        try {
            (void)a_monomial(cd, p);
            valid.insert(p);
        } catch (const domain_error&) {
            // root-inadmissible candidate, skip
        }
    }
    return valid;
}

} // namespace

std::optional<std::vector<APosition>> decompose_over_A(const CartanData& cd, const Monomial& m,
                                                       const Monomial& mref) {
    if (m == mref) return std::vector<APosition>{};

    std::vector<APosition> cands;
    std::vector<Monomial> amons;
    for (const APosition& p : candidate_positions(cd, m, mref)) {
        cands.push_back(p);
        amons.push_back(a_monomial(cd, p));
    }

    // target exponent vector of mref * m^{-1}
    Monomial target = mono_mul(mref, mono_inv(m));
    std::map<YKey, size_t> row_of;
    auto row_index = [&](const YKey& k) {
        auto it = row_of.find(k);
        if (it != row_of.end()) return it->second;
        size_t idx = row_of.size();
        row_of.emplace(k, idx);
        return idx;
    };
    for (const auto& [k, e] : target.factors()) row_index(k);
    for (const Monomial& am : amons)
        for (const auto& [k, e] : am.factors()) row_index(k);

    const size_t rows = row_of.size(), cols = cands.size();
    std::vector<std::vector<Rat>> M(rows, std::vector<Rat>(cols + 1, Rat(0)));
    for (size_t c = 0; c < cols; ++c)
        for (const auto& [k, e] : amons[c].factors()) M[row_of[k]][c] = Rat(e);
    for (const auto& [k, e] : target.factors()) M[row_of[k]][cols] = Rat(e);

    // exact row reduction; the A-exponent columns are independent, so a
    // consistent system has a unique solution
    std::vector<long long> pivot_row(cols, -1);
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t piv = rank;
        while (piv < rows && M[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(M[piv], M[rank]);
        Rat inv = Rat(1) / M[rank][c];
        for (size_t cc = c; cc <= cols; ++cc) M[rank][cc] *= inv;
        for (size_t rr = 0; rr < rows; ++rr) {
            if (rr == rank || M[rr][c].is_zero()) continue;
            Rat f = M[rr][c];
            for (size_t cc = c; cc <= cols; ++cc) M[rr][cc] -= f * M[rank][cc];
        }
        pivot_row[c] = static_cast<long long>(rank);
        ++rank;
    }
    for (size_t rr = rank; rr < rows; ++rr)
        if (!M[rr][cols].is_zero()) return std::nullopt;

    std::vector<long long> x(cols, 0);
    for (size_t c = 0; c < cols; ++c) {
        if (pivot_row[c] < 0) continue;
        const Rat& v = M[static_cast<size_t>(pivot_row[c])][cols];
        if (!v.is_integer() || v.num() < 0) return std::nullopt;
        x[c] = v.num();
    }
    // guard against free columns: confirm the reconstruction exactly
    Monomial rebuilt = mref;
    for (size_t c = 0; c < cols; ++c)
        for (long long t = 0; t < x[c]; ++t) rebuilt = mono_mul(rebuilt, mono_inv(amons[c]));
    if (rebuilt != m) return std::nullopt;

    std::vector<APosition> out;
    for (size_t c = 0; c < cols; ++c)
        for (long long t = 0; t < x[c]; ++t) out.push_back(cands[c]);
    std::sort(out.begin(), out.end());
    return out;
}

bool leq(const CartanData& cd, const Monomial& m, const Monomial& mref) {
    return decompose_over_A(cd, m, mref).has_value();
}

Rat base_level(const CartanData& cd, const YKey& k) {
    if (!cd.valid_node(k.node)) throw std::invalid_argument("base_level: key node out of range");
    return k.lambda / Rat(cd.d[static_cast<size_t>(k.node)]);
}

long long base_level_int(const CartanData& cd, const YKey& k) {
    Rat l = base_level(cd, k);
    if (!l.is_integer()) throw domain_error("monomial is not on the integer lattice");
    return l.num();
}

namespace {

bool extreme_negative(const CartanData& cd, const Monomial& m, bool maximal) {
    if (m.is_one()) throw domain_error("right/left negativity undefined for the identity monomial");
    Rat extreme;
    bool first = true;
    for (const auto& [k, e] : m.factors()) {
        Rat l = base_level(cd, k);
        if (first || (maximal ? extreme < l : l < extreme)) extreme = l;
        first = false;
    }
    for (const auto& [k, e] : m.factors())
        if (base_level(cd, k) == extreme && e > 0) return false;
    return true;
}

} // namespace

bool is_right_negative(const CartanData& cd, const Monomial& m) { return extreme_negative(cd, m, true); }
bool is_left_negative(const CartanData& cd, const Monomial& m) { return extreme_negative(cd, m, false); }

TruncParts trunc_parts(const CartanData& cd, const Monomial& m, long long level) {
    TruncParts p;
    for (const auto& [k, e] : m.factors()) {
        long long l = base_level_int(cd, k);
        if (l <= level) p.leq_part.mul_key(k, e);
        if (l == level) p.eq_part.mul_key(k, e);
        if (l >= level) p.geq_part.mul_key(k, e);
    }
    return p;
}

Monomial tau_shift(const CartanData& cd, const Monomial& m, const Rat& s) {
    Monomial out;
    for (const auto& [k, e] : m.factors()) {
        YKey nk = k;
        nk.lambda = k.lambda + Rat(cd.d[static_cast<size_t>(k.node)]) * s;
        out.mul_key(nk, e);
    }
    return out;
}

Monomial sigma_involution(const Monomial& m, int twist) {
    Monomial out;
    for (const auto& [k, e] : m.factors()) {
        int kappa = (-k.kappa) % twist;
        if (kappa < 0) kappa += twist;
        out.mul_key(YKey{k.node, kappa, -k.lambda}, -e);
    }
    return out;
}

Monomial dual_highest_monomial(const CartanData& cd, const Monomial& m) {
    if (!is_dominant(m)) throw domain_error("dual_highest_monomial: input not dominant");
    Monomial out;
    for (const auto& [k, e] : m.factors()) {
        const size_t i = static_cast<size_t>(k.node);
        const bool sign_twist =
            cd.type.is_twisted() && cd.type.family == 'A' && cd.r[i] <= Rat(1);
        int node = cd.type.is_twisted() ? k.node : cd.bar_node[i];
        int kappa = (-k.kappa + (sign_twist ? 1 : 0)) % cd.twist;
        if (kappa < 0) kappa += cd.twist;
        Rat lambda = -k.lambda - Rat(cd.d[i] * cd.rvee_hvee);
        out.mul_key(YKey{node, kappa, lambda}, e);
    }
    return out;
}

Monomial bar_monomial(const CartanData& cd, const Monomial& m, long long ell) {
    Monomial out;
    for (const auto& [k, e] : m.factors()) {
        long long l = base_level_int(cd, k);
        if (l < 0 || l > ell)
            throw domain_error("bar_monomial: level " + std::to_string(l) + " outside [0, " +
                               std::to_string(ell) + "]");
        int kappa = (-k.kappa) % cd.twist;
        if (kappa < 0) kappa += cd.twist;
        out.mul_key(YKey{k.node, kappa, Rat(cd.d[static_cast<size_t>(k.node)] * (ell - l))}, e);
    }
    return out;
}

bool in_c_ell(const CartanData& cd, const Monomial& m, long long ell) {
    if (!is_dominant(m)) return false;
    for (const auto& [k, e] : m.factors()) {
        Rat l = base_level(cd, k);
        if (!l.is_integer() || l.num() < 0 || l.num() > ell) return false;
    }
    return true;
}

bool cyclic_pair_ok(const CartanData& cd, const Monomial& m, const Monomial& mprime) {
    for (const auto& [ka, ea] : m.factors()) {
        const int di = cd.d[static_cast<size_t>(ka.node)];
        for (const auto& [kb, eb] : mprime.factors()) {
            Rat t = (kb.lambda - ka.lambda) / Rat(di);
            if (!t.is_integer() || t.num() <= 0) continue;
            // epsilon steps d_i * k reach every class unless d_i kills them
            if (di % cd.twist == 0 && kb.kappa != ka.kappa) continue;
            return false;
        }
    }
    return true;
}

Monomial pi_twisted(const CartanData& cd, const std::vector<TildeFactor>& tilde_m) {
    if (!cd.type.is_twisted()) throw domain_error("pi_twisted: type is untwisted");
    Monomial out;
    for (const TildeFactor& f : tilde_m) {
        if (!cd.valid_node(f.node)) throw domain_error("pi_twisted: invalid orbit representative");
        const int di = cd.d[static_cast<size_t>(f.node)];
        int kappa = ((f.point.kappa + f.sigma_power) * di) % cd.twist;
        if (kappa < 0) kappa += cd.twist;
        out.mul_key(YKey{f.node, kappa, f.point.lambda * Rat(di)}, f.exponent);
    }
    return out;
}

std::string to_string(const Monomial& m) {
    if (m.is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, e] : m.factors()) {
        if (!first) os << ";";
        first = false;
        os << "Y[" << k.node << "," << k.kappa << "," << k.lambda.str() << "]";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

std::string to_string(const APosition& p) {
    return "A[" + std::to_string(p.node) + "," + std::to_string(p.point.kappa) + "," +
           p.point.lambda.str() + "]";
}

namespace {

Rat parse_rat(const std::string& s) {
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(s));
        return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw domain_error("cannot parse rational '" + s + "'");
    }
}

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

} // namespace

Monomial parse_monomial(const std::string& text) {
    std::string t = strip(text);
    if (t.empty()) throw domain_error("empty monomial literal");
    if (t == "1") return Monomial::one();
    Monomial out;
    size_t pos = 0;
    while (pos < t.size()) {
        size_t end = t.find_first_of(";*", pos);
        std::string tok = strip(t.substr(pos, end == std::string::npos ? std::string::npos : end - pos));
        pos = end == std::string::npos ? t.size() : end + 1;
        if (tok.empty()) throw domain_error("empty factor in monomial literal");
        if (tok == "1") continue;
        if (tok[0] != 'Y' && tok[0] != 'y')
            throw domain_error("factor must start with Y: '" + tok + "'");
        size_t open = tok.find('[');
        size_t close = tok.find(']');
        if (open == std::string::npos || close == std::string::npos || close < open)
            throw domain_error("malformed factor '" + tok + "'");
        std::string inner = tok.substr(open + 1, close - open - 1);
        std::vector<std::string> parts;
        size_t p = 0;
        while (true) {
            size_t comma = inner.find(',', p);
            parts.push_back(strip(inner.substr(p, comma == std::string::npos ? std::string::npos : comma - p)));
            if (comma == std::string::npos) break;
            p = comma + 1;
        }
        if (parts.size() != 3) throw domain_error("factor needs [node,kappa,lambda]: '" + tok + "'");
        int exponent = 1;
        std::string rest = strip(tok.substr(close + 1));
        if (!rest.empty()) {
            if (rest[0] != '^') throw domain_error("unexpected trailing text '" + rest + "'");
            try {
                exponent = std::stoi(rest.substr(1));
            } catch (const std::exception&) {
                throw domain_error("cannot parse exponent '" + rest + "'");
            }
        }
        YKey key;
        try {
            key.node = std::stoi(parts[0]);
            key.kappa = std::stoi(parts[1]);
        } catch (const std::exception&) {
            throw domain_error("cannot parse factor indices '" + tok + "'");
        }
        key.lambda = parse_rat(parts[2]);
        out.mul_key(key, exponent);
    }
    return out;
}

} // namespace qaff
