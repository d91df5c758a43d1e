#include "qaff/sl2engine.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qaff {

const CartanData& sl2_cartan() {
    static const CartanData cd = build_cartan(AffineType{'A', 1, 1});
    return cd;
}

Rep fundamental_rep(long long alpha) {
    Rep r;
    r.dim = 2;
    RatFunc a = RatFunc::q_power(alpha);
    RatFunc ai = RatFunc::q_power(-alpha);
    RatFunc q = RatFunc::q_power(1);
    RatFunc qi = RatFunc::q_power(-1);

    Mat z(2, 2);
    r.x1p = z; r.x1p.at(0, 1) = RatFunc(1);
    r.x1m = z; r.x1m.at(1, 0) = RatFunc(1);
    r.x0p = z; r.x0p.at(1, 0) = a;
    r.x0m = z; r.x0m.at(0, 1) = ai;
    r.k1 = z;  r.k1.at(0, 0) = q;  r.k1.at(1, 1) = qi;
    r.k1i = z; r.k1i.at(0, 0) = qi; r.k1i.at(1, 1) = q;
    r.k0 = z;  r.k0.at(0, 0) = qi; r.k0.at(1, 1) = q;
    r.k0i = z; r.k0i.at(0, 0) = q; r.k0i.at(1, 1) = qi;
    r.factor_alphas = {alpha};
    return r;
}

Rep tensor_rep(const Rep& a, const Rep& b) {
    Rep r;
    r.dim = a.dim * b.dim;
    Mat ia = Mat::identity(static_cast<size_t>(a.dim));
    Mat ib = Mat::identity(static_cast<size_t>(b.dim));
    r.x1p = kron(a.x1p, ib) + kron(a.k1, b.x1p);
    r.x0p = kron(a.x0p, ib) + kron(a.k0, b.x0p);
    r.x1m = kron(a.x1m, b.k1i) + kron(ia, b.x1m);
    r.x0m = kron(a.x0m, b.k0i) + kron(ia, b.x0m);
    r.k1 = kron(a.k1, b.k1);
    r.k0 = kron(a.k0, b.k0);
    r.k1i = kron(a.k1i, b.k1i);
    r.k0i = kron(a.k0i, b.k0i);
    r.factor_alphas = a.factor_alphas;
    r.factor_alphas.insert(r.factor_alphas.end(), b.factor_alphas.begin(), b.factor_alphas.end());
    r.restricted = a.restricted || b.restricted;
    return r;
}

Mat h11_matrix(const Rep& r) {
    return (r.x1p * r.x0p).scaled(RatFunc::q_power(-2)) - (r.x0p * r.x1p);
}

namespace {

// q-power recognition: num and den must be monomials with coefficient 1
std::optional<long long> as_q_power(const RatFunc& f) {
    auto mono_exp = [](const Poly& p) -> std::optional<long long> {
        if (p.is_zero()) return std::nullopt;
        const long long d = p.degree();
        for (long long k = 0; k < d; ++k)
            if (p.coeff(static_cast<size_t>(k)) != 0) return std::nullopt;
        if (p.leading() != 1) return std::nullopt;
        return d;
    };
    auto n = mono_exp(f.num());
    auto m = mono_exp(f.den());
    if (!n || !m) return std::nullopt;
    return *n - *m;
}

std::vector<long long> k1_weight_exponents(const Rep& r) {
    std::vector<long long> w(static_cast<size_t>(r.dim));
    for (size_t i = 0; i < w.size(); ++i) {
        for (size_t j = 0; j < w.size(); ++j)
            if (i != j && !r.k1.at(i, j).is_zero())
                throw domain_error("k1 action is not diagonal in the stored basis");
        auto e = as_q_power(r.k1.at(i, i));
        if (!e) throw domain_error("k1 eigenvalue is not an integer power of q (type-1 violation)");
        w[i] = *e;
    }
    return w;
}

long long sl2_weight(const Monomial& m) {
    long long w = 0;
    for (const auto& [k, e] : m.factors()) w += e;
    return w;
}

// predicted h11 eigenvalue: sum of u * q^lambda over the support
RatFunc h11_eigenvalue(const Monomial& m) {
    RatFunc v;
    for (const auto& [k, e] : m.factors()) {
        if (k.node != 1 || k.kappa != 0 || !k.lambda.is_integer())
            throw domain_error("monomial is outside the rank-one integer lattice");
        v += RatFunc(e) * RatFunc::q_power(k.lambda.num());
    }
    return v;
}

} // namespace

LWeightDecomp lweight_decomposition(const Rep& r, const std::vector<Monomial>& candidates) {
    {
        std::set<Monomial> dedup(candidates.begin(), candidates.end());
        if (dedup.size() != candidates.size())
            throw std::invalid_argument("lweight_decomposition: candidates must be pairwise distinct");
    }
    const auto weights = k1_weight_exponents(r);
    std::map<long long, std::vector<size_t>> weight_indices;
    for (size_t i = 0; i < weights.size(); ++i) weight_indices[weights[i]].push_back(i);

    Mat H = h11_matrix(r);
    for (size_t i = 0; i < weights.size(); ++i)
        for (size_t j = 0; j < weights.size(); ++j)
            if (weights[i] != weights[j] && !H.at(i, j).is_zero())
                throw std::logic_error("h11 does not preserve the weight decomposition");

    std::map<long long, std::vector<std::pair<Monomial, RatFunc>>> cands;
    for (const Monomial& m : candidates) cands[sl2_weight(m)].push_back({m, h11_eigenvalue(m)});
    for (auto& [w, list] : cands) {
        for (size_t i = 0; i < list.size(); ++i)
            for (size_t j = i + 1; j < list.size(); ++j)
                if (list[i].second == list[j].second)
                    throw domain_error("ambiguous spectrum: " + to_string(list[i].first) + " and " +
                                       to_string(list[j].first) + " share weight and eigenvalue");
    }

    LWeightDecomp out;
    for (const auto& [w, idx] : weight_indices) {
        const size_t dw = idx.size();
        Mat Hw(dw, dw);
        for (size_t i = 0; i < dw; ++i)
            for (size_t j = 0; j < dw; ++j) Hw.at(i, j) = H.at(idx[i], idx[j]);

        size_t covered_here = 0;
        auto it = cands.find(w);
        if (it != cands.end()) {
            for (const auto& [mono, eig] : it->second) {
                Mat N = Hw - Mat::identity(dw).scaled(eig);
                // grow the generalized eigenspace until the kernel stabilizes
                std::vector<Vec> ker = kernel(N);
                if (ker.empty()) continue;
                Mat P = N;
                for (size_t t = 1; t < dw; ++t) {
                    P = P * N;
                    std::vector<Vec> k2 = kernel(P);
                    if (k2.size() == ker.size()) break;
                    ker = std::move(k2);
                }
                LWeightBlock block;
                block.monomial = mono;
                for (const Vec& v : ker) {
                    Vec full(static_cast<size_t>(r.dim));
                    for (size_t i = 0; i < dw; ++i) full[idx[i]] = v[i];
                    block.basis.push_back(std::move(full));
                }
                covered_here += block.basis.size();
                out.blocks.push_back(std::move(block));
            }
        }
        if (covered_here != dw)
            throw domain_error("candidate set does not cover the spectrum at weight " +
                               std::to_string(w));
        out.covered += covered_here;
    }
    return out;
}

std::vector<Monomial> factor_candidates(const Rep& r) {
    std::set<Monomial> prods{Monomial::one()};
    for (long long alpha : r.factor_alphas) {
        Monomial hi = Monomial::variable(YKey{1, 0, Rat(alpha - 2)});
        Monomial lo = Monomial::variable(YKey{1, 0, Rat(alpha)}, -1);
        std::set<Monomial> next;
        for (const Monomial& m : prods) {
            next.insert(mono_mul(m, hi));
            next.insert(mono_mul(m, lo));
        }
        prods = std::move(next);
    }
    return {prods.begin(), prods.end()};
}

QCharacter extract_qchar(const Rep& r) {
    const CartanData& cd = sl2_cartan();
    LWeightDecomp dec = lweight_decomposition(r, factor_candidates(r));

    QCharacter qc;
    qc.highest = Monomial::one();
    for (long long alpha : r.factor_alphas)
        qc.highest = mono_mul(qc.highest, Monomial::variable(YKey{1, 0, Rat(alpha - 2)}));
    for (const LWeightBlock& b : dec.blocks)
        if (!b.basis.empty()) qc.terms[b.monomial] += static_cast<int>(b.basis.size());

    if (!r.restricted) {
        QCharacter expect = QCharacter::unit();
        for (long long alpha : r.factor_alphas) {
            QCharacter f = QCharacter::from_monomial(Monomial::variable(YKey{1, 0, Rat(alpha - 2)}));
            f.terms[Monomial::variable(YKey{1, 0, Rat(alpha)}, -1)] = 1;
            expect = char_mul(cd, expect, f);
        }
        if (!(qc == expect))
            throw std::logic_error("extract_qchar: decomposition disagrees with the factor product");
    }
    return qc;
}

namespace {

std::vector<const Mat*> generator_set(const Rep& r) {
    return {&r.x0p, &r.x0m, &r.x1p, &r.x1m};
}

// span of the images of v under words in the generators
RowSpace closure_of(const Rep& r, const Vec& seed) {
    RowSpace rs;
    std::vector<Vec> work;
    if (rs.insert(seed)) work.push_back(seed);
    auto gens = generator_set(r);
    while (!work.empty()) {
        Vec v = std::move(work.back());
        work.pop_back();
        for (const Mat* g : gens) {
            Vec w = g->apply(v);
            if (rs.insert(w)) {
                if (rs.rank() == static_cast<size_t>(r.dim)) return rs;
                work.push_back(std::move(w));
            }
        }
    }
    return rs;
}

Rep restrict_to(const Rep& big, const RowSpace& rs, std::vector<long long> alphas) {
    const size_t k = rs.rank();
    Rep out;
    out.dim = static_cast<int>(k);
    out.factor_alphas = std::move(alphas);
    out.restricted = true;
    auto restrict_mat = [&](const Mat& g) {
        Mat m(k, k);
        for (size_t j = 0; j < k; ++j) {
            auto coords = rs.coords(g.apply(rs.rows()[j]));
            if (!coords) throw std::logic_error("restriction: span is not generator-stable");
            for (size_t i = 0; i < k; ++i) m.at(i, j) = (*coords)[i];
        }
        return m;
    };
    out.x0p = restrict_mat(big.x0p);
    out.x0m = restrict_mat(big.x0m);
    out.x1p = restrict_mat(big.x1p);
    out.x1m = restrict_mat(big.x1m);
    out.k0 = restrict_mat(big.k0);
    out.k1 = restrict_mat(big.k1);
    out.k0i = restrict_mat(big.k0i);
    out.k1i = restrict_mat(big.k1i);
    return out;
}

Rep realize_with_order(const std::vector<long long>& alphas) {
    Rep big = fundamental_rep(alphas[0]);
    for (size_t i = 1; i < alphas.size(); ++i) big = tensor_rep(big, fundamental_rep(alphas[i]));
    Vec top(static_cast<size_t>(big.dim));
    top[0] = RatFunc(1);
    RowSpace rs = closure_of(big, top);
    if (rs.rank() == static_cast<size_t>(big.dim)) {
        big.restricted = false;
        return big;
    }
    return restrict_to(big, rs, big.factor_alphas);
}

} // namespace

Rep realize_simple(const Monomial& m) {
    if (!is_dominant(m)) throw domain_error("realize_simple: monomial not dominant");
    std::vector<long long> alphas;
    for (const auto& [k, e] : m.factors()) {
        if (k.node != 1 || k.kappa != 0 || !k.lambda.is_integer())
            throw domain_error("realize_simple: monomial outside the rank-one integer lattice");
        for (int t = 0; t < e; ++t) alphas.push_back(k.lambda.num() + 2);
    }
    if (alphas.empty()) throw domain_error("realize_simple: the trivial module has no matrix model here");
    std::sort(alphas.begin(), alphas.end());

    Rep rep = realize_with_order(alphas);
    auto check = [&](const Rep& r) {
        QCharacter qc = extract_qchar(r);
        return qc.highest == m && qc.terms.count(m) > 0;
    };
    if (check(rep)) return rep;

    std::vector<long long> reversed(alphas.rbegin(), alphas.rend());
    Rep retry = realize_with_order(reversed);
    retry.note = "nondecreasing order failed the character self-check; used reversed order";
    if (check(retry)) return retry;
    throw domain_error("realize_simple: closure self-check failed in both factor orders");
}

bool is_simple_thin(const Rep& r) {
    LWeightDecomp dec = lweight_decomposition(r, factor_candidates(r));
    for (const LWeightBlock& b : dec.blocks)
        if (b.basis.size() > 1)
            throw domain_error("is_simple_thin: module is not thin at " + to_string(b.monomial));
    for (const LWeightBlock& b : dec.blocks) {
        if (b.basis.empty()) continue;
        RowSpace rs = closure_of(r, b.basis.front());
        if (rs.rank() < static_cast<size_t>(r.dim)) return false;
    }
    return true;
}

RelationReport verify_defining_relations(const Rep& r) {
    RelationReport rep;
    auto fail = [&](const std::string& name) {
        if (rep.ok) {
            rep.ok = false;
            rep.first_violation = name;
        }
    };
    const int C[2][2] = {{2, -2}, {-2, 2}};
    const Mat* xp[2] = {&r.x0p, &r.x1p};
    const Mat* xm[2] = {&r.x0m, &r.x1m};
    const Mat* k[2] = {&r.k0, &r.k1};
    const Mat* ki[2] = {&r.k0i, &r.k1i};
    const Mat id = Mat::identity(static_cast<size_t>(r.dim));

    if (!((*k[0]) * (*ki[0]) == id)) fail("k0 inverse");
    if (rep.ok && !((*k[1]) * (*ki[1]) == id)) fail("k1 inverse");
    if (rep.ok && !((*k[0]) * (*k[1]) == (*k[1]) * (*k[0]))) fail("k0 k1 commutation");

    for (int i = 0; i < 2 && rep.ok; ++i)
        for (int j = 0; j < 2 && rep.ok; ++j) {
            Mat lhs = (*k[i]) * (*xp[j]);
            Mat rhs = ((*xp[j]) * (*k[i])).scaled(RatFunc::q_power(C[i][j]));
            if (!(lhs == rhs)) fail("k" + std::to_string(i) + " x" + std::to_string(j) + "+ relation");
            if (!rep.ok) break;
            lhs = (*k[i]) * (*xm[j]);
            rhs = ((*xm[j]) * (*k[i])).scaled(RatFunc::q_power(-C[i][j]));
            if (!(lhs == rhs)) fail("k" + std::to_string(i) + " x" + std::to_string(j) + "- relation");
        }

    RatFunc denom = RatFunc::q_power(1) - RatFunc::q_power(-1);
    for (int i = 0; i < 2 && rep.ok; ++i)
        for (int j = 0; j < 2 && rep.ok; ++j) {
            Mat lhs = (*xp[i]) * (*xm[j]) - (*xm[j]) * (*xp[i]);
            if (i == j) {
                Mat rhs = ((*k[i]) - (*ki[i])).scaled(denom.inverse());
                if (!(lhs == rhs)) fail("commutator x" + std::to_string(i) + "+ x" + std::to_string(i) + "-");
            } else if (!lhs.is_zero()) {
                fail("commutator x" + std::to_string(i) + "+ x" + std::to_string(j) + "-");
            }
        }

    // q-Serre relations: sum_{v=0..3} (-1)^v X_i^{(3-v)} X_j X_i^{(v)} = 0
    auto divided_powers = [&](const Mat& x) {
        std::vector<Mat> p{id, x};
        p.push_back((x * x).scaled(q_factorial(2).inverse()));
        p.push_back((x * x * x).scaled(q_factorial(3).inverse()));
        return p;
    };
    for (int i = 0; i < 2 && rep.ok; ++i) {
        int j = 1 - i;
        for (int sign = 0; sign < 2 && rep.ok; ++sign) {
            const Mat& xi = sign == 0 ? *xp[i] : *xm[i];
            const Mat& xj = sign == 0 ? *xp[j] : *xm[j];
            auto pows = divided_powers(xi);
            Mat acc(static_cast<size_t>(r.dim), static_cast<size_t>(r.dim));
            for (int v = 0; v <= 3; ++v) {
                Mat term = pows[static_cast<size_t>(3 - v)] * xj * pows[static_cast<size_t>(v)];
                acc = v % 2 == 0 ? acc + term : acc - term;
            }
            if (!acc.is_zero())
                fail(std::string("serre relation x") + std::to_string(i) + (sign == 0 ? "+" : "-"));
        }
    }
    return rep;
}

Json rep_to_json(const Rep& r) {
    auto mat_json = [](const Mat& m) {
        Json rows = Json::array();
        for (size_t i = 0; i < m.rows(); ++i) {
            Json row = Json::array();
            for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
            rows.push_back(row);
        }
        return rows;
    };
    Json j;
    j["dim"] = r.dim;
    j["factors"] = r.factor_alphas;
    j["restricted"] = r.restricted;
    Json mats;
    mats["x0+"] = mat_json(r.x0p);
    mats["x0-"] = mat_json(r.x0m);
    mats["x1+"] = mat_json(r.x1p);
    mats["x1-"] = mat_json(r.x1m);
    mats["k0"] = mat_json(r.k0);
    mats["k1"] = mat_json(r.k1);
    j["matrices"] = mats;
    return j;
}

} // namespace qaff
