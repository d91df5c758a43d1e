#include "doctest.h"

#include <random>

#include "qaff/monomial.hpp"

using namespace qaff;

namespace {

YKey yk(int node, int kappa, Rat lambda) { return YKey{node, kappa, lambda}; }
Monomial yv(int node, int kappa, Rat lambda, int e = 1) {
    return Monomial::variable(yk(node, kappa, lambda), e);
}
Monomial ym(long long lambda, int e = 1) { return yv(1, 0, Rat(lambda), e); }

const CartanData& sl2() {
    static CartanData cd = build_cartan("A1^1");
    return cd;
}
const CartanData& sl3() {
    static CartanData cd = build_cartan("A2^1");
    return cd;
}

} // namespace

TEST_CASE("group structure of monomials") {
    Monomial m = mono_mul(ym(0), ym(2));
    CHECK(mono_mul(m, Monomial::one()) == m);
    CHECK(mono_mul(ym(0), ym(0, -1)) == Monomial::one());
    CHECK(m.size() == 2);
    CHECK(mono_inv(mono_inv(m)) == m);
    CHECK(mono_mul(ym(0), ym(0)) == ym(0, 2));
}

TEST_CASE("variable of a lattice point") {
    CHECK(y_of_point(sl2(), 1, {0, Rat(0)}) == yk(1, 0, Rat(0)));
    CartanData a22 = build_cartan("A2^2");
    CHECK(y_of_point(a22, 1, {0, Rat(1)}) == yk(1, 0, Rat(1)));   // d_1 = 1
    CartanData d42 = build_cartan("D4^2");
    REQUIRE(d42.d[1] == 2);
    CHECK(y_of_point(d42, 1, {0, Rat(1)}) == yk(1, 0, Rat(2)));
    CHECK_THROWS_AS(y_of_point(sl2(), 5, {0, Rat(0)}), domain_error);
}

TEST_CASE("weights of monomials") {
    CHECK(weight_of(sl2(), ym(3)) == Weight({1}));
    CHECK(weight_of(sl2(), Monomial::one()) == Weight({0}));
    CartanData a22 = build_cartan("A2^2");
    CHECK(weight_of(a22, yv(1, 0, Rat(1))) == Weight({2}));   // mu_1 = 2
}

TEST_CASE("weight is a homomorphism to the weight lattice") {
    Monomial a = mono_mul(ym(0), ym(4, -2));
    Monomial b = mono_mul(ym(2), ym(4));
    CHECK(weight_of(sl2(), mono_mul(a, b)) == weight_of(sl2(), a) + weight_of(sl2(), b));
    CHECK(weight_of(sl2(), mono_inv(a)) + weight_of(sl2(), a) == Weight({0}));
}

TEST_CASE("dominance") {
    CHECK(is_dominant(mono_mul(ym(0), ym(4))));
    CHECK_FALSE(is_dominant(mono_mul(ym(0), ym(2, -1))));
    CHECK(is_dominant(Monomial::one()));
}

TEST_CASE("root-analog monomials, untwisted") {
    CHECK(a_monomial(sl2(), {1, {0, Rat(1)}}) == mono_mul(ym(0), ym(2)));
    Monomial a1q = a_monomial(sl3(), {1, {0, Rat(1)}});
    Monomial expect = mono_mul(mono_mul(yv(1, 0, Rat(0)), yv(1, 0, Rat(2))), yv(2, 0, Rat(1), -1));
    CHECK(a1q == expect);
    CHECK_THROWS_AS(a_monomial(sl2(), {3, {0, Rat(0)}}), domain_error);
}

TEST_CASE("root-analog weight matches the simple root") {
    // column i of the finite Cartan matrix in fundamental-weight coordinates
    for (const std::string& label : {"A1^1", "A2^1", "C2^1", "G2^1", "B3^1"}) {
        CAPTURE(label);
        CartanData cd = build_cartan(label);
        for (int i = 1; i <= cd.n; ++i) {
            Monomial a = a_monomial(cd, {i, {0, Rat(7)}});
            Weight w = weight_of(cd, a);
            for (int j = 1; j <= cd.n; ++j)
                CHECK(w.coeffs[static_cast<size_t>(j - 1)] == cd.C[j][i]);
        }
    }
}

TEST_CASE("root-analog monomials, twisted cases") {
    CartanData a22 = build_cartan("A2^2");
    Monomial a = a_monomial(a22, {1, {0, Rat(1)}});
    Monomial expect = mono_mul(mono_mul(yv(1, 0, Rat(0)), yv(1, 0, Rat(2))), yv(1, 1, Rat(1), -1));
    CHECK(a == expect);   // the -a factor lives at kappa = 1

    // node 1 of the even-twisted rank-two type: ordinary short node
    CartanData a42 = build_cartan("A4^2");
    Monomial b = a_monomial(a42, {1, {0, Rat(1)}});
    Monomial bexpect =
        mono_mul(mono_mul(yv(1, 0, Rat(0)), yv(1, 0, Rat(2))), yv(2, 0, Rat(1), -1));
    CHECK(b == bexpect);

    // triality: long node needs cube roots of the subscript
    CartanData d43 = build_cartan("D4^3");
    CHECK_THROWS_AS(a_monomial(d43, {2, {1, Rat(0)}}), domain_error);
    Monomial c = a_monomial(d43, {2, {0, Rat(3)}});
    Monomial cexpect = mono_mul(mono_mul(yv(2, 0, Rat(0)), yv(2, 0, Rat(6))),
                                mono_inv(mono_mul(mono_mul(yv(1, 0, Rat(1)), yv(1, 1, Rat(1))),
                                                  yv(1, 2, Rat(1)))));
    CHECK(c == cexpect);

    // doubled type: long node takes square roots, short node sees power 2
    CartanData d32 = build_cartan("D3^2");
    Monomial e = a_monomial(d32, {1, {0, Rat(2)}});
    Monomial eexpect = mono_mul(mono_mul(yv(1, 0, Rat(0)), yv(1, 0, Rat(4))),
                                mono_inv(mono_mul(yv(2, 0, Rat(1)), yv(2, 1, Rat(1)))));
    CHECK(e == eexpect);
    CHECK_THROWS_AS(a_monomial(d32, {1, {1, Rat(2)}}), domain_error);
    Monomial f = a_monomial(d32, {2, {0, Rat(1)}});
    Monomial fexpect = mono_mul(mono_mul(yv(2, 0, Rat(0)), yv(2, 0, Rat(2))), yv(1, 0, Rat(2), -1));
    CHECK(f == fexpect);
}

TEST_CASE("decomposition over root monomials") {
    auto dec = decompose_over_A(sl2(), ym(0, -1), ym(-2));
    REQUIRE(dec.has_value());
    REQUIRE(dec->size() == 1);
    CHECK((*dec)[0] == APosition{1, {0, Rat(-1)}});

    dec = decompose_over_A(sl2(), ym(5), ym(5));
    REQUIRE(dec.has_value());
    CHECK(dec->empty());

    CHECK_FALSE(decompose_over_A(sl2(), ym(2), ym(0)).has_value());
}

TEST_CASE("decomposition round-trip on random products") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> lam(-4, 4), cnt(1, 4), node(1, 2);
    for (int trial = 0; trial < 60; ++trial) {
        const CartanData& cd = trial % 2 == 0 ? sl2() : sl3();
        Monomial mref = Monomial::one();
        for (int t = cnt(rng); t-- > 0;)
            mref = mono_mul(mref, yv(trial % 2 == 0 ? 1 : node(rng), 0, Rat(lam(rng))));
        std::vector<APosition> used;
        Monomial m = mref;
        for (int t = cnt(rng); t-- > 0;) {
            APosition p{trial % 2 == 0 ? 1 : node(rng), {0, Rat(lam(rng))}};
            used.push_back(p);
            m = mono_mul(m, mono_inv(a_monomial(cd, p)));
        }
        std::sort(used.begin(), used.end());
        auto dec = decompose_over_A(cd, m, mref);
        REQUIRE(dec.has_value());
        CHECK(*dec == used);
        Monomial back = mref;
        for (const APosition& p : *dec) back = mono_mul(back, mono_inv(a_monomial(cd, p)));
        CHECK(back == m);
        CHECK(leq(cd, m, mref));
    }
}

TEST_CASE("order examples and strict weight drop") {
    CHECK(leq(sl2(), ym(0, -1), ym(-2)));
    CHECK(leq(sl2(), ym(3), ym(3)));
    CHECK_FALSE(leq(sl2(), ym(0), ym(2)));

    Monomial m = mono_mul(ym(0), mono_inv(a_monomial(sl2(), {1, {0, Rat(1)}})));
    Weight wm = weight_of(sl2(), m), wref = weight_of(sl2(), ym(0));
    CHECK(weight_leq(wm, wref, sl2()));
    CHECK_FALSE(wm == wref);
}

TEST_CASE("extremal-level negativity") {
    Monomial am = mono_inv(a_monomial(sl2(), {1, {0, Rat(1)}}));
    CHECK(is_right_negative(sl2(), am));
    CHECK(is_left_negative(sl2(), am));
    CHECK_FALSE(is_right_negative(sl2(), ym(0)));
    Monomial mixed = mono_mul(ym(0), ym(2, -1));
    CHECK(is_right_negative(sl2(), mixed));
    CHECK_FALSE(is_left_negative(sl2(), mixed));
    CHECK_THROWS_AS(is_right_negative(sl2(), Monomial::one()), domain_error);
}

TEST_CASE("products of right-negative monomials are right-negative and never dominant") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> lam(-5, 5), cnt(1, 5), node(1, 2);
    for (int trial = 0; trial < 80; ++trial) {
        const CartanData& cd = trial % 2 == 0 ? sl2() : sl3();
        Monomial m = Monomial::one();
        for (int t = cnt(rng); t-- > 0;) {
            APosition p{trial % 2 == 0 ? 1 : node(rng), {0, Rat(lam(rng))}};
            m = mono_mul(m, mono_inv(a_monomial(cd, p)));
        }
        CHECK(is_right_negative(cd, m));
        CHECK_FALSE(is_dominant(m));
    }
}

TEST_CASE("level split parts") {
    Monomial m = mono_mul(ym(0), ym(4));
    TruncParts p = trunc_parts(sl2(), m, 3);
    CHECK(p.leq_part == ym(0));
    CHECK(p.eq_part == Monomial::one());
    CHECK(p.geq_part == ym(4));

    TruncParts single = trunc_parts(sl2(), ym(3), 3);
    CHECK(single.leq_part == ym(3));
    CHECK(single.eq_part == ym(3));
    CHECK(single.geq_part == ym(3));

    TruncParts unit = trunc_parts(sl2(), Monomial::one(), 0);
    CHECK(unit.leq_part == Monomial::one());
    CHECK(unit.eq_part == Monomial::one());
    CHECK(unit.geq_part == Monomial::one());

    CHECK_THROWS_AS(trunc_parts(sl2(), yv(1, 0, Rat(1, 2)), 0), domain_error);
}

TEST_CASE("level split reconstructs the monomial at every cut") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> lam(-5, 5), cnt(1, 6), exp(-2, 2);
    for (int trial = 0; trial < 50; ++trial) {
        Monomial m = Monomial::one();
        for (int t = cnt(rng); t-- > 0;) {
            int e = exp(rng);
            if (e != 0) m = mono_mul(m, ym(lam(rng), e));
        }
        for (long long L = -6; L <= 6; ++L) {
            Monomial low = trunc_parts(sl2(), m, L).leq_part;
            Monomial high = trunc_parts(sl2(), m, L + 1).geq_part;
            CHECK(mono_mul(low, high) == m);
        }
    }
}

TEST_CASE("spectral shift") {
    CHECK(tau_shift(sl2(), ym(-2), Rat(2)) == ym(0));
    Monomial m = mono_mul(ym(0), ym(4, -2));
    CHECK(tau_shift(sl2(), m, Rat(0)) == m);
    CHECK(tau_shift(sl2(), tau_shift(sl2(), m, Rat(3)), Rat(-1)) == tau_shift(sl2(), m, Rat(2)));
    CartanData d32 = build_cartan("D3^2");
    CHECK(tau_shift(d32, yv(1, 0, Rat(0)), Rat(1)) == yv(1, 0, Rat(2)));   // d_1 = 2
}

TEST_CASE("spectral inversion involution") {
    CHECK(sigma_involution(ym(2), 1) == ym(-2, -1));
    Monomial m = mono_mul(ym(0), ym(4, -2));
    CHECK(sigma_involution(sigma_involution(m, 1), 1) == m);
    CHECK(sigma_involution(Monomial::one(), 1) == Monomial::one());
    CartanData a22 = build_cartan("A2^2");
    CHECK(sigma_involution(yv(1, 1, Rat(1)), a22.twist) == yv(1, 1, Rat(-1), -1));
}

TEST_CASE("dual highest monomial") {
    CHECK(dual_highest_monomial(sl2(), ym(0)) == ym(-2));
    CHECK(dual_highest_monomial(sl2(), Monomial::one()) == Monomial::one());
    CHECK(dual_highest_monomial(sl2(), ym(2)) == ym(-4));
    CHECK_THROWS_AS(dual_highest_monomial(sl2(), ym(0, -1)), domain_error);

    // the argument inversion cancels the shift on the second application
    Monomial m = mono_mul(ym(0), ym(2, 3));
    CHECK(dual_highest_monomial(sl2(), dual_highest_monomial(sl2(), m)) == m);

    // node relabeling on a rank-two example
    CartanData a2 = build_cartan("A2^1");
    Monomial d = dual_highest_monomial(a2, yv(1, 0, Rat(0)));
    CHECK(d == yv(2, 0, Rat(-3)));   // bar(1) = 2, rvee hvee = 3

    // sign twist on the even-twisted family
    CartanData a22 = build_cartan("A2^2");
    Monomial t = dual_highest_monomial(a22, yv(1, 0, Rat(0)));
    CHECK(t == yv(1, 1, Rat(-3)));   // kappa flips, shift by rvee hvee = 3
}

TEST_CASE("level reflection") {
    CHECK(bar_monomial(sl2(), ym(0), 2) == ym(2));
    CHECK(bar_monomial(sl2(), ym(1), 2) == ym(1));
    Monomial m = mono_mul(ym(0), ym(2));
    CHECK(bar_monomial(sl2(), bar_monomial(sl2(), m, 2), 2) == m);
    CHECK_THROWS_AS(bar_monomial(sl2(), ym(3), 2), domain_error);
    CHECK_THROWS_AS(bar_monomial(sl2(), ym(-1), 2), domain_error);
}

TEST_CASE("window membership") {
    CHECK(in_c_ell(sl2(), mono_mul(ym(0), ym(2)), 2));
    CHECK_FALSE(in_c_ell(sl2(), ym(3), 2));
    CHECK_FALSE(in_c_ell(sl2(), ym(0, -1), 0));
    CHECK(in_c_ell(sl2(), Monomial::one(), 0));
    CHECK_FALSE(in_c_ell(sl2(), yv(1, 0, Rat(1, 2)), 2));
}

TEST_CASE("cyclicity support condition") {
    CHECK(cyclic_pair_ok(sl2(), ym(2), ym(0)));
    CHECK(cyclic_pair_ok(sl2(), mono_mul(ym(0), ym(2)), Monomial::one()));
    CHECK_FALSE(cyclic_pair_ok(sl2(), ym(0), ym(2)));
    CHECK(cyclic_pair_ok(sl2(), ym(0), ym(0)));   // r > 0 is strict
}

TEST_CASE("cover variables fold multiplicatively") {
    CartanData d43 = build_cartan("D4^3");
    // orbit node 1 (d=1) under the second twisting power
    Monomial m = pi_twisted(d43, {{1, 2, {0, Rat(1)}, 1}});
    CHECK(m == yv(1, 2, Rat(1)));
    // fixed node 2 (d=3), no twisting
    Monomial f = pi_twisted(d43, {{2, 0, {0, Rat(1)}, 1}});
    CHECK(f == yv(2, 0, Rat(3)));
    // multiplicativity
    Monomial two = pi_twisted(d43, {{1, 2, {0, Rat(1)}, 1}, {2, 0, {0, Rat(1)}, 1}});
    CHECK(two == mono_mul(m, f));
    CHECK_THROWS_AS(pi_twisted(sl2(), {}), domain_error);
}

TEST_CASE("monomial text round trip") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> lamn(-9, 9), lamd(1, 3), cnt(0, 4), exp(-3, 3), node(1, 2),
        kap(0, 1);
    for (int trial = 0; trial < 100; ++trial) {
        Monomial m = Monomial::one();
        for (int t = cnt(rng); t-- > 0;) {
            int e = exp(rng);
            if (e != 0) m = mono_mul(m, yv(node(rng), kap(rng), Rat(lamn(rng), lamd(rng)), e));
        }
        CHECK(parse_monomial(to_string(m)) == m);
    }
    CHECK(parse_monomial("1") == Monomial::one());
    CHECK(parse_monomial("Y[1,0,0]*Y[1,0,2]") == mono_mul(ym(0), ym(2)));
    CHECK(parse_monomial("Y[1,0,-3/2]^2") == yv(1, 0, Rat(-3, 2), 2));
    CHECK_THROWS_AS(parse_monomial("Z[1,0,0]"), domain_error);
    CHECK_THROWS_AS(parse_monomial("Y[1,0]"), domain_error);
    CHECK_THROWS_AS(parse_monomial(""), domain_error);
}
