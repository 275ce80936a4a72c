/*
   Copyright 2026 the eisencusp authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <eisencusp/linalg.hpp>
#include <eisencusp/oracles.hpp>

using namespace eisencusp;

namespace {

Integer sigma_pow(long m, long p) {
    Integer s = 0;
    for (long d : divisors(m)) {
        Integer dp = 1;
        for (long i = 0; i < p; ++i) dp *= d;
        s += dp;
    }
    return s;
}

} // namespace

TEST_CASE("weight 0 is rejected") {
    CHECK_THROWS_AS(eisenstein_expansion({0, 1, IndexVector(1, 0, 0)}, 4), UnsupportedWeight);
}

TEST_CASE("level 1 weight 4 is proportional to the classical series") {
    auto f = eisenstein_expansion({4, 1, IndexVector(1, 0, 0)}, 8);
    // constant -B_4/4 = 1/120; q^m coefficient 2 sigma_3(m)
    CHECK(f.coeff(0) == CyclotomicNumber(rat_from_longs(1, 120)));
    for (long m = 1; m < 8; ++m)
        CHECK(f.coeff(m) == CyclotomicNumber(Rational(2) * Rational(sigma_pow(m, 3))));
    // proportional to 1 + 240 q + 2160 q^2 + ...
    auto scaled = Rational(120) * f;
    CHECK(scaled.coeff(1) == CyclotomicNumber(240));
    CHECK(scaled.coeff(2) == CyclotomicNumber(2160));
}

TEST_CASE("level 1 weight 2 holomorphic part matches E2 up to scale") {
    auto f = eisenstein_expansion({2, 1, IndexVector(1, 0, 0)}, 8);
    CHECK(f.coeff(0) == CyclotomicNumber(rat_from_longs(-1, 12)));
    for (long m = 1; m < 8; ++m)
        CHECK(f.coeff(m) == CyclotomicNumber(Rational(2) * Rational(sigma_pow(m, 1))));
    // -12 * f = 1 - 24q - 72q^2 - ... = E2
    auto e2 = Rational(-12) * f;
    CHECK(e2.coeff(1) == CyclotomicNumber(-24));
    CHECK(e2.coeff(2) == CyclotomicNumber(-72));
    auto fam = eisenstein_family_raw(2, 1, 4);
    CHECK(fam.weight2_residue);
}

TEST_CASE("odd weight parity relation") {
    auto f = eisenstein_expansion({3, 3, IndexVector(3, 0, 1)}, 9);
    auto g = eisenstein_expansion({3, 3, IndexVector(3, 0, 2)}, 9);
    CHECK(agree_below(-f, g, 9));
    CHECK(!f.is_zero());
}

TEST_CASE("weight-1 structural zeros at small level") {
    for (long N : {1L, 2L})
        for (const auto& v : enumerate_indices(N))
            CHECK(eisenstein_expansion({1, N, v}, 12).is_zero());
}

TEST_CASE("weight-1 level-3 combination matches the classical character series") {
    // (zeta3^2 - zeta3) * 2 * G_{1,3,(0,1)} should be 1 + 6 sum_n (sum_{d|n} chi_{-3}(d)) q^n
    auto g = eisenstein_expansion({1, 3, IndexVector(3, 0, 1)}, 18);
    auto zeta = CyclotomicNumber::root_of_unity(3, 1);
    auto scale = (zeta * zeta - zeta) * CyclotomicNumber(2);
    auto f = scale * g;
    auto chi_m3 = [](long d) { return d % 3 == 1 ? 1 : (d % 3 == 2 ? -1 : 0); };
    CHECK(f.coeff(0) == CyclotomicNumber::one());
    for (long n = 1; n < 6; ++n) {
        long a = 0;
        for (long d : divisors(n)) a += chi_m3(d);
        CHECK(f.coeff(3 * n) == CyclotomicNumber(6 * a));  // key 3n is q^n at width 3
    }
}

TEST_CASE("slash_index transports the index") {
    EisensteinSymbol sym{4, 2, IndexVector(2, 0, 1)};
    CHECK(slash_index(sym, GroupElement::identity()) == sym);
    CHECK(slash_index(sym, GroupElement::S()).v == IndexVector(2, 1, 0));
    EisensteinSymbol sym2{3, 3, IndexVector(3, 1, 1)};
    CHECK(slash_index(sym2, GroupElement::T()).v == IndexVector(3, 1, 2));
}

TEST_CASE("family parity and T-equivariance hold for k <= 6, N <= 6") {
    for (long k = 1; k <= 6; ++k)
        for (long N = 1; N <= 6; ++N)
            CHECK_NOTHROW(eisenstein_family_raw(k, N, 12));  // raw generation runs the exact checks
}

TEST_CASE("weight-4 level-2 family has rank 3") {
    auto fam = eisenstein_family_raw(4, 2, 24);
    std::vector<CVec> rows;
    for (const auto& f : fam.expansions) {
        CVec row;
        for (long m = 0; m < 24; ++m) row.push_back(f.coeff(m));
        rows.push_back(std::move(row));
    }
    CHECK(exact_rank(rows) == 3);
}

TEST_CASE("weight-2 conditions") {
    auto fam1 = eisenstein_family_raw(2, 1, 6);
    auto cond = weight2_conditions(fam1);
    CHECK(cond.size() == 1);
    // N=1: single index forced to zero coefficient -> holomorphic subspace {0}
    auto fam4 = eisenstein_family_raw(4, 1, 6);
    CHECK_THROWS_AS(weight2_conditions(fam4), NotWeightTwo);
    auto fam2 = eisenstein_family_raw(2, 2, 6);
    CHECK(weight2_conditions(fam2).size() == 4);
}

TEST_CASE("2 E2(2tau) - E2(tau) lies in the level-2 holomorphic span") {
    // target: 1 + 24 sum sigma_1^odd(m) q^m, width 2 keys 2m
    long prec = 16;
    auto fam = eisenstein_family_raw(2, 2, 2 * prec);
    QExpansion target(2, 1, 2 * prec);
    target.set_coeff(0, CyclotomicNumber(1));
    for (long m = 1; m < prec; ++m) {
        Integer s = 0;
        for (long d : divisors(m))
            if (d % 2 == 1) s += d;
        target.set_coeff(2 * m, CyclotomicNumber(Rational(24) * Rational(s)));
    }
    EchelonBasis basis(2 * prec + 1);  // extra row carries the residue functional
    CVec t;
    for (long m = 0; m < 2 * prec; ++m) t.push_back(target.coeff(m));
    t.push_back(CyclotomicNumber::zero());  // holomorphic target: zero residue
    std::map<long, CyclotomicNumber> combo;
    basis.reduce(t, &combo);
    long id = 0;
    for (const auto& f : fam.expansions) {
        CVec col;
        for (long m = 0; m < 2 * prec; ++m) col.push_back(f.coeff(m));
        col.push_back(CyclotomicNumber::one());  // each symbol carries one residue unit
        basis.add_column(id++, std::move(col), &t, &combo);
    }
    CHECK(EchelonBasis::is_zero_vec(t));
    // the solved combination annihilates the weight-2 functional by construction
    CyclotomicNumber total = CyclotomicNumber::zero();
    for (auto& [cid, co] : combo) total += co;
    CHECK(total.is_zero());
}

TEST_CASE("lattice oracle agrees with expansions for k in 3..6") {
    for (long k = 3; k <= 6; ++k)
        for (long N = 1; N <= 3; ++N) {
            auto fam = eisenstein_family_raw(k, N, oracle_gate_truncation(N));
            for (std::complex<double> tau : {std::complex<double>(0, 1), std::complex<double>(0.3, 1.1)}) {
                for (const auto& v : fam.symbols) {
                    auto [lv, lt] = lattice_sum_numeric(fam.symbol(v), tau, 400);
                    auto [sv, st] = fam.expansion(v).eval(tau);
                    CHECK(std::abs(lv - sv) <= 1e-8);
                }
            }
        }
}

TEST_CASE("lattice symmetry under v -> -v") {
    auto symp = EisensteinSymbol{3, 3, IndexVector(3, 0, 1)};
    auto symm = EisensteinSymbol{3, 3, IndexVector(3, 0, 2)};
    std::complex<double> tau(0.1, 1.3);
    auto [vp, tp] = lattice_sum_numeric(symp, tau, 300);
    auto [vm, tm] = lattice_sum_numeric(symm, tau, 300);
    CHECK(std::abs(vp + vm) < 1e-10);
}

TEST_CASE("lattice oracle rejects low weight") {
    CHECK_THROWS_AS(lattice_sum_numeric({2, 1, IndexVector(1, 0, 0)}, {0, 1}, 100), OracleNotConvergent);
}

TEST_CASE("S-modularity at weights 1 and 2 for N in 2..5") {
    std::complex<double> tau(0.2, 0.9);
    for (long k = 1; k <= 2; ++k)
        for (long N = 2; N <= 5; ++N) {
            auto fam = eisenstein_family_raw(k, N, oracle_gate_truncation(N));
            auto reports = modularity_check(fam, GroupElement::S(), tau, 1e-8);
            for (const auto& r : reports) CHECK(r.pass);
        }
}

TEST_CASE("S-modularity at weights 3 and 4") {
    std::complex<double> tau(0.2, 0.9);
    for (long k = 3; k <= 4; ++k)
        for (long N = 2; N <= 5; ++N) {
            auto fam = eisenstein_family_raw(k, N, oracle_gate_truncation(N));
            for (const auto& r : modularity_check(fam, GroupElement::S(), tau, 1e-8)) CHECK(r.pass);
        }
}

TEST_CASE("T-action check is exact, no numerics needed") {
    auto fam = eisenstein_family_raw(4, 3, 15);
    for (const auto& v : fam.symbols) {
        auto lhs = fam.expansion(v).substituted(1, 1, 0, 1);
        CHECK(agree_below(lhs, fam.expansion(index_act(v, GroupElement::T())), 15));
    }
}

TEST_CASE("negative control: perturbed coefficient fails the oracle") {
    auto fam = eisenstein_family_raw(4, 2, oracle_gate_truncation(2));
    auto bad = fam;
    auto& f = bad.expansions[bad.symbol_position(IndexVector(2, 0, 1))];
    f.set_coeff(2, f.coeff(2) + CyclotomicNumber(rat_from_longs(1, 1000)));
    auto reports = modularity_check(bad, GroupElement::S(), {0.2, 0.9}, 1e-8);
    bool any_fail = false;
    for (const auto& r : reports) any_fail |= !r.pass;
    CHECK(any_fail);
    CHECK_THROWS(validate_family_numerically(bad));
    CHECK_NOTHROW(validate_family_numerically(fam));
}

TEST_CASE("weight-1 level >= 3 family is nonzero") {
    for (long N : {3L, 4L, 5L}) {
        auto fam = eisenstein_family_raw(1, N, 12);
        bool nonzero = false;
        for (const auto& f : fam.expansions) nonzero |= !f.is_zero();
        CHECK(nonzero);
    }
}
