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

#include <random>

#include <eisencusp/eta.hpp>
#include <eisencusp/qexpansion.hpp>

using namespace eisencusp;

namespace {

QExpansion random_series(long width, long conductor, long trunc, std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<int> fill(0, 2);
    QExpansion f(width, conductor, trunc);
    long phi = euler_phi(conductor);
    for (long m = 0; m < trunc; ++m) {
        if (fill(rng) == 0) continue;
        std::vector<Rational> c(phi);
        for (long j = 0; j < phi; ++j) c[j] = Rational(num(rng));
        f.set_coeff(m, CyclotomicNumber(conductor, std::move(c)));
    }
    return f;
}

// independent dense int64 expansion of prod (1 - x^{delta m})^r, r > 0
std::vector<long> naive_eta_product(const std::vector<std::pair<long, long>>& spec, long len) {
    std::vector<long> p(len, 0);
    p[0] = 1;
    for (auto [delta, r] : spec)
        for (long t = 0; t < r; ++t)
            for (long m = 1; delta * m < len; ++m)
                for (long i = len - 1; i >= delta * m; --i) p[i] -= p[i - delta * m];
    return p;
}

} // namespace

TEST_CASE("product truncation follows the min rule") {
    QExpansion f(1, 1, 5), g(1, 1, 3);
    f.set_coeff(0, CyclotomicNumber(1));
    f.set_coeff(1, CyclotomicNumber(1));
    g.set_coeff(0, CyclotomicNumber(1));
    g.set_coeff(1, CyclotomicNumber(-1));
    auto prod = f * g;
    CHECK(prod.truncation() == 3);
    CHECK(prod.coeff(0) == CyclotomicNumber(1));
    CHECK(prod.coeff(1).is_zero());
    CHECK(prod.coeff(2) == CyclotomicNumber(-1));
}

TEST_CASE("coefficient conjugation") {
    QExpansion f(1, 5, 2);
    f.set_coeff(1, CyclotomicNumber::root_of_unity(5, 1));
    auto fc = f.conjugated();
    CHECK(fc.coeff(1) == CyclotomicNumber::root_of_unity(5, 4));
    // involution, commutes with multiplication
    std::mt19937 rng(5);
    auto a = random_series(2, 5, 8, rng);
    auto b = random_series(2, 5, 8, rng);
    CHECK(agree_below(a.conjugated().conjugated(), a, 8));
    CHECK(agree_below((a * b).conjugated(), a.conjugated() * b.conjugated(), 8));
}

TEST_CASE("ring laws on random series") {
    std::mt19937 rng(17);
    for (int rep = 0; rep < 4; ++rep) {
        auto a = random_series(1, 3, 10, rng);
        auto b = random_series(2, 4, 10, rng);
        auto c = random_series(1, 1, 10, rng);
        CHECK(agree_below((a * b) * c, a * (b * c), 10));
        CHECK(agree_below(a * (b + c), a * b + a * c, 10));
    }
}

TEST_CASE("substitution by diag(2,1) doubles exponents") {
    QExpansion f(1, 1, 4);
    f.set_coeff(0, CyclotomicNumber(3));
    f.set_coeff(2, CyclotomicNumber(-7));
    auto g = f.substituted(2, 0, 0, 1);
    CHECK(g.width() == 1);
    CHECK(g.truncation() == 8);
    CHECK(g.coeff(0) == CyclotomicNumber(3));
    CHECK(g.coeff(4) == CyclotomicNumber(-7));
}

TEST_CASE("substitution by [[1,1],[0,2]] produces width-2 phases") {
    QExpansion f(1, 1, 4);
    for (long m = 0; m < 4; ++m) f.set_coeff(m, CyclotomicNumber(m + 1));
    auto g = f.substituted(1, 1, 0, 2);
    CHECK(g.width() == 2);
    for (long m = 0; m < 4; ++m) {
        auto expect = CyclotomicNumber::root_of_unity(2, m) * CyclotomicNumber(m + 1);
        CHECK(g.coeff(m) == expect);
    }
}

TEST_CASE("substitution rejects bad matrices") {
    QExpansion f(1, 1, 2);
    CHECK_THROWS_AS(f.substituted(1, 0, 1, 1), InvalidSubstitutionMatrix);
    CHECK_THROWS_AS(f.substituted(-1, 0, 0, -1), InvalidSubstitutionMatrix);
}

TEST_CASE("substitution composes") {
    std::mt19937 rng(23);
    auto f = random_series(2, 3, 12, rng);
    // m1 = [[2,1],[0,1]], m2 = [[1,0],[0,3]]; m1*m2 = [[2,3],[0,3]]
    auto lhs = f.substituted(2, 1, 0, 1).substituted(1, 0, 0, 3);
    auto rhs = f.substituted(2, 3, 0, 3);
    long t = std::min(lhs.truncation() * (rhs.width() / gcd_long(lhs.width(), rhs.width())),
                      rhs.truncation() * (lhs.width() / gcd_long(lhs.width(), rhs.width())));
    long w = lcm_long(lhs.width(), rhs.width());
    CHECK(agree_below(lhs.lifted_to_width(w), rhs.lifted_to_width(w),
                      std::min(lhs.lifted_to_width(w).truncation(), rhs.lifted_to_width(w).truncation())));
    (void)t;
}

TEST_CASE("evaluation basics") {
    QExpansion zero(1, 1, 5);
    auto [vz, tz] = zero.eval({0.3, 1.2});
    CHECK(std::abs(vz) == 0.0);

    auto c = QExpansion::constant(CyclotomicNumber(rat_from_longs(5, 2)), 6);
    auto [vc, tc] = c.eval({0.1, 0.9});
    CHECK(std::abs(vc - std::complex<double>(2.5, 0)) < 1e-14);

    // 1 + 240 q at tau = i
    QExpansion f(1, 1, 2);
    f.set_coeff(0, CyclotomicNumber(1));
    f.set_coeff(1, CyclotomicNumber(240));
    auto [v, t] = f.eval({0.0, 1.0});
    double expect = 1.0 + 240.0 * std::exp(-2.0 * 3.14159265358979323846);
    CHECK(std::abs(v - std::complex<double>(expect, 0)) < 1e-12);
}

TEST_CASE("evaluation is multiplicative within tail bounds") {
    std::mt19937 rng(31);
    auto a = random_series(1, 4, 40, rng);
    auto b = random_series(1, 4, 40, rng);
    auto p = a * b;
    std::complex<double> tau(0.0, 1.0);
    auto [va, ta] = a.eval(tau);
    auto [vb, tb] = b.eval(tau);
    auto [vp, tp] = p.eval(tau);
    double budget = tp + std::abs(va) * tb + std::abs(vb) * ta + ta * tb + 1e-12;
    CHECK(std::abs(vp - va * vb) <= budget);
}

TEST_CASE("eta quotient basics") {
    auto one = eta_quotient({}, 5);
    CHECK(one.width() == 1);
    CHECK(one.coeff(0) == CyclotomicNumber(1));
    CHECK(one.order() == 0);

    auto delta = eta_quotient({{1, 24}}, 11);
    long tau_vals[] = {0, 1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920};
    for (long m = 1; m <= 10; ++m)
        CHECK(delta.coeff(m) == CyclotomicNumber(Integer(tau_vals[m])));

    auto f11 = eta_quotient({{1, 2}, {11, 2}}, 11);
    long a11[] = {0, 1, -2, -1, 2, 1, 2, -2, 0, -2, -2};
    for (long m = 1; m <= 10; ++m)
        CHECK(f11.coeff(m) == CyclotomicNumber(Integer(a11[m])));

    // against the independent dense expansion
    auto naive = naive_eta_product({{1, 2}, {11, 2}}, 10);
    for (long i = 0; i < 10; ++i)
        CHECK(f11.coeff(i + 1) == CyclotomicNumber(Integer(naive[i])));
}

TEST_CASE("eta quotient fractional width") {
    auto eta1 = eta_quotient({{1, 1}}, 49);  // q^{1/24}(1 - q - q^2 + q^5 + ...)
    CHECK(eta1.width() == 24);
    CHECK(eta1.coeff(1) == CyclotomicNumber(1));
    CHECK(eta1.coeff(1 + 24) == CyclotomicNumber(-1));
    CHECK(eta1.coeff(1 + 48).is_zero());
    // Euler: exponents m(3m-1)/2
    auto eta_pow = eta1 * eta1;
    (void)eta_pow;
}

TEST_CASE("normalized width reduction") {
    QExpansion f(4, 1, 9);
    f.set_coeff(0, CyclotomicNumber(2));
    f.set_coeff(4, CyclotomicNumber(3));
    f.set_coeff(8, CyclotomicNumber(5));
    auto g = f.width_normalized();
    CHECK(g.width() == 1);
    CHECK(g.truncation() == 3);
    CHECK(g.coeff(2) == CyclotomicNumber(5));
}
