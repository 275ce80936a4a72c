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

#include <complex>
#include <random>

#include <eisencusp/cyclotomic.hpp>

using namespace eisencusp;

namespace {

CyclotomicNumber random_cyclo(long n, std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    long phi = euler_phi(n);
    std::vector<Rational> c(phi);
    for (long j = 0; j < phi; ++j) c[j] = rat_from_longs(num(rng), den(rng));
    return CyclotomicNumber(n, std::move(c));
}

} // namespace

TEST_CASE("rational string round trip") {
    Rational r = rat_from_longs(-22, 8);
    CHECK(rational_to_string(r) == "-11/4");
    CHECK(rational_from_string("-11/4") == r);
    CHECK(rational_from_string("7") == Rational(7));
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli_number(0) == Rational(1));
    CHECK(bernoulli_number(1) == rat_from_longs(-1, 2));
    CHECK(bernoulli_number(2) == rat_from_longs(1, 6));
    CHECK(bernoulli_number(4) == rat_from_longs(-1, 30));
    CHECK(bernoulli_number(12) == rat_from_longs(-691, 2730));
}

TEST_CASE("zeta4 squared is minus one") {
    auto z = CyclotomicNumber::root_of_unity(4, 1);
    CHECK(z * z == CyclotomicNumber(-1));
}

TEST_CASE("cancellation across conductors") {
    auto z3 = CyclotomicNumber::root_of_unity(3, 1);
    auto a = CyclotomicNumber::one() + z3;
    CHECK(a + (-z3) == CyclotomicNumber::one());
}

TEST_CASE("inverse of 1 + zeta5") {
    auto z = CyclotomicNumber::root_of_unity(5, 1);
    auto a = CyclotomicNumber::one() + z;
    auto inv = a.inverse();
    CHECK(a * inv == CyclotomicNumber::one());
}

TEST_CASE("inverting zero throws") {
    CHECK_THROWS_AS(CyclotomicNumber::zero().inverse(), DivisionByZero);
}

TEST_CASE("zeta_n^n = 1 and Phi_n(zeta_n) = 0 for n <= 24") {
    for (long n = 1; n <= 24; ++n) {
        auto z = CyclotomicNumber::root_of_unity(n, 1);
        auto p = CyclotomicNumber::one();
        for (long i = 0; i < n; ++i) p *= z;
        CHECK(p == CyclotomicNumber::one());
        const auto& phi = detail::cyclotomic_polynomial(n);
        auto acc = CyclotomicNumber::zero();
        auto pw = CyclotomicNumber::one();
        for (size_t j = 0; j < phi.size(); ++j) {
            acc += Rational(phi[j]) * pw;
            pw *= z;
        }
        CHECK(acc.is_zero());
    }
}

TEST_CASE("field axioms sampled at small conductors") {
    std::mt19937 rng(42);
    for (long n : {1L, 3L, 4L, 5L, 8L, 12L}) {
        for (int rep = 0; rep < 8; ++rep) {
            auto a = random_cyclo(n, rng);
            auto b = random_cyclo(n, rng);
            auto c = random_cyclo(n, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK(a * a.inverse() == CyclotomicNumber::one());
        }
    }
}

TEST_CASE("embed zeta2 into conductor 6 gives -1") {
    auto z2 = CyclotomicNumber::root_of_unity(2, 1);
    auto lifted = embed_and_galois(z2, 6, 1);
    CHECK(lifted == CyclotomicNumber(-1));
    CHECK(lifted == CyclotomicNumber::root_of_unity(6, 3));
}

TEST_CASE("galois exponent -1 conjugates zeta5") {
    auto z = CyclotomicNumber::root_of_unity(5, 1);
    CHECK(embed_and_galois(z, 5, -1) == CyclotomicNumber::root_of_unity(5, 4));
}

TEST_CASE("embed zeta3 into conductor 12 matches numerically") {
    auto z3 = CyclotomicNumber::root_of_unity(3, 1);
    auto lifted = embed_and_galois(z3, 12, 1);
    CHECK(lifted == CyclotomicNumber::root_of_unity(12, 4));
    auto d = z3.to_complex() - lifted.to_complex();
    CHECK(std::abs(d) < 1e-12);
}

TEST_CASE("embedding errors") {
    auto z3 = CyclotomicNumber::root_of_unity(3, 1);
    CHECK_THROWS_AS(embed_and_galois(z3, 8, 1), ConductorMismatch);
    CHECK_THROWS_AS(embed_and_galois(z3, 12, 2), InvalidGaloisExponent);
}

TEST_CASE("embed then restrict is the identity") {
    std::mt19937 rng(7);
    for (long m : {3L, 4L, 6L}) {
        auto a = random_cyclo(m, rng);
        auto big = a.lifted_to(4 * m % (4 * m) == 0 ? 2 * m : 2 * m);
        CHECK(big.restricted_to(m) == a);
        CHECK(a.lifted_to(6 * m).restricted_to(m) == a);
    }
    // an element genuinely of conductor 12 is not in Q(zeta_4)
    auto z12 = CyclotomicNumber::root_of_unity(12, 1);
    CHECK_THROWS_AS(z12.restricted_to(4), ConductorMismatch);
}

TEST_CASE("chained embeddings agree with direct embedding") {
    std::mt19937 rng(11);
    auto a = random_cyclo(3, rng);
    auto via = a.lifted_to(6).lifted_to(24);
    CHECK(via == a.lifted_to(24));
}

TEST_CASE("to_complex basics") {
    auto i = CyclotomicNumber::root_of_unity(4, 1).to_complex();
    CHECK(std::abs(i - std::complex<double>(0, 1)) < 1e-15);
    auto r = CyclotomicNumber(rat_from_longs(7, 3)).to_complex();
    CHECK(std::abs(r - std::complex<double>(7.0 / 3.0, 0)) < 1e-15);
    auto z3 = CyclotomicNumber::root_of_unity(3, 1).to_complex();
    CHECK(std::abs(z3 - std::complex<double>(-0.5, 0.86602540378443864676)) < 1e-14);
}

TEST_CASE("to_complex is a ring homomorphism within tolerance") {
    std::mt19937 rng(3);
    for (long n : {5L, 8L, 12L}) {
        auto a = random_cyclo(n, rng);
        auto b = random_cyclo(n, rng);
        CHECK(std::abs((a + b).to_complex() - (a.to_complex() + b.to_complex())) < 1e-12);
        CHECK(std::abs((a * b).to_complex() - (a.to_complex() * b.to_complex())) < 1e-12);
    }
}
