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

#ifndef EISENCUSP_ARITH_HPP
#define EISENCUSP_ARITH_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace eisencusp {

// Exact arithmetic substrate.  mpq_class is always canonical
// (gcd(num, den) = 1, den > 0), which is exactly the Rational contract.
using Integer = mpz_class;
using Rational = mpq_class;

inline long lcm_long(long a, long b) { return std::lcm(a, b); }
inline long gcd_long(long a, long b) { return std::gcd(a, b); }

inline long mod_reduce(long x, long n) {
    long r = x % n;
    return r < 0 ? r + n : r;
}

inline bool rat_is_zero(const Rational& r) { return sgn(r) == 0; }

inline Rational rat_from_longs(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string rational_to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    Rational r;
    if (slash == std::string::npos) {
        if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
            throw MalformedInput("rational", "cannot parse '" + s + "'");
    } else {
        if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
            throw MalformedInput("rational", "cannot parse '" + s + "'");
        if (sgn(Rational(r.get_den())) <= 0)
            throw MalformedInput("rational", "non-positive denominator in '" + s + "'");
    }
    r.canonicalize();
    return r;
}

// Trial division; operands stay desk-sized (levels, conductors, Sturm arguments).
inline std::vector<std::pair<Integer, int>> factorize(Integer n) {
    if (n <= 0) throw std::domain_error("factorize: positive argument required");
    std::vector<std::pair<Integer, int>> out;
    for (Integer p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::vector<std::pair<long, int>> factorize_long(long n) {
    auto f = factorize(Integer(n));
    std::vector<std::pair<long, int>> out;
    out.reserve(f.size());
    for (auto& [p, e] : f) out.emplace_back(p.get_si(), e);
    return out;
}

inline long euler_phi(long n) {
    long phi = 1;
    for (auto [p, e] : factorize_long(n)) {
        long pe = 1;
        for (int i = 1; i < e; ++i) pe *= p;
        phi *= pe * (p - 1);
    }
    return phi;
}

inline std::vector<long> divisors(long n) {
    std::vector<long> out;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline Integer sigma1(long m) {
    Integer s = 0;
    for (long d : divisors(m)) s += d;
    return s;
}

inline Integer binomial(long n, long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Integer factorial(long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// B_0, B_1, ... with the B_1 = -1/2 convention, via the defining recurrence.
// The memo table is shared across threads.
inline Rational bernoulli_number(long k) {
    static std::vector<Rational> table{Rational(1)};
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while (static_cast<long>(table.size()) <= k) {
        long m = static_cast<long>(table.size());
        Rational acc(0);
        for (long j = 0; j < m; ++j)
            acc += Rational(binomial(m + 1, j)) * table[j];
        Rational bm = -acc / Rational(m + 1);
        bm.canonicalize();
        table.push_back(bm);
    }
    return table[k];
}

// [SL2(Z) : Gamma0(N)] = N prod (1 + 1/p)
inline Integer index_gamma0(long n) {
    Integer idx = n;
    for (auto [p, e] : factorize_long(n)) { idx /= p; idx *= p + 1; }
    return idx;
}

// [SL2(Z) : Gamma1(N)] = phi(N) [SL2(Z) : Gamma0(N)]
inline Integer index_gamma1(long n) { return Integer(euler_phi(n)) * index_gamma0(n); }

// [SL2(Z) : Gamma(N)] = N^3 prod (1 - 1/p^2)
inline Integer index_gamma_full(Integer n) {
    Integer idx = n * n * n;
    for (auto& [p, e] : factorize(n)) { idx /= p * p; idx *= p * p - 1; }
    return idx;
}

} // namespace eisencusp

#endif
