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

#ifndef EISENCUSP_DIRICHLET_HPP
#define EISENCUSP_DIRICHLET_HPP

#include <vector>

#include "cyclotomic.hpp"

namespace eisencusp {

namespace detail {

// Cyclic decomposition of (Z/N)^* via CRT: generators and their orders.
struct UnitGroup {
    long N;
    std::vector<long> generators;
    std::vector<long> orders;
    long exponent;  // lcm of the orders
    // discrete log table: for x coprime to N, the exponent tuple
    std::vector<std::vector<long>> dlog;  // indexed by residue, empty for non-units

    explicit UnitGroup(long N_) : N(N_), exponent(1) {
        if (N == 1) {
            dlog.assign(1, {});
            return;
        }
        auto pw = [](long base, long e, long mod) {
            long r = 1 % mod;
            while (e-- > 0) r = r * base % mod;
            return r;
        };
        std::vector<std::pair<long, long>> local;  // (generator mod N via CRT, order)
        for (auto [p, e] : factorize_long(N)) {
            long pe = 1;
            for (int i = 0; i < e; ++i) pe *= p;
            auto crt_into = [&](long g_mod_pe) {
                // x = g mod pe, x = 1 mod N/pe
                long other = N / pe;
                for (long x = 1; x < N; ++x)
                    if (x % pe == g_mod_pe % pe && (other == 1 || x % other == 1)) return x;
                throw std::logic_error("dirichlet: CRT lift failed");
            };
            if (p == 2) {
                if (e >= 2) local.emplace_back(crt_into(pe - 1), 2);       // -1
                if (e >= 3) local.emplace_back(crt_into(5 % pe), pe / 4);  // 5
            } else {
                long phi = pe / p * (p - 1);
                long g = 0;
                for (long cand = 2; cand < pe; ++cand) {
                    if (std::gcd(cand, pe) != 1) continue;
                    bool primitive = true;
                    for (auto [q, qe] : factorize_long(phi))
                        if (pw(cand, phi / q, pe) == 1) { primitive = false; break; }
                    if (primitive) { g = cand; break; }
                }
                if (g == 0) throw std::logic_error("dirichlet: no primitive root");
                local.emplace_back(crt_into(g), phi);
            }
        }
        for (auto& [g, o] : local) {
            generators.push_back(g);
            orders.push_back(o);
            exponent = lcm_long(exponent, o);
        }
        // discrete logs by direct enumeration of the group
        dlog.assign(N, {});
        std::vector<long> tuple(generators.size(), 0);
        long total = 1;
        for (long o : orders) total *= o;
        for (long cnt = 0; cnt < total; ++cnt) {
            long val = 1;
            for (size_t i = 0; i < generators.size(); ++i)
                for (long t = 0; t < tuple[i]; ++t) val = val * generators[i] % N;
            dlog[val] = tuple;
            for (size_t i = 0; i < tuple.size(); ++i) {
                if (++tuple[i] < orders[i]) break;
                tuple[i] = 0;
            }
        }
    }
};

inline const UnitGroup& unit_group(long N) {
    static std::map<long, UnitGroup> memo;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = memo.find(N);
    if (it == memo.end()) it = memo.emplace(N, UnitGroup(N)).first;
    return it->second;
}

} // namespace detail

/// Dirichlet character mod N, exact-valued in Q(zeta_E) where E is the
/// exponent of (Z/N)^*.  chi(x) = 0 for gcd(x, N) > 1.
class DirichletCharacter {
  public:
    DirichletCharacter(long N, std::vector<long> exps) : N_(N), exps_(std::move(exps)) {}

    long modulus() const { return N_; }

    /// Conductor of the value field Q(zeta_E).
    long value_conductor() const { return detail::unit_group(N_).exponent; }

    bool is_trivial() const {
        for (long e : exps_)
            if (e != 0) return false;
        return true;
    }

    CyclotomicNumber operator()(long x) const {
        x = mod_reduce(x, N_);
        const auto& ug = detail::unit_group(N_);
        if (N_ == 1) return CyclotomicNumber::one();
        if (std::gcd(x, N_) != 1) return CyclotomicNumber::zero();
        const auto& tuple = ug.dlog[x];
        long E = ug.exponent;
        long e = 0;
        for (size_t i = 0; i < tuple.size(); ++i)
            e = mod_reduce(e + exps_[i] * tuple[i] * (E / ug.orders[i]), E);
        return CyclotomicNumber::root_of_unity(E, e);
    }

    DirichletCharacter conjugate() const {
        const auto& ug = detail::unit_group(N_);
        std::vector<long> e(exps_);
        for (size_t i = 0; i < e.size(); ++i) e[i] = mod_reduce(-e[i], ug.orders[i]);
        return DirichletCharacter(N_, std::move(e));
    }

    const std::vector<long>& exponents() const { return exps_; }

  private:
    long N_;
    std::vector<long> exps_;  // chi(generator_i) = zeta_E^{exps_i * E / order_i}
};

/// All phi(N) Dirichlet characters mod N in a deterministic order.
inline std::vector<DirichletCharacter> dirichlet_characters(long N) {
    const auto& ug = detail::unit_group(N);
    std::vector<DirichletCharacter> out;
    std::vector<long> tuple(ug.generators.size(), 0);
    long total = 1;
    for (long o : ug.orders) total *= o;
    for (long cnt = 0; cnt < total; ++cnt) {
        out.emplace_back(N, tuple);
        for (size_t i = 0; i < tuple.size(); ++i) {
            if (++tuple[i] < ug.orders[i]) break;
            tuple[i] = 0;
        }
    }
    return out;
}

} // namespace eisencusp

#endif
