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

#ifndef EISENCUSP_EISENSTEIN_HPP
#define EISENCUSP_EISENSTEIN_HPP

#include <atomic>
#include <deque>
#include <thread>

#include "modgroup.hpp"
#include "qexpansion.hpp"

namespace eisencusp {

/// G_{k,N,v}, normalized so that the expansion coefficients lie in Q(zeta_N):
/// the transcendental factor (-2 pi i)^k / (N^k (k-1)!) is divided out.
struct EisensteinSymbol {
    long k = 1;
    long N = 1;
    IndexVector v;

    EisensteinSymbol() = default;
    EisensteinSymbol(long k_, long N_, IndexVector v_) : k(k_), N(N_), v(v_) {
        if (v.N != N) throw std::domain_error("EisensteinSymbol: index level mismatch");
    }

    friend bool operator==(const EisensteinSymbol& x, const EisensteinSymbol& y) {
        return x.k == y.k && x.N == y.N && x.v == y.v;
    }
    friend bool operator<(const EisensteinSymbol& x, const EisensteinSymbol& y) {
        return std::array<long, 4>{x.k, x.N, x.v.c, x.v.d} < std::array<long, 4>{y.k, y.N, y.v.c, y.v.d};
    }
};

/// The slash action on these series is pure index transport:
/// G_{k,N,v} |_k gamma = G_{k,N,v.gamma}.
inline EisensteinSymbol slash_index(const EisensteinSymbol& sym, const GroupElement& g) {
    return {sym.k, sym.N, index_act(sym.v, g)};
}

inline std::string eisenstein_normalization(long k, long N) {
    return "(-2*pi*i)^" + std::to_string(k) + " / (" + std::to_string(N) + "^" + std::to_string(k) + " * " +
           std::to_string(k - 1) + "!)";
}

namespace detail {

// D^{k-1}[u] where D = -(u^2+u) d/du and u stands for 1/(w - 1), w on the unit
// circle.  The normalized constant term of G_{k,N,(0,dbar)} is -D^{k-1}[u] at
// u = 1/(zeta_N^dbar - 1); weight 1 adds the -1/2 from the cotangent constant.
// A deque keeps returned references valid while other threads grow the table.
inline const std::vector<Rational>& cot_derivative_poly(long k) {
    static std::deque<std::vector<Rational>> table{{}, {Rational(0), Rational(1)}};  // k=1: u
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while (static_cast<long>(table.size()) <= k) {
        const auto& prev = table.back();
        // derivative
        std::vector<Rational> d(prev.size() > 1 ? prev.size() - 1 : 0, Rational(0));
        for (size_t j = 1; j < prev.size(); ++j) d[j - 1] = Rational((long)j) * prev[j];
        // multiply by -(u^2 + u)
        std::vector<Rational> next(d.size() + 2, Rational(0));
        for (size_t j = 0; j < d.size(); ++j) {
            next[j + 2] -= d[j];
            next[j + 1] -= d[j];
        }
        table.push_back(std::move(next));
    }
    return table[k];
}

inline CyclotomicNumber eval_poly(const std::vector<Rational>& poly, const CyclotomicNumber& x) {
    CyclotomicNumber acc = CyclotomicNumber::zero();
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + CyclotomicNumber(*it);
    return acc;
}

} // namespace detail

/// q^0 coefficient of the normalized expansion.
inline CyclotomicNumber eisenstein_constant_term(long k, long N, long cbar, long dbar) {
    cbar = mod_reduce(cbar, N);
    dbar = mod_reduce(dbar, N);
    if (cbar == 0 && dbar == 0) {
        if (k % 2 == 1) return CyclotomicNumber::zero();
        Rational c = -bernoulli_number(k) / Rational(k);
        c.canonicalize();
        return CyclotomicNumber(c);
    }
    if (cbar == 0) {
        // partial zeta over d == dbar: -D^{k-1}[u] at u = 1/(zeta^dbar - 1)
        CyclotomicNumber zeta = CyclotomicNumber::root_of_unity(N, dbar);
        CyclotomicNumber u = (zeta - CyclotomicNumber::one()).inverse();
        CyclotomicNumber val = -detail::eval_poly(detail::cot_derivative_poly(k), u);
        if (k == 1) val -= CyclotomicNumber(rat_from_longs(1, 2));
        return val;
    }
    // Hecke regularization contributes only at weight 1 for cbar != 0.
    if (k == 1) return CyclotomicNumber(rat_from_longs(1, 2) - rat_from_longs(cbar, N));
    return CyclotomicNumber::zero();
}

/// Coefficient of q^{m/N}, m >= 1: sum of sgn(r) r^{k-1} zeta_N^{dbar r} over
/// integer factorizations m = r s with s == cbar mod N.
inline CyclotomicNumber eisenstein_fourier_coefficient(long k, long N, long cbar, long dbar, long m) {
    cbar = mod_reduce(cbar, N);
    dbar = mod_reduce(dbar, N);
    std::vector<Integer> acc(N, Integer(0));
    for (long r : divisors(m)) {
        long s = m / r;
        Integer rk = 1;
        for (long i = 0; i < k - 1; ++i) rk *= r;
        if (mod_reduce(s, N) == cbar) acc[mod_reduce(dbar * r, N)] += rk;
        if (mod_reduce(-s, N) == cbar) {
            // (r', s') = (-r, -s): sgn(r') r'^{k-1} = (-1)^k r^{k-1}
            if (k % 2 == 0)
                acc[mod_reduce(-dbar * r, N)] += rk;
            else
                acc[mod_reduce(-dbar * r, N)] -= rk;
        }
    }
    CyclotomicNumber out = CyclotomicNumber::zero();
    for (long e = 0; e < N; ++e)
        if (acc[e] != 0) out += Rational(acc[e]) * CyclotomicNumber::root_of_unity(N, e);
    return out;
}

/// True when the normalized series vanishes identically (odd weight, 2v = 0).
inline bool eisenstein_structurally_zero(long k, const IndexVector& v) {
    return k % 2 == 1 && v == v.negated();
}

/// Exact normalized expansion in q^{1/N}, coefficients in Q(zeta_N), truncated
/// at prec coefficients.  For k = 2 this is the holomorphic part; the family
/// records the shared nonholomorphic residue separately.
inline QExpansion eisenstein_expansion(const EisensteinSymbol& sym, long prec) {
    if (sym.k < 1) throw UnsupportedWeight("Eisenstein weight must be >= 1");
    QExpansion f(sym.N, sym.N, prec);
    if (eisenstein_structurally_zero(sym.k, sym.v)) return f;
    if (prec > 0) f.set_coeff(0, eisenstein_constant_term(sym.k, sym.N, sym.v.c, sym.v.d));
    for (long m = 1; m < prec; ++m) {
        auto a = eisenstein_fourier_coefficient(sym.k, sym.N, sym.v.c, sym.v.d, m);
        if (!a.is_zero()) f.set_coeff(m, a);
    }
    return f;
}

/// The full indexed family realizing the weight-k level-N Eisenstein space:
/// all N^2 expansions at a shared truncation, constant terms, and the weight-2
/// residue marker (one unit of 1/(4 pi y) per symbol, identical across the
/// family, so a combination sum(lambda_v G_v) is holomorphic iff
/// sum(lambda_v) = 0).
struct EisensteinFamily {
    long weight = 0;
    long level = 1;
    long truncation = 0;
    bool weight2_residue = false;
    std::vector<IndexVector> symbols;
    std::vector<QExpansion> expansions;

    long symbol_position(const IndexVector& v) const { return mod_reduce(v.c, level) * level + mod_reduce(v.d, level); }

    const QExpansion& expansion(const IndexVector& v) const { return expansions[symbol_position(v)]; }

    CyclotomicNumber constant_term(const IndexVector& v) const { return expansion(v).coeff(0); }

    EisensteinSymbol symbol(const IndexVector& v) const { return {weight, level, v}; }
};

/// Linear functional(s) cutting out the holomorphic span at weight 2: with the
/// chosen normalization the single condition is sum over all N^2 indices = 0.
inline std::vector<CyclotomicNumber> weight2_conditions(const EisensteinFamily& family) {
    if (family.weight != 2) throw NotWeightTwo("holomorphy conditions only exist at weight 2");
    return std::vector<CyclotomicNumber>(family.symbols.size(), CyclotomicNumber::one());
}

namespace detail {

inline void check_family_exact_invariants(const EisensteinFamily& fam) {
    // parity: expansion(-v) = (-1)^k expansion(v), exactly
    for (const auto& v : fam.symbols) {
        const auto& a = fam.expansion(v);
        const auto& b = fam.expansion(v.negated());
        QExpansion flipped = fam.weight % 2 == 0 ? a : -a;
        if (!agree_below(flipped, b, std::min(a.truncation(), b.truncation())))
            throw std::logic_error("eisenstein family violates the parity relation");
    }
    // T-equivariance: substitution by [[1,1],[0,1]] transports v to v.T, exactly
    for (const auto& v : fam.symbols) {
        auto lhs = fam.expansion(v).substituted(1, 1, 0, 1);
        const auto& rhs = fam.expansion(index_act(v, GroupElement::T()));
        if (!agree_below(lhs, rhs, std::min(lhs.truncation(), rhs.truncation())))
            throw std::logic_error("eisenstein family violates T-equivariance");
    }
}

} // namespace detail

/// Generate the family (parallel per index) and run the exact structural
/// checks.  Numerical oracle gating lives with the cache layer.
inline EisensteinFamily eisenstein_family_raw(long k, long N, long prec) {
    if (k < 1) throw UnsupportedWeight("Eisenstein weight must be >= 1");
    EisensteinFamily fam;
    fam.weight = k;
    fam.level = N;
    fam.truncation = prec;
    fam.weight2_residue = (k == 2);
    fam.symbols = enumerate_indices(N);
    fam.expansions.resize(fam.symbols.size());
    long nthreads = std::min<long>(static_cast<long>(fam.symbols.size()),
                                   std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::thread> workers;
    std::atomic<size_t> next{0};
    for (long t = 0; t < nthreads; ++t)
        workers.emplace_back([&]() {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= fam.symbols.size()) break;
                fam.expansions[i] = eisenstein_expansion({k, N, fam.symbols[i]}, prec);
            }
        });
    for (auto& w : workers) w.join();
    detail::check_family_exact_invariants(fam);
    return fam;
}

} // namespace eisencusp

#endif
