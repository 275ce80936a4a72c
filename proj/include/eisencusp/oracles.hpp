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

#ifndef EISENCUSP_ORACLES_HPP
#define EISENCUSP_ORACLES_HPP

#include <complex>
#include <deque>

#include "eisenstein.hpp"

namespace eisencusp {

namespace detail {

using CplxL = std::complex<long double>;

inline constexpr long double PI_L = 3.14159265358979323846264338327950288L;

// sum_{d in Z} (z + d)^{-k} = pi^k Q_k(cot(pi z)); for k >= 2 the polynomial
// factors as Q_k = (1 + u^2) R_k(u), and 1 + u^2 = -4q/(1-q)^2 with
// q = e^{2 pi i z} evaluates without cancellation for Im z large.  The deque
// keeps returned references valid while other threads grow the table.
inline const std::vector<Rational>& lattice_R_poly(long k) {
    static std::deque<std::vector<Rational>> table;  // index k-2
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    if (table.empty()) table.push_back({Rational(1)});  // Q_2 = (1+u^2) * 1
    while (static_cast<long>(table.size()) < k - 1) {
        long kk = static_cast<long>(table.size()) + 1;  // we have Q_kk, build Q_{kk+1}
        // Q_kk = (1+u^2) R; Q_{kk+1} = (1+u^2) Q_kk' / kk
        //      = (1+u^2) [ 2u R + (1+u^2) R' ] / kk
        const auto& R = table.back();
        std::vector<Rational> next(R.size() + 2, Rational(0));
        for (size_t j = 0; j < R.size(); ++j) {
            next[j + 1] += Rational(2) * R[j];  // 2u R
        }
        for (size_t j = 1; j < R.size(); ++j) {  // (1+u^2) R'
            Rational dj = Rational((long)j) * R[j];
            next[j - 1] += dj;
            next[j + 1] += dj;
        }
        for (auto& x : next) x /= Rational(kk);
        table.push_back(std::move(next));
    }
    return table[k - 2];
}

inline CplxL eval_poly_cplx(const std::vector<Rational>& poly, CplxL u) {
    CplxL acc(0, 0);
    for (auto it = poly.rbegin(); it != poly.rend(); ++it)
        acc = acc * u + CplxL((long double)it->get_d(), 0);
    return acc;
}

// sum_{d in Z} (z + d)^{-k}, k >= 2, for Im z != 0.
inline CplxL lattice_inner_sum(long k, CplxL z) {
    bool flip = z.imag() < 0;
    if (flip) z = std::conj(z);
    CplxL q = std::exp(CplxL(0, 2 * PI_L) * z);
    CplxL one_minus_q = CplxL(1, 0) - q;
    CplxL u = CplxL(0, -1) * (CplxL(1, 0) + q) / one_minus_q;
    CplxL one_plus_u2 = CplxL(-4, 0) * q / (one_minus_q * one_minus_q);
    CplxL val = std::pow(CplxL(PI_L, 0), (long double)k) * one_plus_u2 * eval_poly_cplx(lattice_R_poly(k), u);
    return flip ? std::conj(val) : val;
}

inline CplxL minus_two_pi_i_pow(long k) {
    // (-2 pi i)^k
    CplxL base(0, -2 * PI_L);
    CplxL acc(1, 0);
    for (long i = 0; i < k; ++i) acc *= base;
    return acc;
}

} // namespace detail

/// Direct numerical evaluation of the defining lattice sum over residue class
/// v mod N (inner d-sum in closed form, outer c-sum through |c| <= cutoff),
/// divided by the same normalization constant as the expansions.  Requires
/// k >= 3 for absolute convergence.  Returns the value and a tail bound.
inline std::pair<std::complex<double>, double> lattice_sum_numeric(const EisensteinSymbol& sym,
                                                                   std::complex<double> tau, long cutoff,
                                                                   long precision_bits = 52) {
    (void)precision_bits;
    if (sym.k <= 2) throw OracleNotConvergent("lattice sum requires weight >= 3");
    if (tau.imag() <= 0) throw std::domain_error("lattice sum requires Im tau > 0");
    using detail::CplxL;
    long k = sym.k, N = sym.N;
    long cbar = sym.v.c, dbar = sym.v.d;
    CplxL taul(tau.real(), tau.imag());
    CplxL total(0, 0);

    // c = 0 classes: sum over d == dbar (N), d != 0, by direct summation
    if (cbar == 0 && !(dbar == 0 && k % 2 == 1)) {
        long double acc_re = 0;
        const long terms = 2'000'000;
        for (long sign : {+1, -1}) {
            long d0 = sign > 0 ? (dbar == 0 ? N : dbar) : (dbar == 0 ? N : N - dbar);
            for (long d = d0; d <= terms; d += N) {
                long double inv = 1.0L / (long double)d;
                long double p = inv;
                for (long i = 1; i < k; ++i) p *= inv;
                acc_re += (sign > 0 || k % 2 == 0) ? p : -p;
            }
        }
        total += CplxL(acc_re, 0);
    }

    long double nk = 1;
    for (long i = 0; i < k; ++i) nk *= (long double)N;

    for (long c = (cbar == 0 ? N : cbar); c <= cutoff; c += N) {
        CplxL z = ((long double)c * taul + CplxL((long double)dbar, 0)) / (long double)N;
        total += detail::lattice_inner_sum(k, z) / nk;
    }
    for (long c = (cbar == 0 ? N : N - cbar); c <= cutoff; c += N) {
        CplxL z = (-(long double)c * taul + CplxL((long double)dbar, 0)) / (long double)N;
        total += detail::lattice_inner_sum(k, z) / nk;
    }

    // normalize: divide by (-2 pi i)^k / (N^k (k-1)!)
    CplxL norm = detail::minus_two_pi_i_pow(k) / (nk * (long double)factorial(k - 1).get_d());
    CplxL value = total / norm;

    // c-tail: |inner sum| <= C |q_c| with geometric decay in c; report a bound
    // comfortably above it (and far below the crude O(cutoff^{2-k})).
    long double ratio = std::exp(-2 * detail::PI_L * (long double)tau.imag() / (long double)N);
    long double qcut = std::pow(ratio, (long double)(cutoff + 1));
    long double tail = 64.0L * std::pow(detail::PI_L, (long double)k) * qcut / (1 - ratio) / std::abs(norm);
    // d-sum truncation error is below 1e-12 for k >= 3 at two million terms
    tail += 1e-12;
    return {std::complex<double>((double)value.real(), (double)value.imag()), (double)tail};
}

struct ModularityReport {
    IndexVector v;
    IndexVector image;
    double discrepancy = 0;
    bool pass = false;
};

/// Numerical slash-equivariance check:
/// (c tau + d)^{-k} f_v(gamma tau) should equal f_{v gamma}(tau); at weight 2
/// the shared nonholomorphic residue contributes the exact correction
/// i c / (2 pi (c tau + d)) to the left-hand side difference.
inline std::vector<ModularityReport> modularity_check(const EisensteinFamily& fam, const GroupElement& g,
                                                      std::complex<double> tau, double tol) {
    using detail::CplxL;
    std::vector<ModularityReport> out;
    CplxL taul(tau.real(), tau.imag());
    CplxL cz = (long double)g.c * taul + (long double)g.d;
    CplxL gtau = ((long double)g.a * taul + (long double)g.b) / cz;
    std::complex<double> gtau_d((double)gtau.real(), (double)gtau.imag());
    if (gtau_d.imag() <= 0) throw std::domain_error("modularity check: gamma tau must stay in the upper half plane");
    CplxL autom = std::pow(cz, -(long double)fam.weight);
    CplxL residue_correction(0, 0);
    if (fam.weight == 2 && g.c != 0)
        residue_correction = CplxL(0, (long double)g.c) / (2 * detail::PI_L * cz);

    for (const auto& v : fam.symbols) {
        auto w = index_act(v, g);
        auto [fv, tail_v] = fam.expansion(v).eval(gtau_d);
        auto [fw, tail_w] = fam.expansion(w).eval(tau);
        double budget = (double)std::abs(autom) * tail_v + tail_w;
        if (budget > tol / 2)
            throw InconclusivePrecision("series tails (" + std::to_string(budget) + ") exceed half tolerance");
        CplxL lhs = autom * CplxL(fv.real(), fv.imag()) - residue_correction;
        CplxL rhs(fw.real(), fw.imag());
        double disc = (double)std::abs(lhs - rhs);
        out.push_back({v, w, disc, disc <= tol});
    }
    return out;
}

/// Oracle gate applied to freshly generated families: lattice agreement for
/// k >= 3 plus S-modularity (which also validates weights 1 and 2 where the
/// lattice sum does not converge).
inline void validate_family_numerically(const EisensteinFamily& fam) {
    const std::complex<double> tau_mod(0.2, 0.9);
    auto reports = modularity_check(fam, GroupElement::S(), tau_mod, 1e-8);
    for (const auto& r : reports)
        if (!r.pass)
            throw std::logic_error("family failed S-modularity at index (" + std::to_string(r.v.c) + "," +
                                   std::to_string(r.v.d) + "), discrepancy " + std::to_string(r.discrepancy));
    if (fam.weight >= 3) {
        const std::complex<double> tau(0.0, 1.0);
        for (const auto& v : fam.symbols) {
            auto [lv, ltail] = lattice_sum_numeric(fam.symbol(v), tau, 400);
            auto [sv, stail] = fam.expansion(v).eval(tau);
            if (std::abs(lv - sv) > 1e-8 + ltail + stail)
                throw std::logic_error("family failed the lattice oracle at index (" + std::to_string(v.c) + "," +
                                       std::to_string(v.d) + ")");
        }
    }
}

/// Truncation needed so series tails at the oracle evaluation points sit well
/// below 1e-9.
inline long oracle_gate_truncation(long N) {
    // |q_N| = exp(-2 pi 0.9 / N) at the worst oracle point; want |q_N|^T < 1e-12
    double log_ratio = 2 * 3.14159265358979323846 * 0.9 / static_cast<double>(N);
    return std::max<long>(16, static_cast<long>(12 * 2.302585 / log_ratio) + 8);
}

} // namespace eisencusp

#endif
