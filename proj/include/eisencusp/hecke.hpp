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

#ifndef EISENCUSP_HECKE_HPP
#define EISENCUSP_HECKE_HPP

#include "dirichlet.hpp"
#include "eisenstein.hpp"
#include "linalg.hpp"

namespace eisencusp {

/// Upper-triangular integer matrix [[a,b],[0,d]] with ad = M, 0 <= b < d.
struct HeckeTriple {
    long a = 1, b = 0, d = 1;

    long det() const { return a * d; }

    /// adjugate of [[a,b],[0,d]] is [[d,-b],[0,a]]
    HeckeTriple adjugate() const { return {d, -b, a}; }

    friend bool operator==(const HeckeTriple& x, const HeckeTriple& y) {
        return x.a == y.a && x.b == y.b && x.d == y.d;
    }
    friend bool operator<(const HeckeTriple& x, const HeckeTriple& y) {
        return std::array<long, 3>{x.a, x.b, x.d} < std::array<long, 3>{y.a, y.b, y.d};
    }
};

/// Delta_M; |Delta_M| = sigma_1(M).
inline std::vector<HeckeTriple> delta_m(long M) {
    if (M < 1) throw std::domain_error("delta_m: M must be positive");
    std::vector<HeckeTriple> out;
    for (long a : divisors(M)) {
        long d = M / a;
        for (long b = 0; b < d; ++b) out.push_back({a, b, d});
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Expansion-level components of T_M: m -> d^{-k} (f |> m), i.e. the
/// substitution f((a tau + b)/d) scaled by d^{-k}.  The classical operator is
/// M^{k-1} times the sum of these components.
inline std::map<HeckeTriple, QExpansion> hecke_image(const QExpansion& f, long k, long M) {
    if (k < 1) throw UnsupportedWeight("hecke_image: weight must be >= 1");
    std::map<HeckeTriple, QExpansion> out;
    for (const auto& m : delta_m(M)) {
        Rational scale(1);
        for (long i = 0; i < k; ++i) scale /= Rational(m.d);
        out.emplace(m, scale * f.substituted(m.a, m.b, 0, m.d));
    }
    return out;
}

/// Coefficient-wise twist a_n -> a_n chi(n); requires an integral expansion.
inline QExpansion twist(const QExpansion& f, const DirichletCharacter& chi) {
    if (f.width() != 1) throw TwistRequiresIntegralExpansion("twist requires width-1 expansions");
    QExpansion out(1, lcm_long(f.conductor(), chi.value_conductor()), f.truncation());
    for (const auto& [m, v] : f.coeffs()) {
        auto tv = chi(m) * v;
        if (!tv.is_zero()) out.set_coeff(m, tv);
    }
    return out;
}

struct StabilityEntry {
    IndexVector v;
    HeckeTriple m;
    bool pass = false;
    long first_residual_key = -1;  // -1 when the component lies in the span
    // exact coefficients expressing the component in the level-MN family
    std::vector<std::pair<IndexVector, CyclotomicNumber>> coefficients;
};

struct StabilityReport {
    long k = 0, N = 1, M = 1;
    long prec = 0;       // coefficient rows checked, in q^{1/(MN)} units
    bool all_pass = true;
    std::vector<StabilityEntry> entries;
};

/// Hecke stability as an executable check: every component of the
/// T_M-image of every member of the level-N family must lie in the exact span
/// of the level-MN family.  At weight 2 the residue bookkeeping joins the
/// linear system as one extra row (a slashed component carries 1/M of the
/// residue unit; each level-MN symbol carries one unit).
inline StabilityReport hecke_stability_check(long k, long N, long M, long prec,
                                             const EisensteinFamily* big_family = nullptr) {
    StabilityReport report;
    report.k = k;
    report.N = N;
    report.M = M;
    report.prec = prec;
    long L = M * N;
    EisensteinFamily big_local;
    if (!big_family) {
        big_local = eisenstein_family_raw(k, L, prec);
        big_family = &big_local;
    }
    // the [[1,b],[0,M]] components keep their key range, so the small family
    // needs the full row count in its own width
    EisensteinFamily small = eisenstein_family_raw(k, N, prec);
    bool residue_row = (k == 2);
    long rows = prec + (residue_row ? 1 : 0);

    EchelonBasis span(rows);
    long id = 0;
    for (const auto& f : big_family->expansions) {
        CVec col;
        col.reserve(rows);
        for (long t = 0; t < prec; ++t) col.push_back(f.coeff(t));
        if (residue_row) col.push_back(CyclotomicNumber::one());
        span.add_column(id++, std::move(col));
    }

    for (const auto& v : small.symbols) {
        auto images = hecke_image(small.expansion(v), k, M);
        for (const auto& [m, comp] : images) {
            // component width divides m.d * N; lift into q^{1/L}
            QExpansion lifted = comp.lifted_to_width(L);
            if (lifted.truncation() < prec)
                throw NeedMoreCoefficients(prec);
            CVec vec;
            vec.reserve(rows);
            for (long t = 0; t < prec; ++t) vec.push_back(lifted.coeff(t));
            if (residue_row) vec.push_back(CyclotomicNumber(rat_from_longs(1, M)));
            std::map<long, CyclotomicNumber> combo;
            span.reduce(vec, &combo);
            StabilityEntry e{v, m, true, -1, {}};
            for (long t = 0; t < rows; ++t)
                if (!vec[t].is_zero()) {
                    e.pass = false;
                    e.first_residual_key = t;
                    break;
                }
            if (e.pass) {
                // residual is comp + sum combo[id] * family_id = 0
                for (const auto& [cid, co] : combo)
                    if (!co.is_zero()) e.coefficients.emplace_back(big_family->symbols[cid], -co);
            }
            report.all_pass &= e.pass;
            report.entries.push_back(std::move(e));
        }
    }
    return report;
}

} // namespace eisencusp

#endif
