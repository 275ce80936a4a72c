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

#ifndef EISENCUSP_BOUNDS_HPP
#define EISENCUSP_BOUNDS_HPP

#include <optional>
#include <string>

#include "arith.hpp"

namespace eisencusp {

/// B(k, N) = ceil((k/12) N prod_{p|N} (1 + 1/p)); k may be half-integral.
inline Integer sturm_bound(const Rational& k, const Integer& N) {
    if (sgn(k) <= 0 || N < 1) throw std::domain_error("sturm_bound: need k > 0, N >= 1");
    Rational x = k / Rational(12) * Rational(N);
    for (auto& [p, e] : factorize(N)) x *= Rational(p + 1) / Rational(p);
    x.canonicalize();
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

inline Integer sturm_bound(long k, long N) { return sturm_bound(Rational(k), Integer(N)); }

struct BoundRequest {
    long k = 1, l = 1;
    long N = 1;
    bool generated_by_T_fixed = false;
};

struct TheoremBounds {
    std::optional<Integer> N0;                 // empty <=> no explicit formula (k = l = 1)
    std::string n0_case;                       // which branch of the table fired
    bool n0_uses_half_integral_sturm = false;  // the B(k+1/2, N) value is formula-extrapolated
    std::optional<Integer> half_integral_sturm;
    std::optional<long> N1;                    // empty <=> not covered (k = l = 1)
    Integer sturm_weight_sum;                  // B(k+l, N), for reference output
};

/// Explicit levels at which the product basis is guaranteed to capture cusp
/// forms (N0) and Eisenstein series (N1).  N0 case selection is symmetrized
/// (k <= l first); the general-type variant multiplies N0 by an additional
/// factor N.  N1 is the smallest admissible integer coprime to N.
inline TheoremBounds theorem_bounds(const BoundRequest& req) {
    if (req.k < 1 || req.l < 1 || req.N < 1) throw std::domain_error("theorem_bounds: need k, l, N >= 1");
    TheoremBounds out;
    long k = std::min(req.k, req.l);
    long l = std::max(req.k, req.l);
    long N = req.N;
    out.sturm_weight_sum = sturm_bound(k + l, N);

    if (k == 1 && l == 1) {
        out.n0_case = "k = l = 1: existence only, no explicit formula";
    } else if (k != l && k % 2 == 0) {
        out.N0 = Integer(N) * sturm_bound(k + l, N);
        out.n0_case = "k != l, k even: N B(k+l, N)";
    } else if (k != l) {
        out.N0 = Integer(16) * Integer(N) * sturm_bound(Rational(k + l), Integer(16) * Integer(N));
        out.n0_case = "k != l, k odd: 16 N B(k+l, 16 N)";
    } else {
        Rational half = Rational(2 * k + 1) / Rational(2);
        Integer bh = sturm_bound(half, Integer(N));
        out.half_integral_sturm = bh;
        out.n0_uses_half_integral_sturm = true;
        Integer c = Integer(16) * bh;
        Integer c4 = c * c * c * c;
        out.N0 = Integer(N) * c4 * sturm_bound(Rational(k + l), c4);
        out.n0_case = "k = l >= 2: N (16 B(k+1/2, N))^4 B(k+l, (16 B(k+1/2, N))^4)";
    }
    if (out.N0 && !req.generated_by_T_fixed) *out.N0 *= N;

    // N1 thresholds keep the user's factor orientation; the first weight must
    // be >= 2, so k = 1 with l >= 2 goes through the symmetric variant.
    long ka = req.k, la = req.l;
    if (ka == 1 && la >= 2) std::swap(ka, la);
    if (ka >= 2) {
        long threshold;
        if (la == 1)
            threshold = 3;
        else if (ka == 2 || la == 2)
            threshold = 2;  // a weight-2 factor needs a nontrivial constituent
        else if (la % 2 == 0)
            threshold = 1;
        else
            threshold = 2;
        long n1 = threshold;
        while (std::gcd(n1, N) != 1) ++n1;
        out.N1 = n1;
    }
    return out;
}

/// Coefficient count (in q^{1/L}) past which agreement of two weight-w forms
/// on Gamma(L) forces equality: ceil((w/12) [SL2(Z) : Gamma(L)]) + 1.
inline long sturm_threshold_gamma(long weight, long L) {
    Integer idx = index_gamma_full(Integer(L));
    Integer num = Integer(weight) * idx;
    Integer q;
    Integer den = 12;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q.get_si() + 1;
}

} // namespace eisencusp

#endif
