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

#ifndef EISENCUSP_ETA_HPP
#define EISENCUSP_ETA_HPP

#include "qexpansion.hpp"

namespace eisencusp {

/// prod_delta eta(delta tau)^{r_delta} with eta = q^{1/24} prod (1 - q^m).
/// Exact integer coefficients; used to generate solver targets.
inline QExpansion eta_quotient(const std::vector<std::pair<long, long>>& spec, long prec) {
    long total = 0;
    for (auto [delta, r] : spec) {
        if (delta < 1) throw std::domain_error("eta_quotient: divisor must be positive");
        total += delta * r;
    }
    if (total < 0) throw std::domain_error("eta_quotient: negative leading exponent not supported");
    long g = gcd_long(mod_reduce(total, 24), 24);
    long width = 24 / g;
    long offset = (total / 24) * width + (mod_reduce(total, 24) / g);
    long n_int = std::max<long>(0, (prec - offset + width - 1) / width);

    // dense integer product of (1 - x^{delta m})^{r}; division for r < 0
    std::vector<Integer> p(std::max<long>(n_int, 1), Integer(0));
    p[0] = 1;
    long len = static_cast<long>(p.size());
    for (auto [delta, r] : spec) {
        for (long t = 0; t < std::abs(r); ++t) {
            for (long m = 1; delta * m < len; ++m) {
                long k = delta * m;
                if (r > 0)
                    for (long i = len - 1; i >= k; --i) p[i] -= p[i - k];
                else
                    for (long i = k; i < len; ++i) p[i] += p[i - k];
            }
        }
    }

    QExpansion out(width, 1, prec);
    for (long i = 0; i < n_int; ++i) {
        long key = offset + width * i;
        if (key >= prec) break;
        if (p[i] != 0) out.set_coeff(key, CyclotomicNumber(p[i]));
    }
    return out;
}

} // namespace eisencusp

#endif
