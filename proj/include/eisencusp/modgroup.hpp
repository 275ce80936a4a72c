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

#ifndef EISENCUSP_MODGROUP_HPP
#define EISENCUSP_MODGROUP_HPP

#include <array>
#include <vector>

#include "arith.hpp"

namespace eisencusp {

struct GroupElement {
    long a = 1, b = 0, c = 0, d = 1;

    GroupElement() = default;
    GroupElement(long a_, long b_, long c_, long d_) : a(a_), b(b_), c(c_), d(d_) {
        if (a * d - b * c != 1) throw std::domain_error("GroupElement: determinant must be 1");
    }

    static GroupElement identity() { return {}; }
    static GroupElement S() { return {0, -1, 1, 0}; }
    static GroupElement T() { return {1, 1, 0, 1}; }
    static GroupElement T_pow(long n) { return {1, n, 0, 1}; }
    static GroupElement minus_identity() { return {-1, 0, 0, -1}; }

    GroupElement inverse() const { return {d, -b, -c, a}; }

    friend GroupElement operator*(const GroupElement& x, const GroupElement& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }

    friend bool operator==(const GroupElement& x, const GroupElement& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
};

/// Word token: generator ('T' or 'S') and its power.
struct WordToken {
    char gen;
    long power;
};

/// Continued-fraction style decomposition of gamma as a word in S and T.
/// Multiplying the tokens out left to right reproduces gamma exactly.
inline std::vector<WordToken> word_in_ST(GroupElement g) {
    std::vector<WordToken> word;
    auto floor_div = [](long x, long y) {
        long q = x / y;
        if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
        return q;
    };
    while (g.c != 0) {
        long n = floor_div(g.a, g.c);
        word.push_back({'T', n});
        g = GroupElement::T_pow(-n) * g;  // now 0 <= g.a < |g.c|
        word.push_back({'S', 1});
        g = GroupElement::S().inverse() * g;
    }
    // g = [[e, b],[0, e]] with e = +-1
    if (g.a == 1) {
        if (g.b != 0) word.push_back({'T', g.b});
    } else {
        if (-g.b != 0) word.push_back({'T', -g.b});
        word.push_back({'S', 2});  // S^2 = -I
    }
    return word;
}

inline GroupElement evaluate_word(const std::vector<WordToken>& word) {
    GroupElement g = GroupElement::identity();
    for (const auto& tok : word) {
        if (tok.gen == 'T') {
            g = g * GroupElement::T_pow(tok.power);
        } else {
            for (long i = 0; i < mod_reduce(tok.power, 4); ++i) g = g * GroupElement::S();
        }
    }
    return g;
}

/// Row (cbar, dbar) in (Z/N)^2 carrying the right SL2(Z) action.
struct IndexVector {
    long N = 1;
    long c = 0, d = 0;

    IndexVector() = default;
    IndexVector(long N_, long c_, long d_) : N(N_), c(mod_reduce(c_, N_)), d(mod_reduce(d_, N_)) {}

    IndexVector negated() const { return {N, -c, -d}; }

    friend bool operator==(const IndexVector& x, const IndexVector& y) {
        return x.N == y.N && x.c == y.c && x.d == y.d;
    }
    friend bool operator<(const IndexVector& x, const IndexVector& y) {
        return std::array<long, 3>{x.N, x.c, x.d} < std::array<long, 3>{y.N, y.c, y.d};
    }
};

/// Right action (cbar, dbar) -> (cbar a + dbar c, cbar b + dbar d) mod N.
inline IndexVector index_act(const IndexVector& v, const GroupElement& g) {
    return {v.N, v.c * g.a + v.d * g.c, v.c * g.b + v.d * g.d};
}

/// All N^2 index vectors, lexicographic.
inline std::vector<IndexVector> enumerate_indices(long N) {
    std::vector<IndexVector> out;
    out.reserve(N * N);
    for (long c = 0; c < N; ++c)
        for (long d = 0; d < N; ++d) out.emplace_back(N, c, d);
    return out;
}

enum class SubgroupKind { Gamma0, Gamma1, GammaFull };

inline bool in_subgroup(SubgroupKind kind, long N, const GroupElement& g) {
    switch (kind) {
        case SubgroupKind::Gamma0:
            return mod_reduce(g.c, N) == 0;
        case SubgroupKind::Gamma1:
            return mod_reduce(g.c, N) == 0 && mod_reduce(g.a - 1, N) == 0 && mod_reduce(g.d - 1, N) == 0;
        case SubgroupKind::GammaFull:
            return mod_reduce(g.c, N) == 0 && mod_reduce(g.b, N) == 0 && mod_reduce(g.a - 1, N) == 0 &&
                   mod_reduce(g.d - 1, N) == 0;
    }
    return false;
}

inline Integer subgroup_index(SubgroupKind kind, long N) {
    switch (kind) {
        case SubgroupKind::Gamma0: return index_gamma0(N);
        case SubgroupKind::Gamma1: return index_gamma1(N);
        case SubgroupKind::GammaFull: return index_gamma_full(Integer(N));
    }
    return Integer(0);
}

namespace detail {

// (c0, d0) = (c, d) mod N with gcd(c0, d0) = 1; requires gcd(c, d, N) = 1.
inline std::pair<long, long> lift_coprime_pair(long c, long d, long N) {
    c = mod_reduce(c, N);
    d = mod_reduce(d, N);
    if (N == 1) return {0, 1};
    if (std::gcd(std::gcd(c, d), N) != 1) throw std::domain_error("lift_coprime_pair: gcd(c, d, N) != 1");
    for (long jc = 0; jc <= 1; ++jc) {
        long c0 = c + jc * N;
        if (c0 == 0) {
            if (std::gcd(d, N) == 1) return {N, d};
            continue;
        }
        for (long jd = 0; jd <= 4 * c0 + 4; ++jd) {
            long d0 = d + jd * N;
            if (std::gcd(c0, d0) == 1) return {c0, d0};
        }
    }
    throw std::logic_error("lift_coprime_pair: no lift found");
}

// SL2(Z) element with bottom row (c0, d0), gcd(c0, d0) = 1.
inline GroupElement complete_bottom_row(long c0, long d0) {
    long x = 0, y = 0;
    // extended gcd: x*d0 - y*c0 = 1
    long old_r = d0, r = c0, old_s = 1, s = 0;
    while (r != 0) {
        long q = old_r / r;
        long tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    // old_r = gcd = +-1 = old_s*d0 + t*c0 for the implicit t
    long gcd = old_r;
    x = old_s;
    // solve for y from x*d0 - y*c0 = gcd
    if (c0 != 0)
        y = (x * d0 - gcd) / c0;
    else
        y = 0;
    if (gcd == -1) { x = -x; y = -y; }
    return GroupElement(x, y, c0, d0);
}

} // namespace detail

/// Right-coset representatives of the subgroup in SL2(Z), deterministic order.
/// Count equals the group index.
inline std::vector<GroupElement> coset_representatives(SubgroupKind kind, long N) {
    std::vector<GroupElement> out;
    if (N == 1) return {GroupElement::identity()};
    switch (kind) {
        case SubgroupKind::Gamma1: {
            // cosets <-> bottom rows (c, d) mod N with gcd(c, d, N) = 1
            for (long c = 0; c < N; ++c)
                for (long d = 0; d < N; ++d) {
                    if (std::gcd(std::gcd(c, d), N) != 1) continue;
                    auto [c0, d0] = detail::lift_coprime_pair(c, d, N);
                    out.push_back(detail::complete_bottom_row(c0, d0));
                }
            break;
        }
        case SubgroupKind::Gamma0: {
            // cosets <-> P^1(Z/N); canonical orbit representative under unit scaling
            std::vector<std::pair<long, long>> seen;
            for (long c = 0; c < N; ++c)
                for (long d = 0; d < N; ++d) {
                    if (std::gcd(std::gcd(c, d), N) != 1) continue;
                    std::pair<long, long> canon{N, N};
                    for (long u = 1; u < N; ++u) {
                        if (std::gcd(u, N) != 1) continue;
                        std::pair<long, long> cand{mod_reduce(u * c, N), mod_reduce(u * d, N)};
                        if (cand < canon) canon = cand;
                    }
                    if (std::pair<long, long>{c, d} != canon) continue;
                    auto [c0, d0] = detail::lift_coprime_pair(c, d, N);
                    out.push_back(detail::complete_bottom_row(c0, d0));
                }
            break;
        }
        case SubgroupKind::GammaFull: {
            for (long a = 0; a < N; ++a)
                for (long b = 0; b < N; ++b)
                    for (long c = 0; c < N; ++c)
                        for (long d = 0; d < N; ++d) {
                            if (mod_reduce(a * d - b * c, N) != 1) continue;
                            auto [c0, d0] = detail::lift_coprime_pair(c, d, N);
                            GroupElement base = detail::complete_bottom_row(c0, d0);
                            // adjust the top row by t*(c0, d0) to hit (a, b) mod N
                            bool found = false;
                            for (long t = 0; t < N && !found; ++t) {
                                long x = base.a + t * c0, y = base.b + t * d0;
                                if (mod_reduce(x - a, N) == 0 && mod_reduce(y - b, N) == 0) {
                                    out.push_back(GroupElement(x, y, c0, d0));
                                    found = true;
                                }
                            }
                            if (!found) throw std::logic_error("coset_representatives: top row adjustment failed");
                        }
            break;
        }
    }
    return out;
}

/// Index of the coset containing gamma within the representative list.
inline long coset_index(const std::vector<GroupElement>& reps, SubgroupKind kind, long N, const GroupElement& g) {
    for (size_t i = 0; i < reps.size(); ++i)
        if (in_subgroup(kind, N, g * reps[i].inverse())) return static_cast<long>(i);
    throw std::logic_error("coset_index: element not covered by representatives");
}

/// All elements of SL2(Z/N), as lifted SL2(Z) matrices would reduce to them;
/// entries normalized into [0, N).
struct Sl2ModElement {
    long a, b, c, d;
};

inline std::vector<Sl2ModElement> sl2_mod(long N) {
    std::vector<Sl2ModElement> out;
    for (long a = 0; a < N; ++a)
        for (long b = 0; b < N; ++b)
            for (long c = 0; c < N; ++c)
                for (long d = 0; d < N; ++d)
                    if (mod_reduce(a * d - b * c - 1, N) == 0) out.push_back({a, b, c, d});
    return out;
}

/// Image of Gamma1(M) inside SL2(Z/N) for M | N (membership only depends on
/// the mod-M reduction, so the image is the congruence filter).
inline std::vector<Sl2ModElement> gamma1_image_mod(long M, long N) {
    if (N % M != 0) throw std::domain_error("gamma1_image_mod: M must divide N");
    std::vector<Sl2ModElement> out;
    for (const auto& g : sl2_mod(N))
        if (mod_reduce(g.c, M) == 0 && mod_reduce(g.a - 1, M) == 0 && mod_reduce(g.d - 1, M) == 0) out.push_back(g);
    return out;
}

inline IndexVector index_act_mod(const IndexVector& v, const Sl2ModElement& g) {
    return {v.N, v.c * g.a + v.d * g.c, v.c * g.b + v.d * g.d};
}

} // namespace eisencusp

#endif
