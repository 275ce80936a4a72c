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

#ifndef EISENCUSP_REPRESENTATION_HPP
#define EISENCUSP_REPRESENTATION_HPP

#include "linalg.hpp"
#include "modgroup.hpp"

namespace eisencusp {

/// SL2(Z)-action on a finite basis given by generator images: basis vectors
/// map as e_i . g = phase_g[i] * e_{perm_g[i]} (a right action).  The defining
/// relations S^4 = id, (ST)^6 = id, S^2 central are verified on construction
/// via verify_relations().
struct PhasePermutationAction {
    long dim = 0;
    std::vector<long> t_perm, s_perm;
    std::vector<CyclotomicNumber> t_phase, s_phase;

    /// Right-action matrix of the generator: x . g = x M.
    CMat generator_matrix(char gen) const {
        const auto& perm = gen == 'T' ? t_perm : s_perm;
        const auto& phase = gen == 'T' ? t_phase : s_phase;
        CMat m(dim, CVec(dim, CyclotomicNumber::zero()));
        for (long i = 0; i < dim; ++i) m[i][perm[i]] = phase[i];
        return m;
    }

    CMat matrix_of(const GroupElement& g) const {
        CMat out = cmat_identity(dim);
        for (const auto& tok : word_in_ST(g)) {
            if (tok.gen == 'T') {
                long p = tok.power;
                CMat base = p >= 0 ? generator_matrix('T') : invert_permutation_matrix('T');
                long e = std::labs(p);
                while (e > 0) {  // binary exponentiation
                    if (e & 1) out = cmat_mul(out, base);
                    e >>= 1;
                    if (e) base = cmat_mul(base, base);
                }
            } else {
                CMat ms = generator_matrix('S');
                for (long i = 0; i < mod_reduce(tok.power, 4); ++i) out = cmat_mul(out, ms);
            }
        }
        return out;
    }

    bool verify_relations() const {
        if (static_cast<long>(t_perm.size()) != dim || static_cast<long>(s_perm.size()) != dim ||
            static_cast<long>(t_phase.size()) != dim || static_cast<long>(s_phase.size()) != dim)
            return false;
        CMat mt = generator_matrix('T');
        CMat ms = generator_matrix('S');
        CMat s2 = cmat_mul(ms, ms);
        CMat s4 = cmat_mul(s2, s2);
        if (!cmat_equal(s4, cmat_identity(dim))) return false;
        CMat st = cmat_mul(ms, mt);
        CMat st3 = cmat_mul(cmat_mul(st, st), st);
        if (!cmat_equal(cmat_mul(st3, st3), cmat_identity(dim))) return false;
        if (!cmat_equal(cmat_mul(s2, mt), cmat_mul(mt, s2))) return false;
        return true;
    }

  private:
    CMat invert_permutation_matrix(char gen) const {
        const auto& perm = gen == 'T' ? t_perm : s_perm;
        const auto& phase = gen == 'T' ? t_phase : s_phase;
        CMat m(dim, CVec(dim, CyclotomicNumber::zero()));
        for (long i = 0; i < dim; ++i) m[perm[i]][i] = phase[i].inverse();
        return m;
    }
};

/// Permutation action on the N^2 index vectors (phases all 1).
inline PhasePermutationAction index_action(long N) {
    auto idx = enumerate_indices(N);
    auto find = [&](const IndexVector& v) {
        return static_cast<long>(v.c * N + v.d);
    };
    PhasePermutationAction act;
    act.dim = static_cast<long>(idx.size());
    act.t_perm.resize(act.dim);
    act.s_perm.resize(act.dim);
    act.t_phase.assign(act.dim, CyclotomicNumber::one());
    act.s_phase.assign(act.dim, CyclotomicNumber::one());
    for (long i = 0; i < act.dim; ++i) {
        act.t_perm[i] = find(index_act(idx[i], GroupElement::T()));
        act.s_perm[i] = find(index_act(idx[i], GroupElement::S()));
    }
    return act;
}

/// Permutation action on right cosets of the subgroup (the basis of the
/// induced trivial representation).
inline PhasePermutationAction coset_action(SubgroupKind kind, long N) {
    auto reps = coset_representatives(kind, N);
    PhasePermutationAction act;
    act.dim = static_cast<long>(reps.size());
    act.t_perm.resize(act.dim);
    act.s_perm.resize(act.dim);
    act.t_phase.assign(act.dim, CyclotomicNumber::one());
    act.s_phase.assign(act.dim, CyclotomicNumber::one());
    for (long i = 0; i < act.dim; ++i) {
        act.t_perm[i] = coset_index(reps, kind, N, reps[i] * GroupElement::T());
        act.s_perm[i] = coset_index(reps, kind, N, reps[i] * GroupElement::S());
    }
    return act;
}

/// Exact basis of the T-fixed subspace intersected with the par(k)-eigenspace
/// of -I.  weight_parity: +1 for even weight, -1 for odd.
inline std::vector<CVec> fixed_and_parity(const PhasePermutationAction& act, int weight_parity) {
    if (!act.verify_relations())
        throw NotARepresentation("generator images violate the SL2(Z) relations");
    CMat mt = act.generator_matrix('T');
    CMat ms = act.generator_matrix('S');
    CMat s2 = cmat_mul(ms, ms);
    // row vectors x with x(M_T - I) = 0 and x(M_{S^2} - eps I) = 0;
    // transpose into a right-nullspace problem.
    long n = act.dim;
    CMat stacked(2 * n, CVec(n, CyclotomicNumber::zero()));
    CyclotomicNumber eps((long)weight_parity);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            stacked[j][i] = mt[i][j] - (i == j ? CyclotomicNumber::one() : CyclotomicNumber::zero());
            stacked[n + j][i] = s2[i][j] - (i == j ? eps : CyclotomicNumber::zero());
        }
    return nullspace(std::move(stacked), n);
}

} // namespace eisencusp

#endif
