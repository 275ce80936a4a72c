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

#ifndef EISENCUSP_LINALG_HPP
#define EISENCUSP_LINALG_HPP

#include <map>
#include <vector>

#include "cyclotomic.hpp"

namespace eisencusp {

using CVec = std::vector<CyclotomicNumber>;
using CMat = std::vector<CVec>;

inline CMat cmat_identity(long n) {
    CMat m(n, CVec(n, CyclotomicNumber::zero()));
    for (long i = 0; i < n; ++i) m[i][i] = CyclotomicNumber::one();
    return m;
}

inline CMat cmat_mul(const CMat& x, const CMat& y) {
    long n = static_cast<long>(x.size());
    long k = static_cast<long>(y.size());
    long m = k ? static_cast<long>(y[0].size()) : 0;
    CMat out(n, CVec(m, CyclotomicNumber::zero()));
    for (long i = 0; i < n; ++i)
        for (long t = 0; t < k; ++t) {
            if (x[i][t].is_zero()) continue;
            for (long j = 0; j < m; ++j) {
                if (y[t][j].is_zero()) continue;
                out[i][j] += x[i][t] * y[t][j];
            }
        }
    return out;
}

inline bool cmat_equal(const CMat& x, const CMat& y) {
    if (x.size() != y.size()) return false;
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].size() != y[i].size()) return false;
        for (size_t j = 0; j < x[i].size(); ++j)
            if (x[i][j] != y[i][j]) return false;
    }
    return true;
}

/// Incrementally built reduced column echelon basis over Q(zeta).  Columns are
/// fed one at a time; each pivot stores its expression in the original columns
/// so solutions can be read back.  Pivot rows follow the smallest coordinate
/// height, ties broken by lowest row index.
class EchelonBasis {
  public:
    struct Pivot {
        long row;
        CVec vec;                              // vec[row] == 1, reduced against other pivots
        std::map<long, CyclotomicNumber> combo;  // vec = sum combo[id] * column_id
    };

    explicit EchelonBasis(long nrows) : nrows_(nrows) {}

    long rows() const { return nrows_; }
    long rank() const { return static_cast<long>(pivots_.size()); }
    const std::vector<Pivot>& pivots() const { return pivots_; }

    /// v := v - sum alpha_p vec_p; combo accumulates the solution expression.
    void reduce(CVec& v, std::map<long, CyclotomicNumber>* combo = nullptr) const {
        for (const auto& p : pivots_) reduce_one(v, p, combo);
    }

    /// Returns true when column was independent (a pivot was added).
    bool add_column(long id, CVec v, CVec* tracked_target = nullptr,
                    std::map<long, CyclotomicNumber>* tracked_combo = nullptr) {
        std::map<long, CyclotomicNumber> combo;
        combo[id] = CyclotomicNumber::one();
        reduce(v, &combo);
        long r = select_pivot_row(v);
        if (r < 0) return false;
        CyclotomicNumber inv = v[r].inverse();
        for (auto& x : v) x = inv * x;
        for (auto& [cid, co] : combo) co = inv * co;
        Pivot p{r, std::move(v), std::move(combo)};
        for (auto& q : pivots_) reduce_one(q.vec, p, &q.combo);
        if (tracked_target) reduce_one(*tracked_target, p, tracked_combo);
        pivots_.push_back(std::move(p));
        return true;
    }

    static bool is_zero_vec(const CVec& v) {
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }

  private:
    long nrows_;
    std::vector<Pivot> pivots_;

    static void reduce_one(CVec& v, const Pivot& p, std::map<long, CyclotomicNumber>* combo) {
        const CyclotomicNumber& alpha = v[p.row];
        if (alpha.is_zero()) return;
        CyclotomicNumber a = alpha;  // copy: v[p.row] mutates below
        for (long t = 0; t < static_cast<long>(v.size()); ++t) {
            if (p.vec[t].is_zero()) continue;
            v[t] -= a * p.vec[t];
        }
        if (combo)
            for (const auto& [cid, co] : p.combo) {
                auto it = combo->find(cid);
                if (it == combo->end())
                    (*combo)[cid] = -(a * co);
                else {
                    it->second -= a * co;
                    if (it->second.is_zero()) combo->erase(it);
                }
            }
    }

    long select_pivot_row(const CVec& v) const {
        long best = -1;
        Integer best_h = 0;
        for (long t = 0; t < static_cast<long>(v.size()); ++t) {
            if (v[t].is_zero()) continue;
            Integer h = v[t].coordinate_height();
            if (best < 0 || h < best_h) {
                best = t;
                best_h = h;
            }
        }
        return best;
    }
};

/// Exact rank of a list of coefficient vectors.
inline long exact_rank(const std::vector<CVec>& vectors) {
    if (vectors.empty()) return 0;
    EchelonBasis basis(static_cast<long>(vectors[0].size()));
    long id = 0;
    for (const auto& v : vectors) basis.add_column(id++, v);
    return basis.rank();
}

/// Basis of the right nullspace of a (rows x cols) matrix over Q(zeta).
inline std::vector<CVec> nullspace(CMat a, long cols) {
    long rows = static_cast<long>(a.size());
    std::vector<long> pivot_col_of_row;
    long row = 0;
    std::vector<long> pivot_cols;
    for (long col = 0; col < cols && row < rows; ++col) {
        long pr = -1;
        for (long t = row; t < rows; ++t)
            if (!a[t][col].is_zero()) { pr = t; break; }
        if (pr < 0) continue;
        std::swap(a[row], a[pr]);
        CyclotomicNumber inv = a[row][col].inverse();
        for (long j = col; j < cols; ++j) a[row][j] = inv * a[row][j];
        for (long t = 0; t < rows; ++t) {
            if (t == row || a[t][col].is_zero()) continue;
            CyclotomicNumber f = a[t][col];
            for (long j = col; j < cols; ++j) a[t][j] -= f * a[row][j];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (long c : pivot_cols) is_pivot[c] = true;
    std::vector<CVec> basis;
    for (long free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        CVec v(cols, CyclotomicNumber::zero());
        v[free] = CyclotomicNumber::one();
        for (long i = 0; i < static_cast<long>(pivot_cols.size()); ++i)
            v[pivot_cols[i]] = -a[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace eisencusp

#endif
