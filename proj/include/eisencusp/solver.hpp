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

#ifndef EISENCUSP_SOLVER_HPP
#define EISENCUSP_SOLVER_HPP

#include <optional>
#include <variant>

#include "bounds.hpp"
#include "cache.hpp"
#include "linalg.hpp"
#include "representation.hpp"

namespace eisencusp {

/// A factor usable in product columns: a small combination of family symbols
/// with its expansion.  Weight-2 factors are differences against a base
/// symbol, so every factor is holomorphic; other weights take one canonical
/// representative of each {v, -v} pair.
struct FactorBasisElement {
    std::vector<std::pair<IndexVector, CyclotomicNumber>> combo;
    QExpansion series;
};

/// Symbol combinations only (no series); shared between the expansion-level
/// factor basis and the constant-term machinery.
inline std::vector<std::vector<std::pair<IndexVector, CyclotomicNumber>>> factor_combos(long k, long N) {
    std::vector<std::vector<std::pair<IndexVector, CyclotomicNumber>>> out;
    std::vector<IndexVector> reps;
    for (const auto& v : enumerate_indices(N)) {
        auto nv = v.negated();
        if (nv < v) continue;  // keep v <= -v
        reps.push_back(v);
    }
    if (k == 2) {
        IndexVector base(N, 0, 0);
        for (const auto& v : reps) {
            if (v == base) continue;
            out.push_back({{v, CyclotomicNumber::one()}, {base, -CyclotomicNumber::one()}});
        }
    } else {
        for (const auto& v : reps) {
            if (eisenstein_structurally_zero(k, v)) continue;
            out.push_back({{v, CyclotomicNumber::one()}});
        }
    }
    return out;
}

inline std::vector<FactorBasisElement> factor_basis(const EisensteinFamily& fam) {
    std::vector<FactorBasisElement> out;
    for (auto& combo : factor_combos(fam.weight, fam.level)) {
        FactorBasisElement e;
        QExpansion acc(fam.level, fam.level, fam.truncation);
        for (const auto& [v, c] : combo) acc += c * fam.expansion(v);
        if (acc.is_zero()) continue;
        e.combo = std::move(combo);
        e.series = std::move(acc);
        out.push_back(std::move(e));
    }
    return out;
}

/// Exact coefficients expressing a target form in a product basis.  The
/// object from which all cusp expansions are read.
struct ExpressionCertificate {
    std::string target_description;
    long target_level = 1;  // level of the target's invariance group
    std::string target_group = "Gamma0";
    std::vector<std::pair<long, long>> target_eta;  // regeneration recipe, may be empty

    long k = 1, l = 1;
    long level_products = 1;
    std::optional<long> level_eisenstein;

    std::vector<std::tuple<EisensteinSymbol, EisensteinSymbol, CyclotomicNumber>> product_terms;
    std::vector<std::pair<EisensteinSymbol, CyclotomicNumber>> eisenstein_terms;

    long verified_truncation = 0;  // rows verified, in q^{1/common_width()}

    long common_width() const { return lcm_long(level_products, level_eisenstein.value_or(1)); }
};

struct ResidualReport {
    std::optional<long> first_mismatch_key;  // in q^{1/common_width()}
    CyclotomicNumber mismatch;               // exact magnitude at that key
    long truncation_checked = 0;
    long threshold = 0;
    bool holomorphy_gates_ok = true;
    bool verified = false;
};

struct RankDefectReport {
    long rank = 0;
    long columns_processed = 0;
    long first_unmatched_row = -1;
    long rows = 0;
};

using ExpressResult = std::variant<ExpressionCertificate, RankDefectReport>;

/// Sturm row count in q^{1/W} units for forms of the given weight on
/// Gamma(Lambda), when expansions are compared as width-W series.
inline long sturm_rows(long weight, long lambda, long W) {
    Integer idx = index_gamma_full(Integer(lambda));
    // ceil(weight*idx/12 * W/lambda) + 1
    Rational x = Rational(weight) * Rational(idx) * Rational(W) / (Rational(12) * Rational(lambda));
    x.canonicalize();
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q.get_si() + 1;
}

inline long certificate_threshold(const ExpressionCertificate& cert) {
    long W = cert.common_width();
    long lambda = lcm_long(W, cert.target_level);
    return sturm_rows(cert.k + cert.l, lambda, W);
}

/// Per-factor holomorphy constraints: a weight-2 factor may only occur in
/// combinations annihilated by the residue functional.
inline bool certificate_gates_ok(const ExpressionCertificate& cert) {
    if (cert.k == 2) {
        std::map<EisensteinSymbol, CyclotomicNumber> by_second;
        for (const auto& [a, b, c] : cert.product_terms) {
            auto it = by_second.find(b);
            if (it == by_second.end())
                by_second.emplace(b, c);
            else
                it->second += c;
        }
        for (const auto& [b, sum] : by_second)
            if (!sum.is_zero()) return false;
    }
    if (cert.l == 2) {
        std::map<EisensteinSymbol, CyclotomicNumber> by_first;
        for (const auto& [a, b, c] : cert.product_terms) {
            auto it = by_first.find(a);
            if (it == by_first.end())
                by_first.emplace(a, c);
            else
                it->second += c;
        }
        for (const auto& [a, sum] : by_first)
            if (!sum.is_zero()) return false;
    }
    if (cert.k + cert.l == 2 && !cert.eisenstein_terms.empty()) {
        CyclotomicNumber sum = CyclotomicNumber::zero();
        for (const auto& [u, c] : cert.eisenstein_terms) sum += c;
        if (!sum.is_zero()) return false;
    }
    return true;
}

/// Re-sum the certificate with every factor index transported by gamma: the
/// expansion of target |_{k+l} gamma at infinity, truncated at prec rows of
/// q^{1/common_width()}.  Product terms are grouped by first symbol so each
/// distinct first factor costs one series multiplication.
inline QExpansion reconstruct_certificate(const ExpressionCertificate& cert, const GroupElement& g, long prec,
                                          FamilyStore& store) {
    long W = cert.common_width();
    long L = cert.level_products;
    auto fam_k = store.get(cert.k, L, prec);
    auto fam_l = cert.k == cert.l ? fam_k : store.get(cert.l, L, prec);

    QExpansion acc(W, 1, prec);

    std::map<IndexVector, QExpansion> grouped;  // first-symbol index (already slashed) -> sum of second factors
    for (const auto& [a, b, coeff] : cert.product_terms) {
        IndexVector av = index_act(a.v, g), bv = index_act(b.v, g);
        auto it = grouped.find(av);
        QExpansion term = coeff * fam_l->expansion(bv);
        if (it == grouped.end())
            grouped.emplace(av, std::move(term));
        else
            it->second += term;
    }
    for (const auto& [av, second_sum] : grouped) acc += fam_k->expansion(av) * second_sum;

    if (cert.level_eisenstein) {
        auto fam_e = store.get(cert.k + cert.l, *cert.level_eisenstein, prec);
        for (const auto& [u, coeff] : cert.eisenstein_terms)
            acc += coeff * fam_e->expansion(index_act(u.v, g));
    }
    return acc.truncated(prec);
}

/// Recompute both sides through max(threshold, extra_prec) and report the
/// first mismatch, if any.  "verified" needs the holomorphy gates, zero
/// residual, and coverage past the Sturm threshold.
inline ResidualReport verify_certificate(const ExpressionCertificate& cert, const QExpansion& target, long extra_prec,
                                         FamilyStore& store) {
    ResidualReport report;
    report.threshold = certificate_threshold(cert);
    report.holomorphy_gates_ok = certificate_gates_ok(cert);
    if (!report.holomorphy_gates_ok) return report;  // rejected before residual computation

    long W = cert.common_width();
    if (W % target.width() != 0)
        throw MalformedInput("target.width", "must divide the certificate's common width");
    QExpansion target_w = target.lifted_to_width(W);

    long want = std::max(report.threshold, extra_prec);
    long checked = std::min(want, target_w.truncation());
    report.truncation_checked = checked;

    QExpansion recon = reconstruct_certificate(cert, GroupElement::identity(), checked, store);
    QExpansion diff = target_w.truncated(checked) - recon;
    if (!diff.is_zero()) {
        report.first_mismatch_key = diff.order();
        report.mismatch = diff.coeff(diff.order());
        return report;
    }
    report.verified = checked >= report.threshold;
    return report;
}

struct ExpressOptions {
    long k = 1, l = 1;
    long level_products = 1;
    std::optional<long> level_eisenstein;
    std::optional<long> prec;  // solving depth override; the Sturm-based floor always applies
    std::string target_description;
    long target_level = 1;
    std::string target_group = "Gamma0";
    std::vector<std::pair<long, long>> target_eta;
};

/// Build the exact linear system whose columns are infinity-components of
/// products G_{k,L,v} G_{l,L,w} (weight-1/2 factors from the constrained
/// subspaces) plus optionally the weight-(k+l) family, and solve for the
/// target.  Columns stream through an incremental echelon basis with the
/// target tracked, so the solve stops as soon as the target enters the span.
inline ExpressResult express(const QExpansion& target, const ExpressOptions& opt, FamilyStore& store) {
    long L = opt.level_products;
    long W = lcm_long(L, opt.level_eisenstein.value_or(1));
    long lambda = lcm_long(W, opt.target_level);
    long rows = sturm_rows(opt.k + opt.l, lambda, W) + 5;
    if (opt.prec) rows = std::max(rows, *opt.prec);

    if (W % target.width() != 0) throw MalformedInput("target.width", "must divide the working width");
    QExpansion target_w = target.lifted_to_width(W);
    if (target_w.truncation() < rows)
        throw NeedMoreCoefficients((rows + W / target.width() - 1) / (W / target.width()));

    auto fam_k = store.get(opt.k, L, rows);
    auto fam_l = opt.k == opt.l ? fam_k : store.get(opt.l, L, rows);
    auto basis_k = factor_basis(*fam_k);
    auto basis_l = opt.k == opt.l ? basis_k : factor_basis(*fam_l);

    struct ColumnSpec {
        long id;
        bool is_block;
        long i, j;  // factor indices, or block element index in i
    };
    std::vector<ColumnSpec> columns;
    std::vector<FactorBasisElement> block_basis;
    long next_id = 0;
    if (opt.level_eisenstein) {
        auto fam_e = store.get(opt.k + opt.l, *opt.level_eisenstein, rows);
        block_basis = factor_basis(*fam_e);
        for (long i = 0; i < static_cast<long>(block_basis.size()); ++i)
            columns.push_back({next_id++, true, i, -1});
    }
    bool symmetric = (opt.k == opt.l);
    for (long i = 0; i < static_cast<long>(basis_k.size()); ++i)
        for (long j = symmetric ? i : 0; j < static_cast<long>(basis_l.size()); ++j)
            columns.push_back({next_id++, false, i, j});

    EchelonBasis span(rows);
    CVec t(rows);
    for (long m = 0; m < rows; ++m) t[m] = target_w.coeff(m);
    std::map<long, CyclotomicNumber> t_combo;
    bool solved = EchelonBasis::is_zero_vec(t);

    const long batch_size = 16;
    long processed = 0;
    std::vector<std::pair<ColumnSpec, CVec>> batch;
    auto make_column = [&](const ColumnSpec& spec) {
        const QExpansion* series;
        QExpansion prod;
        if (spec.is_block) {
            series = &block_basis[spec.i].series;
        } else {
            prod = basis_k[spec.i].series * basis_l[spec.j].series;
            series = &prod;
        }
        QExpansion lifted = series->width() == W ? *series : series->lifted_to_width(W);
        CVec col(rows);
        for (long m = 0; m < rows; ++m) col[m] = lifted.coeff(m);
        return col;
    };

    for (size_t pos = 0; pos < columns.size() && !solved; pos += batch_size) {
        size_t end = std::min(columns.size(), pos + batch_size);
        batch.clear();
        batch.resize(end - pos);
        std::vector<std::thread> workers;
        std::atomic<size_t> next{0};
        long nthreads = std::min<long>(static_cast<long>(end - pos),
                                       std::max(1u, std::thread::hardware_concurrency()));
        for (long w = 0; w < nthreads; ++w)
            workers.emplace_back([&]() {
                for (;;) {
                    size_t idx = next.fetch_add(1);
                    if (idx >= end - pos) break;
                    batch[idx] = {columns[pos + idx], make_column(columns[pos + idx])};
                }
            });
        for (auto& worker : workers) worker.join();
        for (auto& [spec, col] : batch) {
            ++processed;
            span.add_column(spec.id, std::move(col), &t, &t_combo);
            if (EchelonBasis::is_zero_vec(t)) { solved = true; break; }
        }
    }

    if (!solved) {
        RankDefectReport defect;
        defect.rank = span.rank();
        defect.columns_processed = processed;
        defect.rows = rows;
        for (long m = 0; m < rows; ++m)
            if (!t[m].is_zero()) { defect.first_unmatched_row = m; break; }
        return defect;
    }

    ExpressionCertificate cert;
    cert.target_description = opt.target_description;
    cert.target_level = opt.target_level;
    cert.target_group = opt.target_group;
    cert.target_eta = opt.target_eta;
    cert.k = opt.k;
    cert.l = opt.l;
    cert.level_products = L;
    cert.level_eisenstein = opt.level_eisenstein;

    // the tracked reduction ends at 0 = target + sum combo[cid] col_cid,
    // so the solution coefficients are the negated combo entries
    std::map<std::pair<EisensteinSymbol, EisensteinSymbol>, CyclotomicNumber> prod_acc;
    std::map<EisensteinSymbol, CyclotomicNumber> eis_acc;
    for (const auto& [cid, combo_coeff] : t_combo) {
        CyclotomicNumber coeff = -combo_coeff;
        if (coeff.is_zero()) continue;
        const ColumnSpec& spec = columns[cid];
        if (spec.is_block) {
            for (const auto& [u, cu] : block_basis[spec.i].combo) {
                EisensteinSymbol sym{opt.k + opt.l, *opt.level_eisenstein, u};
                auto it = eis_acc.find(sym);
                if (it == eis_acc.end())
                    eis_acc.emplace(sym, coeff * cu);
                else
                    it->second += coeff * cu;
            }
        } else {
            for (const auto& [u, cu] : basis_k[spec.i].combo)
                for (const auto& [w, cw] : basis_l[spec.j].combo) {
                    EisensteinSymbol sa{opt.k, L, u}, sb{opt.l, L, w};
                    auto key = std::make_pair(sa, sb);
                    auto it = prod_acc.find(key);
                    auto val = coeff * cu * cw;
                    if (it == prod_acc.end())
                        prod_acc.emplace(key, val);
                    else
                        it->second += val;
                }
        }
    }
    for (auto& [key, val] : prod_acc)
        if (!val.is_zero()) cert.product_terms.emplace_back(key.first, key.second, val);
    for (auto& [sym, val] : eis_acc)
        if (!val.is_zero()) cert.eisenstein_terms.emplace_back(sym, val);

    // Independent-path re-verification; a certificate is never returned
    // unverified.
    auto report = verify_certificate(cert, target, rows, store);
    if (!report.verified)
        throw std::logic_error("internal: solved system failed verification at key " +
                               std::to_string(report.first_mismatch_key.value_or(-1)));
    cert.verified_truncation = report.truncation_checked;
    return cert;
}

/// Expansion of the target at the cusp gamma(infinity), read off the
/// certificate by index transport.  Refuses certificates that were not
/// verified past their Sturm threshold.
inline QExpansion cusp_expansion(const ExpressionCertificate& cert, const GroupElement& g, long prec,
                                 FamilyStore& store) {
    if (!certificate_gates_ok(cert)) throw RefusedUnverified("certificate violates the holomorphy gates");
    if (cert.verified_truncation < certificate_threshold(cert))
        throw RefusedUnverified("certificate not verified past the Sturm threshold");
    return reconstruct_certificate(cert, g, prec, store);
}

struct Cusp {
    std::string label;
    GroupElement gamma;
};

/// Cusp representatives of Gamma0(N): a/c with c | N, a mod gcd(c, N/c).
inline std::vector<Cusp> gamma0_cusps(long N) {
    std::vector<Cusp> out;
    auto divs = divisors(N);
    for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
        long c = *it;
        long g = gcd_long(c, N / c);
        for (long a0 = 0; a0 < std::max(1L, g); ++a0) {
            if (g > 1 && std::gcd(a0, g) != 1) continue;
            if (c == N && a0 <= 1) {
                if (a0 == (g > 1 ? 1 : 0)) out.push_back({"oo", GroupElement::identity()});
                continue;
            }
            if (c == 1) {
                out.push_back({"0", GroupElement::S()});
                continue;
            }
            // lift a = a0 (mod g) with gcd(a, c) = 1
            long a = a0 == 0 ? g : a0;
            for (long tries = 0; std::gcd(a, c) != 1 && tries < 4 * c + 4; ++tries) a += g;
            if (std::gcd(a, c) != 1) throw std::logic_error("gamma0_cusps: no coprime lift");
            // gamma with first column (a, c): a*y - x*c = 1
            long x = 0, y = 0;
            for (long yy = 1; yy <= c; ++yy)
                if (mod_reduce(a * yy - 1, c) == 0) {
                    y = yy;
                    x = (a * yy - 1) / c;
                    break;
                }
            out.push_back({std::to_string(a) + "/" + std::to_string(c), GroupElement(a, x, c, y)});
        }
    }
    return out;
}

/// Exact rank of the span of expansions through prec (in the common width),
/// stabilized: reported only when two successive precision increments agree.
inline long span_rank(const std::vector<QExpansion>& exps, long prec0) {
    if (exps.empty()) return 0;
    long W = 1;
    for (const auto& f : exps) W = lcm_long(W, f.width());
    auto rank_at = [&](long p) {
        std::vector<CVec> rows;
        for (const auto& f : exps) {
            QExpansion lifted = f.lifted_to_width(W);
            if (lifted.truncation() < p) throw NeedMoreCoefficients((p * f.width() + W - 1) / W);
            CVec row(p);
            for (long m = 0; m < p; ++m) row[m] = lifted.coeff(m);
            rows.push_back(std::move(row));
        }
        return exact_rank(rows);
    };
    long p = std::max<long>(4, prec0);
    long step = std::max<long>(4, p / 2);
    long budget = 4;
    long r = rank_at(p);
    for (long i = 0; i < budget; ++i) {
        long r2 = rank_at(p + step);
        if (r2 == r) return r;
        r = r2;
        p += step;
    }
    throw RankUnstable(p);
}

/// Rank of the weight-k level-N family (holomorphy-constrained at weight 2).
inline long family_rank(long k, long N, FamilyStore& store) {
    long p0 = std::max<long>(8, 4 * N);
    auto fam = store.get(k, N, p0 + 4 * std::max<long>(4, p0 / 2));
    std::vector<QExpansion> exps;
    if (k == 2) {
        for (auto& e : factor_basis(*fam)) exps.push_back(e.series);
    } else {
        for (auto& f : fam->expansions)
            if (!f.is_zero()) exps.push_back(f);
    }
    if (exps.empty()) return 0;
    return span_rank(exps, p0);
}

// ---- constant-term machinery -------------------------------------------

/// Gamma1(N)-averaged constant-term vectors over the Gamma1(N) cosets: the
/// span realizes the constant coefficients of weight-k type-rho^x_N
/// Eisenstein series.  Weight-2 symbols enter as holomorphic differences.
inline std::vector<CVec> eisenstein_constant_vectors(long k, long N) {
    auto cosets = coset_representatives(SubgroupKind::Gamma1, N);
    auto img = gamma1_image_mod(N, N);
    std::vector<CVec> out;
    for (const auto& combo : factor_combos(k, N)) {
        CVec vec;
        vec.reserve(cosets.size());
        for (const auto& gj : cosets) {
            CyclotomicNumber acc = CyclotomicNumber::zero();
            for (const auto& g : img)
                for (const auto& [u, cu] : combo) {
                    IndexVector moved = index_act(index_act_mod(u, g), gj);
                    acc += cu * eisenstein_constant_term(k, N, moved.c, moved.d);
                }
            vec.push_back(acc);
        }
        out.push_back(std::move(vec));
    }
    return out;
}

/// Same averaging applied to products of two factor families at levels
/// (L1, L2); realizes the constant terms of the invariant product space.
inline std::vector<CVec> product_constant_vectors(long k, long l, long N, long L1, long L2) {
    auto cosets = coset_representatives(SubgroupKind::Gamma1, N);
    long lambda = lcm_long(N, lcm_long(L1, L2));
    auto img = gamma1_image_mod(N, lambda);
    auto combos_k = factor_combos(k, L1);
    auto combos_l = factor_combos(l, L2);

    // precompute per-coset transported constants for every symbol combo
    auto transported = [&](long weight, long L,
                           const std::vector<std::vector<std::pair<IndexVector, CyclotomicNumber>>>& combos) {
        // value[combo][coset][g] laid out as combo -> coset -> sum over combo symbols
        std::vector<std::vector<std::vector<CyclotomicNumber>>> val(
            combos.size(), std::vector<std::vector<CyclotomicNumber>>(cosets.size()));
        for (size_t ci = 0; ci < combos.size(); ++ci)
            for (size_t j = 0; j < cosets.size(); ++j) {
                auto& slot = val[ci][j];
                slot.reserve(img.size());
                for (const auto& g : img) {
                    Sl2ModElement gL{mod_reduce(g.a, L), mod_reduce(g.b, L), mod_reduce(g.c, L), mod_reduce(g.d, L)};
                    CyclotomicNumber acc = CyclotomicNumber::zero();
                    for (const auto& [u, cu] : combos[ci]) {
                        IndexVector uL(L, u.c, u.d);
                        IndexVector moved = index_act(index_act_mod(uL, gL), cosets[j]);
                        acc += cu * eisenstein_constant_term(weight, L, moved.c, moved.d);
                    }
                    slot.push_back(acc);
                }
            }
        return val;
    };
    auto val_k = transported(k, L1, combos_k);
    auto val_l = transported(l, L2, combos_l);

    std::vector<CVec> out;
    for (size_t a = 0; a < combos_k.size(); ++a)
        for (size_t b = 0; b < combos_l.size(); ++b) {
            CVec vec;
            vec.reserve(cosets.size());
            for (size_t j = 0; j < cosets.size(); ++j) {
                CyclotomicNumber acc = CyclotomicNumber::zero();
                for (size_t gi = 0; gi < img.size(); ++gi) acc += val_k[a][j][gi] * val_l[b][j][gi];
                vec.push_back(acc);
            }
            out.push_back(std::move(vec));
        }
    return out;
}

inline long vector_span_rank(const std::vector<CVec>& vectors) { return exact_rank(vectors); }

// ---- certificate serialization -------------------------------------------

inline constexpr const char* kCertificateFormatVersion = "eisencusp-certificate-v1";

inline Json symbol_to_json(const EisensteinSymbol& s) {
    return Json{{"k", s.k}, {"N", s.N}, {"c", s.v.c}, {"d", s.v.d}};
}

inline EisensteinSymbol symbol_from_json(const Json& j) {
    for (const char* f : {"k", "N", "c", "d"})
        if (!j.contains(f) || !j[f].is_number_integer()) throw MalformedInput(f, "missing or non-integer in symbol");
    long k = j["k"].get<long>(), N = j["N"].get<long>();
    return {k, N, IndexVector(N, j["c"].get<long>(), j["d"].get<long>())};
}

inline Json certificate_to_json(const ExpressionCertificate& cert) {
    Json eta = Json::array();
    for (auto [d, r] : cert.target_eta) eta.push_back(Json::array({d, r}));
    Json products = Json::array();
    for (const auto& [a, b, c] : cert.product_terms)
        products.push_back(Json::array({symbol_to_json(a), symbol_to_json(b), cyclo_to_json(c)}));
    Json eis = Json::array();
    for (const auto& [u, c] : cert.eisenstein_terms) eis.push_back(Json::array({symbol_to_json(u), cyclo_to_json(c)}));
    return Json{{"format_version", kCertificateFormatVersion},
                {"target_meta", Json{{"description", cert.target_description},
                                     {"level", cert.target_level},
                                     {"group", cert.target_group},
                                     {"eta", eta}}},
                {"k", cert.k},
                {"l", cert.l},
                {"levels", Json{{"products", cert.level_products},
                                {"eisenstein", cert.level_eisenstein ? Json(*cert.level_eisenstein) : Json(nullptr)}}},
                {"product_terms", products},
                {"eisenstein_terms", eis},
                {"verified_truncation", cert.verified_truncation}};
}

inline ExpressionCertificate certificate_from_json(const Json& j) {
    if (!j.contains("format_version") || j["format_version"] != kCertificateFormatVersion)
        throw MalformedInput("format_version", "unsupported certificate format");
    ExpressionCertificate cert;
    const auto& meta = j.at("target_meta");
    cert.target_description = meta.value("description", std::string{});
    cert.target_level = meta.value("level", 1L);
    cert.target_group = meta.value("group", std::string{"Gamma0"});
    if (meta.contains("eta"))
        for (const auto& e : meta["eta"]) cert.target_eta.emplace_back(e.at(0).get<long>(), e.at(1).get<long>());
    cert.k = j.at("k").get<long>();
    cert.l = j.at("l").get<long>();
    cert.level_products = j.at("levels").at("products").get<long>();
    if (!j.at("levels").at("eisenstein").is_null()) cert.level_eisenstein = j.at("levels").at("eisenstein").get<long>();
    for (const auto& t : j.at("product_terms"))
        cert.product_terms.emplace_back(symbol_from_json(t.at(0)), symbol_from_json(t.at(1)), cyclo_from_json(t.at(2)));
    for (const auto& t : j.at("eisenstein_terms"))
        cert.eisenstein_terms.emplace_back(symbol_from_json(t.at(0)), cyclo_from_json(t.at(1)));
    cert.verified_truncation = j.at("verified_truncation").get<long>();
    return cert;
}

} // namespace eisencusp

#endif
