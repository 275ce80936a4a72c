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

#include <iostream>

#include <CLI11.hpp>

#include <eisencusp/eta.hpp>
#include <eisencusp/hecke.hpp>
#include <eisencusp/solver.hpp>

using namespace eisencusp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMalformed = 1;
constexpr int kExitNoSolution = 2;
constexpr int kExitVerification = 3;

std::pair<long, long> parse_pair(const std::string& s, const std::string& field) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw MalformedInput(field, "expected 'c,d'");
    try {
        return {std::stol(s.substr(0, comma)), std::stol(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw MalformedInput(field, "expected integers 'c,d'");
    }
}

GroupElement parse_gamma(const std::string& s) {
    std::vector<long> v;
    size_t pos = 0;
    while (pos <= s.size()) {
        auto comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            v.push_back(std::stol(tok));
        } catch (const std::exception&) {
            throw MalformedInput("gamma", "expected integers 'a,b,c,d'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (v.size() != 4) throw MalformedInput("gamma", "expected four comma-separated integers");
    if (v[0] * v[3] - v[1] * v[2] != 1) throw MalformedInput("gamma", "determinant must be 1");
    return GroupElement(v[0], v[1], v[2], v[3]);
}

struct TargetFile {
    QExpansion series;
    std::string description;
    long level = 1;
    std::string group = "Gamma0";
    std::vector<std::pair<long, long>> eta;
};

TargetFile load_target(const std::string& path) {
    Json doc;
    try {
        doc = Json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInput("target", std::string("invalid JSON: ") + e.what());
    }
    TargetFile t;
    t.series = qexpansion_from_json(doc);
    if (doc.contains("meta")) {
        const auto& meta = doc["meta"];
        t.description = meta.value("description", std::string{});
        t.level = meta.value("level", 1L);
        t.group = meta.value("group", std::string{"Gamma0"});
        if (meta.contains("eta"))
            for (const auto& e : meta["eta"]) t.eta.emplace_back(e.at(0).get<long>(), e.at(1).get<long>());
    }
    return t;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run_check_suite(const std::string& suite, FamilyStore& store) {
    Json results = Json::array();
    bool all_pass = true;
    auto record = [&](const std::string& name, bool pass, const Json& extra = Json::object()) {
        Json r = Json{{"name", name}, {"pass", pass}};
        for (auto& [k, v] : extra.items()) r[k] = v;
        results.push_back(r);
        all_pass &= pass;
    };

    if (suite == "oracles") {
        for (long k = 3; k <= 6; ++k)
            for (long N = 1; N <= 3; ++N) {
                auto fam = store.get(k, N, oracle_gate_truncation(N));
                for (std::complex<double> tau : {std::complex<double>(0, 1), std::complex<double>(0.3, 1.1)}) {
                    double worst = 0;
                    for (const auto& v : fam->symbols) {
                        auto [lv, lt] = lattice_sum_numeric(fam->symbol(v), tau, 400);
                        auto [sv, st] = fam->expansion(v).eval(tau);
                        worst = std::max(worst, std::abs(lv - sv));
                    }
                    record("lattice k=" + std::to_string(k) + " N=" + std::to_string(N), worst <= 1e-8,
                           Json{{"max_discrepancy", worst}});
                }
            }
        for (long k = 1; k <= 2; ++k)
            for (long N = 2; N <= 5; ++N) {
                auto fam = store.get(k, N, oracle_gate_truncation(N));
                double worst = 0;
                for (const auto& r : modularity_check(*fam, GroupElement::S(), {0.2, 0.9}, 1e-8))
                    worst = std::max(worst, r.discrepancy);
                record("modularity k=" + std::to_string(k) + " N=" + std::to_string(N), worst <= 1e-8,
                       Json{{"max_discrepancy", worst}});
            }
        {
            // negative control: a perturbed family must fail
            auto fam = eisenstein_family_raw(4, 2, oracle_gate_truncation(2));
            auto& f = fam.expansions[fam.symbol_position(IndexVector(2, 0, 1))];
            f.set_coeff(2, f.coeff(2) + CyclotomicNumber(rat_from_longs(1, 1000)));
            bool failed = false;
            for (const auto& r : modularity_check(fam, GroupElement::S(), {0.2, 0.9}, 1e-8)) failed |= !r.pass;
            record("negative control detects perturbation", failed);
        }
    } else if (suite == "hecke") {
        for (long M = 1; M <= 60; ++M)
            if (Integer(delta_m(M).size()) != sigma1(M)) record("delta size M=" + std::to_string(M), false);
        record("delta sizes M<=60", true);
        for (long k = 1; k <= 4; ++k)
            for (long N = 1; N <= 3; ++N)
                for (long M = 2; M <= 3; ++M) {
                    long prec = sturm_threshold_gamma(k, M * N) + 4;
                    auto rep = hecke_stability_check(k, N, M, prec);
                    record("stability k=" + std::to_string(k) + " N=" + std::to_string(N) + " M=" + std::to_string(M),
                           rep.all_pass, Json{{"rows", rep.prec}});
                }
    } else if (suite == "parity") {
        for (long k = 1; k <= 4; ++k)
            for (long N = 1; N <= 5; ++N) {
                bool ok = true;
                try {
                    eisenstein_family_raw(k, N, 12);  // runs exact parity and T-equivariance checks
                } catch (const std::exception&) {
                    ok = false;
                }
                record("parity/T k=" + std::to_string(k) + " N=" + std::to_string(N), ok);
            }
    } else {
        throw MalformedInput("suite", "expected oracles, hecke, or parity");
    }

    emit(Json{{"suite", suite}, {"pass", all_pass}, {"results", results}});
    return all_pass ? kExitOk : kExitVerification;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Eisenstein series engine: expansions at all cusps, product-basis certificates"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string cache_dir;
    app.add_option("--cache", cache_dir, "cache directory (default: EISENCUSP_CACHE or the user cache dir)");

    // eisenstein
    auto* cmd_eis = app.add_subcommand("eisenstein", "print one normalized Eisenstein expansion as JSON");
    long e_weight = 0, e_level = 0, e_prec = 0;
    std::string e_index;
    cmd_eis->add_option("--weight", e_weight, "weight k >= 1")->required();
    cmd_eis->add_option("--level", e_level, "level N >= 1")->required();
    cmd_eis->add_option("--index", e_index, "index 'c,d'")->required();
    cmd_eis->add_option("--prec", e_prec, "number of q^{1/N} coefficients")->required();

    // family
    auto* cmd_family = app.add_subcommand("family", "generate or load a cached family and print a summary");
    long f_weight = 0, f_level = 0, f_prec = 0;
    cmd_family->add_option("--weight", f_weight)->required();
    cmd_family->add_option("--level", f_level)->required();
    cmd_family->add_option("--prec", f_prec)->required();

    // rank
    auto* cmd_rank = app.add_subcommand("rank", "exact rank of a family span");
    long r_weight = 0, r_level = 0;
    bool r_ct = false;
    cmd_rank->add_option("--weight", r_weight)->required();
    cmd_rank->add_option("--level", r_level)->required();
    cmd_rank->add_flag("--constant-terms", r_ct, "rank of the constant-term space over the cosets");

    // bounds
    auto* cmd_bounds = app.add_subcommand("bounds", "Sturm bound and the guaranteed product-basis levels N0, N1");
    long b_k = 0, b_l = 0, b_level = 0;
    bool b_generated = false;
    cmd_bounds->add_option("--k", b_k)->required();
    cmd_bounds->add_option("--l", b_l)->required();
    cmd_bounds->add_option("--level", b_level)->required();
    cmd_bounds->add_flag("--generated", b_generated, "type generated by its T-fixed vectors");

    // express
    auto* cmd_express = app.add_subcommand("express", "solve for a product-basis certificate");
    std::string x_target, x_output;
    long x_k = 0, x_l = 0, x_lp = 0, x_le = -1, x_prec = -1, x_max_level = -1;
    bool x_escalate = false;
    cmd_express->add_option("--target", x_target, "target QExpansion JSON file")->required();
    cmd_express->add_option("--k", x_k)->required();
    cmd_express->add_option("--l", x_l)->required();
    cmd_express->add_option("--level-products", x_lp)->required();
    cmd_express->add_option("--level-eis", x_le, "weight-(k+l) Eisenstein block level");
    cmd_express->add_option("--prec", x_prec, "solving depth override");
    cmd_express->add_flag("--escalate", x_escalate, "retry at level multiples on failure");
    cmd_express->add_option("--max-level", x_max_level, "escalation ceiling (default 4x)");
    cmd_express->add_option("--output", x_output, "write certificate JSON here (default stdout)");

    // cusps
    auto* cmd_cusps = app.add_subcommand("cusps", "expansions of a certified target at cusps");
    std::string c_cert, c_gamma;
    bool c_all = false;
    long c_prec = -1;
    cmd_cusps->add_option("--certificate", c_cert)->required();
    cmd_cusps->add_option("--gamma", c_gamma, "matrix 'a,b,c,d'");
    cmd_cusps->add_flag("--all-cusps", c_all, "all cusps of Gamma0(target level)");
    cmd_cusps->add_option("--prec", c_prec, "coefficients per expansion");

    // check
    auto* cmd_check = app.add_subcommand("check", "run an invariant suite, machine readable");
    std::string k_suite;
    cmd_check->add_option("--suite", k_suite, "oracles | hecke | parity")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        FamilyStore store(cache_dir.empty() ? default_cache_directory() : std::filesystem::path(cache_dir));

        if (*cmd_eis) {
            if (e_weight < 1) throw MalformedInput("weight", "must be >= 1");
            if (e_level < 1) throw MalformedInput("level", "must be >= 1");
            if (e_prec < 1) throw MalformedInput("prec", "must be >= 1");
            auto [c, d] = parse_pair(e_index, "index");
            auto fam = store.get(e_weight, e_level, e_prec);
            emit(qexpansion_to_json(fam->expansion(IndexVector(e_level, c, d)).truncated(e_prec)));
            return kExitOk;
        }

        if (*cmd_family) {
            if (f_weight < 1) throw MalformedInput("weight", "must be >= 1");
            if (f_level < 1) throw MalformedInput("level", "must be >= 1");
            if (f_prec < 1) throw MalformedInput("prec", "must be >= 1");
            auto fam = store.get(f_weight, f_level, f_prec);
            emit(Json{{"weight", fam->weight},
                      {"level", fam->level},
                      {"truncation", fam->truncation},
                      {"symbols", fam->symbols.size()},
                      {"weight2_residue", fam->weight2_residue},
                      {"normalization", eisenstein_normalization(fam->weight, fam->level)},
                      {"cache_directory", store.directory().string()}});
            return kExitOk;
        }

        if (*cmd_rank) {
            if (r_weight < 1) throw MalformedInput("weight", "must be >= 1");
            if (r_level < 1) throw MalformedInput("level", "must be >= 1");
            long rank = r_ct ? vector_span_rank(eisenstein_constant_vectors(r_weight, r_level))
                             : family_rank(r_weight, r_level, store);
            emit(Json{{"weight", r_weight},
                      {"level", r_level},
                      {"constant_terms", r_ct},
                      {"rank", rank}});
            return kExitOk;
        }

        if (*cmd_bounds) {
            if (b_k < 1) throw MalformedInput("k", "must be >= 1");
            if (b_l < 1) throw MalformedInput("l", "must be >= 1");
            if (b_level < 1) throw MalformedInput("level", "must be >= 1");
            auto b = theorem_bounds({b_k, b_l, b_level, b_generated});
            Json out{{"k", b_k},
                     {"l", b_l},
                     {"level", b_level},
                     {"generated_by_T_fixed", b_generated},
                     {"sturm_B", b.sturm_weight_sum.get_str()},
                     {"N0", b.N0 ? Json(b.N0->get_str()) : Json("not-explicit")},
                     {"N0_case", b.n0_case},
                     {"N1", b.N1 ? Json(*b.N1) : Json("not-covered")}};
            if (b.half_integral_sturm)
                out["half_integral_sturm"] =
                    Json{{"value", b.half_integral_sturm->get_str()}, {"status", "formula-extrapolated"}};
            emit(out);
            return kExitOk;
        }

        if (*cmd_express) {
            auto target = load_target(x_target);
            ExpressOptions opt;
            opt.k = x_k;
            opt.l = x_l;
            opt.level_products = x_lp;
            if (x_le >= 1) opt.level_eisenstein = x_le;
            if (x_prec >= 1) opt.prec = x_prec;
            opt.target_description = target.description;
            opt.target_level = target.level;
            opt.target_group = target.group;
            opt.target_eta = target.eta;
            if (x_k < 1) throw MalformedInput("k", "must be >= 1");
            if (x_l < 1) throw MalformedInput("l", "must be >= 1");
            if (x_lp < 1) throw MalformedInput("level-products", "must be >= 1");
            if (cmd_express->count("--level-eis") && x_le < 1) throw MalformedInput("level-eis", "must be >= 1");

            long ceiling = x_max_level >= 1 ? x_max_level : 4 * x_lp;
            ExpressResult res = express(target.series, opt, store);
            while (x_escalate && std::holds_alternative<RankDefectReport>(res)) {
                long next = 0;
                for (long mult = 2;; ++mult) {
                    if (opt.level_products * mult > ceiling) break;
                    next = opt.level_products * mult;
                    break;
                }
                if (next == 0) break;
                opt.level_products = next;
                if (opt.level_eisenstein) opt.level_eisenstein = lcm_long(*opt.level_eisenstein, next);
                res = express(target.series, opt, store);
            }

            if (std::holds_alternative<RankDefectReport>(res)) {
                const auto& defect = std::get<RankDefectReport>(res);
                emit(Json{{"status", "no-solution"},
                          {"rank", defect.rank},
                          {"columns_processed", defect.columns_processed},
                          {"rows", defect.rows},
                          {"first_unmatched_row", defect.first_unmatched_row}});
                return kExitNoSolution;
            }
            auto cert = std::get<ExpressionCertificate>(res);
            Json doc = certificate_to_json(cert);
            if (x_output.empty())
                emit(doc);
            else {
                write_file_atomic(x_output, doc.dump(2) + "\n");
                emit(Json{{"status", "ok"},
                          {"certificate", x_output},
                          {"product_terms", cert.product_terms.size()},
                          {"eisenstein_terms", cert.eisenstein_terms.size()},
                          {"verified_truncation", cert.verified_truncation}});
            }
            return kExitOk;
        }

        if (*cmd_cusps) {
            Json doc;
            try {
                doc = Json::parse(read_file(c_cert));
            } catch (const nlohmann::json::exception& e) {
                throw MalformedInput("certificate", std::string("invalid JSON: ") + e.what());
            }
            auto cert = certificate_from_json(doc);
            long prec = c_prec >= 1 ? c_prec : certificate_threshold(cert);
            Json expansions = Json::array();
            auto emit_at = [&](const std::string& label, const GroupElement& g) {
                auto e = cusp_expansion(cert, g, prec, store);
                expansions.push_back(Json{{"cusp", label},
                                          {"gamma", Json::array({g.a, g.b, g.c, g.d})},
                                          {"expansion", qexpansion_to_json(e)}});
            };
            if (c_all) {
                if (cert.target_group != "Gamma0")
                    throw MalformedInput("group", "--all-cusps enumerates Gamma0 cusps; got '" + cert.target_group + "'");
                for (const auto& cusp : gamma0_cusps(cert.target_level)) emit_at(cusp.label, cusp.gamma);
            } else if (!c_gamma.empty()) {
                auto g = parse_gamma(c_gamma);
                emit_at("gamma", g);
            } else {
                emit_at("oo", GroupElement::identity());
            }
            emit(Json{{"target", cert.target_description},
                      {"level", cert.target_level},
                      {"expansions", expansions}});
            return kExitOk;
        }

        if (*cmd_check) return run_check_suite(k_suite, store);
    } catch (const MalformedInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const RefusedUnverified& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    } catch (const NeedMoreCoefficients& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    }
    return kExitOk;
}
