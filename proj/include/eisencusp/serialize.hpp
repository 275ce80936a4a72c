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

#ifndef EISENCUSP_SERIALIZE_HPP
#define EISENCUSP_SERIALIZE_HPP

#include <fstream>

#include <json.hpp>

#include "eisenstein.hpp"
#include "qexpansion.hpp"

namespace eisencusp {

using Json = nlohmann::ordered_json;

inline Json cyclo_to_json(const CyclotomicNumber& v) {
    Json coords = Json::array();
    for (const auto& r : v.coords()) coords.push_back(rational_to_string(r));
    return Json{{"conductor", v.conductor()}, {"coords", coords}};
}

inline CyclotomicNumber cyclo_from_json(const Json& j) {
    if (!j.contains("conductor") || !j["conductor"].is_number_integer())
        throw MalformedInput("conductor", "missing or non-integer");
    long n = j["conductor"].get<long>();
    if (n < 1) throw MalformedInput("conductor", "must be positive");
    if (!j.contains("coords") || !j["coords"].is_array()) throw MalformedInput("coords", "missing or not an array");
    std::vector<Rational> coords;
    for (const auto& s : j["coords"]) {
        if (!s.is_string()) throw MalformedInput("coords", "entries must be 'p/q' strings");
        coords.push_back(rational_from_string(s.get<std::string>()));
    }
    if (static_cast<long>(coords.size()) != euler_phi(n))
        throw MalformedInput("coords", "expected phi(conductor) coordinates");
    return CyclotomicNumber(n, std::move(coords));
}

/// Wire format: {width, conductor, truncation, coeffs: [[m, [coords...]]...]}
/// with rationals as "p/q" strings.  Round trips bit-exactly.
inline Json qexpansion_to_json(const QExpansion& f) {
    Json coeffs = Json::array();
    for (const auto& [m, v] : f.coeffs()) {
        Json coords = Json::array();
        CyclotomicNumber lifted = v.lifted_to(f.conductor());
        for (const auto& r : lifted.coords()) coords.push_back(rational_to_string(r));
        coeffs.push_back(Json::array({m, coords}));
    }
    return Json{{"width", f.width()}, {"conductor", f.conductor()}, {"truncation", f.truncation()}, {"coeffs", coeffs}};
}

inline QExpansion qexpansion_from_json(const Json& j) {
    for (const char* field : {"width", "conductor", "truncation"})
        if (!j.contains(field) || !j[field].is_number_integer())
            throw MalformedInput(field, "missing or non-integer");
    long width = j["width"].get<long>();
    long conductor = j["conductor"].get<long>();
    long trunc = j["truncation"].get<long>();
    if (width < 1) throw MalformedInput("width", "must be positive");
    if (conductor < 1) throw MalformedInput("conductor", "must be positive");
    if (trunc < 0) throw MalformedInput("truncation", "must be nonnegative");
    if (!j.contains("coeffs") || !j["coeffs"].is_array()) throw MalformedInput("coeffs", "missing or not an array");
    QExpansion f(width, conductor, trunc);
    long phi = euler_phi(conductor);
    for (const auto& entry : j["coeffs"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() || !entry[1].is_array())
            throw MalformedInput("coeffs", "entries must be [m, [coords...]]");
        long m = entry[0].get<long>();
        if (m < 0 || m >= trunc) throw MalformedInput("coeffs", "key outside [0, truncation)");
        if (static_cast<long>(entry[1].size()) != phi)
            throw MalformedInput("coeffs", "expected phi(conductor) coordinates");
        std::vector<Rational> coords;
        for (const auto& s : entry[1]) {
            if (!s.is_string()) throw MalformedInput("coeffs", "coordinates must be 'p/q' strings");
            coords.push_back(rational_from_string(s.get<std::string>()));
        }
        f.set_coeff(m, CyclotomicNumber(conductor, std::move(coords)));
    }
    return f;
}

inline constexpr const char* kFamilyFormatVersion = "eisencusp-family-v1";

inline Json family_to_json(const EisensteinFamily& fam) {
    Json exps = Json::array();
    for (size_t i = 0; i < fam.symbols.size(); ++i)
        exps.push_back(Json::array({fam.symbols[i].c, fam.symbols[i].d, qexpansion_to_json(fam.expansions[i])}));
    return Json{{"format_version", kFamilyFormatVersion},
                {"weight", fam.weight},
                {"level", fam.level},
                {"truncation", fam.truncation},
                {"normalization", eisenstein_normalization(fam.weight, fam.level)},
                {"weight2_residue", fam.weight2_residue},
                {"expansions", exps}};
}

inline EisensteinFamily family_from_json(const Json& j) {
    if (!j.contains("format_version") || j["format_version"] != kFamilyFormatVersion)
        throw MalformedInput("format_version", "unsupported family format");
    EisensteinFamily fam;
    fam.weight = j.at("weight").get<long>();
    fam.level = j.at("level").get<long>();
    fam.truncation = j.at("truncation").get<long>();
    fam.weight2_residue = j.at("weight2_residue").get<bool>();
    fam.symbols = enumerate_indices(fam.level);
    fam.expansions.assign(fam.symbols.size(), QExpansion());
    if (!j.contains("expansions") || !j["expansions"].is_array() || j["expansions"].size() != fam.symbols.size())
        throw MalformedInput("expansions", "wrong cardinality");
    for (const auto& entry : j["expansions"]) {
        long c = entry.at(0).get<long>(), d = entry.at(1).get<long>();
        fam.expansions[fam.symbol_position(IndexVector(fam.level, c, d))] = qexpansion_from_json(entry.at(2));
    }
    return fam;
}

inline void write_file_atomic(const std::string& path, const std::string& contents) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
        out << contents;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) throw std::runtime_error("cannot rename into " + path);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

} // namespace eisencusp

#endif
