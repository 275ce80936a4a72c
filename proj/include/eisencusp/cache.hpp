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

#ifndef EISENCUSP_CACHE_HPP
#define EISENCUSP_CACHE_HPP

#include <cstdlib>
#include <filesystem>
#include <memory>
#include <mutex>

#include "oracles.hpp"
#include "serialize.hpp"

namespace eisencusp {

inline std::filesystem::path default_cache_directory() {
    if (const char* env = std::getenv("EISENCUSP_CACHE")) return std::filesystem::path(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME")) return std::filesystem::path(xdg) / "eisencusp";
    if (const char* home = std::getenv("HOME")) return std::filesystem::path(home) / ".cache" / "eisencusp";
    return std::filesystem::temp_directory_path() / "eisencusp-cache";
}

/// Eisenstein families, memoized in memory and persisted as JSON documents
/// keyed by (weight, level, truncation, format version).  Fresh generations
/// must pass the exact structural checks plus both numerical oracles before
/// they are cached; loads re-run the exact checks.  Disk writes are atomic
/// (write to temp, then rename), so concurrent readers never see torn files.
class FamilyStore {
  public:
    explicit FamilyStore(std::filesystem::path dir = default_cache_directory(), bool use_disk = true)
        : dir_(std::move(dir)), use_disk_(use_disk) {}

    const std::filesystem::path& directory() const { return dir_; }

    std::shared_ptr<const EisensteinFamily> get(long k, long N, long prec) {
        std::lock_guard<std::mutex> lock(mtx_);
        auto key = std::make_pair(k, N);
        auto it = memo_.find(key);
        if (it != memo_.end() && it->second->truncation >= prec) return it->second;

        if (use_disk_) {
            if (auto fam = load_from_disk(k, N, prec)) {
                memo_[key] = fam;
                return fam;
            }
        }

        long gen_prec = std::max(prec, oracle_gate_truncation(N));
        auto fam = std::make_shared<EisensteinFamily>(eisenstein_family_raw(k, N, gen_prec));
        validate_family_numerically(*fam);
        if (use_disk_) store_to_disk(*fam);
        memo_[key] = fam;
        return fam;
    }

  private:
    std::filesystem::path dir_;
    bool use_disk_;
    std::mutex mtx_;
    std::map<std::pair<long, long>, std::shared_ptr<const EisensteinFamily>> memo_;

    std::string file_name(long k, long N, long T) const {
        return "family_w" + std::to_string(k) + "_N" + std::to_string(N) + "_T" + std::to_string(T) + ".v1.json";
    }

    std::shared_ptr<const EisensteinFamily> load_from_disk(long k, long N, long prec) {
        std::error_code ec;
        if (!std::filesystem::is_directory(dir_, ec)) return nullptr;
        std::string prefix = "family_w" + std::to_string(k) + "_N" + std::to_string(N) + "_T";
        long best_T = -1;
        for (const auto& entry : std::filesystem::directory_iterator(dir_, ec)) {
            std::string name = entry.path().filename().string();
            if (name.rfind(prefix, 0) != 0 || name.size() < prefix.size() + 8) continue;
            if (name.substr(name.size() - 8) != ".v1.json") continue;
            long T = std::atol(name.substr(prefix.size()).c_str());
            if (T >= prec && (best_T < 0 || T < best_T)) best_T = T;
        }
        if (best_T < 0) return nullptr;
        try {
            auto doc = Json::parse(read_file((dir_ / file_name(k, N, best_T)).string()));
            auto fam = std::make_shared<EisensteinFamily>(family_from_json(doc));
            if (fam->weight != k || fam->level != N || fam->truncation < prec) return nullptr;
            detail::check_family_exact_invariants(*fam);
            return fam;
        } catch (const std::exception&) {
            return nullptr;  // unreadable cache entries are regenerated
        }
    }

    void store_to_disk(const EisensteinFamily& fam) {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        auto path = dir_ / file_name(fam.weight, fam.level, fam.truncation);
        write_file_atomic(path.string(), family_to_json(fam).dump());
    }
};

} // namespace eisencusp

#endif
