// cache.cpp

#include "dkmax/cache.hpp"

#include <fstream>

#include "json.hpp"

#include "dkmax/bounds.hpp"
#include "dkmax/error.hpp"
#include "dkmax/version.hpp"

namespace dkmax {

namespace {

using ordered_json = nlohmann::ordered_json;

void append_lines(const std::filesystem::path& path, const std::vector<LambdaResult>& results) {
    std::ofstream out(path, std::ios::app | std::ios::binary);
    if (!out) fail(ErrorKind::io_error, "cannot open cache file " + path.string() + " for writing");
    for (const auto& r : results) out << to_cache_line(r) << '\n';
    out.flush();
    if (!out) fail(ErrorKind::io_error, "write to cache file " + path.string() + " failed");
}

}  // namespace

std::string to_cache_line(const LambdaResult& r, const char* tool_version) {
    ordered_json factors = ordered_json::array();
    for (const auto& f : r.n_max.factors()) factors.push_back({f.prime, f.exponent});
    ordered_json j;
    j["k"] = r.k;
    j["lambda"] = r.lambda;
    j["nmax_factors"] = std::move(factors);
    j["eps_lo"] = r.eps_lo;
    j["eps_hi"] = r.eps_hi;
    j["eps1_used"] = r.eps1_used;
    j["lambda1"] = r.lambda1;
    j["tool_version"] = tool_version ? tool_version : kToolVersion;
    return j.dump();
}

LambdaResult from_cache_line(const std::string& line) {
    LambdaResult r;
    try {
        const auto j = ordered_json::parse(line);
        r.k = j.at("k").get<std::uint64_t>();
        r.lambda = j.at("lambda").get<double>();
        std::vector<PrimePower> factors;
        for (const auto& f : j.at("nmax_factors"))
            factors.push_back({f.at(0).get<std::uint64_t>(), f.at(1).get<std::uint32_t>()});
        r.n_max = FactoredNat(std::move(factors));
        r.eps_lo = j.at("eps_lo").get<double>();
        r.eps_hi = j.at("eps_hi").get<double>();
        r.eps1_used = j.at("eps1_used").get<double>();
        r.lambda1 = j.at("lambda1").get<double>();
        j.at("tool_version").get<std::string>();
        if (r.k < 2) fail(ErrorKind::cache_error, "k < 2");
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::cache_error, e.what());
    } catch (const Error& e) {
        fail(ErrorKind::cache_error, e.what());
    }
    r.eps2 = stopping_eps(r.k);
    r.implied_eps = implied_epsilon(r);
    return r;
}

CacheLoad load_cache(const std::filesystem::path& path, bool strict) {
    CacheLoad out;
    std::ifstream in(path, std::ios::binary);
    if (!in) return out;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (line.empty()) continue;
        const std::string where = path.string() + ":" + std::to_string(lineno);
        try {
            const auto version = ordered_json::parse(line).at("tool_version").get<std::string>();
            if (version != kToolVersion) {
                out.warnings.push_back(where + ": written by '" + version + "', skipped");
                continue;
            }
            out.results.push_back(from_cache_line(line));
        } catch (const std::exception& e) {
            if (strict) fail(ErrorKind::cache_error, where + ": " + e.what());
            out.warnings.push_back(where + ": malformed line skipped (" + e.what() + ")");
        }
    }
    return out;
}

void store_cache(const std::filesystem::path& path, const std::vector<LambdaResult>& results) {
    append_lines(path, results);
}

ResultCache::ResultCache(std::filesystem::path path, bool strict) : path_(std::move(path)) {
    CacheLoad loaded = load_cache(path_, strict);
    warnings_ = std::move(loaded.warnings);
    for (auto& r : loaded.results) by_k_.insert_or_assign(r.k, std::move(r));
}

std::optional<LambdaResult> ResultCache::find(std::uint64_t k) const {
    const auto it = by_k_.find(k);
    if (it == by_k_.end()) return std::nullopt;
    return it->second;
}

void ResultCache::append(const LambdaResult& result) {
    append_lines(path_, {result});
    by_k_.insert_or_assign(result.k, result);
}

}  // namespace dkmax
