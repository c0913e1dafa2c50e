// cache.hpp
// Append-only JSON-lines store of LambdaResult, one line per k.
//
//   {"k":2,"lambda":...,"nmax_factors":[[2,5],...],"eps_lo":...,"eps_hi":...,
//    "eps1_used":...,"lambda1":...,"tool_version":"dkmax 1.0.0"}
//
// Floats are written in shortest round-trip form, so a reloaded record is
// bit-identical to the stored one.

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dkmax/maximizer.hpp"

namespace dkmax {

std::string to_cache_line(const LambdaResult& result, const char* tool_version = nullptr);

// Throws cache-error on anything that is not a well-formed record.
LambdaResult from_cache_line(const std::string& line);

struct CacheLoad {
    std::vector<LambdaResult> results;  // in file order
    std::vector<std::string> warnings;  // one per skipped line
};

// Missing file loads as empty. Malformed lines and lines written by another
// tool version are skipped with a warning, unless strict, in which case a
// malformed line throws cache-error naming it.
CacheLoad load_cache(const std::filesystem::path& path, bool strict = false);

void store_cache(const std::filesystem::path& path, const std::vector<LambdaResult>& results);

class ResultCache {
public:
    explicit ResultCache(std::filesystem::path path, bool strict = false);

    const std::vector<std::string>& warnings() const noexcept { return warnings_; }
    std::optional<LambdaResult> find(std::uint64_t k) const;
    std::size_t size() const noexcept { return by_k_.size(); }

    // Writes one line and flushes; throws io-error if the file cannot be opened.
    void append(const LambdaResult& result);

private:
    std::filesystem::path path_;
    std::map<std::uint64_t, LambdaResult> by_k_;
    std::vector<std::string> warnings_;
};

}  // namespace dkmax
