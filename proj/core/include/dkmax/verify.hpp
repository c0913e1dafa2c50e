// verify.hpp
// Exhaustive scans over 1..n_limit used as independent checks of the SHCN
// machinery. Every n is factored by a segmented sieve and d_k is evaluated in
// the log domain.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dkmax/factored.hpp"
#include "dkmax/primes.hpp"

namespace dkmax {

struct Violation {
    std::uint64_t n = 0;
    std::string detail;
};

struct ScanReport {
    std::uint64_t k = 0;
    std::uint64_t n_limit = 0;
    std::uint64_t argmax = 0;  // argmax of f_k over 3..n_limit, smallest on ties
    double max_f = 0.0;
    std::vector<Violation> violations;  // at most kMaxViolations
    bool truncated = false;

    bool ok() const noexcept { return violations.empty(); }
};

inline constexpr std::size_t kMaxViolations = 32;
inline constexpr std::uint64_t kMaxBruteForceLimit = 100'000'000;
inline constexpr std::uint64_t kMaxSuperiorityLimit = 10'000'000;
inline constexpr std::uint64_t kMaxHighlyCompositeN = 10'000'000;

ScanReport brute_force_max_f(std::uint64_t k, std::uint64_t n_limit, const PrimeTable& table);

// ln d_k(n) - eps ln n <= ln d_k(N) - eps ln N for all 1 <= n <= n_limit,
// up to 1e-9 relative.
ScanReport verify_superiority(std::uint64_t k, double eps, const FactoredNat& big_n,
                              std::uint64_t n_limit, const PrimeTable& table);

// d_k(n) < d_k(N) for all 1 <= n < N, decided exactly on near ties.
ScanReport verify_k_highly_composite(std::uint64_t k, std::uint64_t big_n, const PrimeTable& table);

}  // namespace dkmax
