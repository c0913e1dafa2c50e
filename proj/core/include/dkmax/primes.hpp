// primes.hpp
// Sieved prime table with prefix sums of ln p, and the prime-counting
// functions pi(x), theta(x), psi(x) evaluated against it.
//
// All queries take a real x and compare it against exact integer primes
// with floor semantics: p counts iff p <= x.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dkmax {

// Explicit constants for the prime-counting bounds
//   pi(x)    <= omega1 * x / ln x   (x > 1)
//   pi(x)    <= x / 2               (x >= 8)
//   theta(x) <= omega2 * x          (x >= 0)
struct BoundConstants {
    static constexpr double omega1 = 1.2551;
    static constexpr double omega2 = 1.00001;
};

class PrimeTable {
public:
    static constexpr std::uint64_t kDefaultLimit = 2'000'000;
    static constexpr std::size_t kDefaultMemoryBudget = std::size_t{1} << 30;

    // Sieves all primes <= limit. Throws invalid-argument for limit < 2 and
    // resource-limit when the estimated footprint exceeds memory_budget.
    explicit PrimeTable(std::uint64_t limit = kDefaultLimit,
                        std::size_t memory_budget = kDefaultMemoryBudget);

    std::uint64_t limit() const noexcept { return limit_; }
    std::span<const std::uint64_t> primes() const noexcept { return primes_; }
    // log_prefix()[i] = ln(primes[0]) + ... + ln(primes[i])
    std::span<const double> log_prefix() const noexcept { return log_prefix_; }

    bool is_prime(std::uint64_t n) const;

    std::uint64_t pi(double x) const;
    double theta(double x) const;
    double psi(double x) const;

    // Rough byte count a table of this limit needs; used for the budget check.
    static std::size_t estimated_bytes(std::uint64_t limit) noexcept;

private:
    void check_range(double x) const;
    std::uint64_t count_le(std::uint64_t n) const noexcept;

    std::uint64_t limit_;
    std::vector<std::uint64_t> primes_;
    std::vector<double> log_prefix_;
};

PrimeTable build_prime_table(std::uint64_t limit);
std::uint64_t prime_pi(const PrimeTable& table, double x);
double chebyshev_theta(const PrimeTable& table, double x);
double chebyshev_psi(const PrimeTable& table, double x);

// Largest integer y with y^m <= floor(x); exact, no floating rounding at the
// boundary. Requires x >= 0 and m >= 1.
std::uint64_t integer_root_floor(double x, unsigned m);

}  // namespace dkmax
