// shcn.hpp
// Superior k-highly composite numbers.
//
// For fixed k the optimal exponent of p in the largest SHCN for eps is
//   m~(p, k, eps) = floor((k - 1) / (p^eps - 1)),
// which steps from m - 1 to m at the jump
//   eps[k, p; m] = ln(1 + (k - 1)/m) / ln p.
// Distinct primes share a jump only at a positive integer eps = t with
// p^t * m = m + k - 1; such ties are grouped and certified exactly.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dkmax/factored.hpp"
#include "dkmax/primes.hpp"

namespace dkmax {

struct JumpPoint {
    std::uint64_t k = 0;
    std::uint64_t p = 0;
    std::uint64_t m = 0;
    double value = 0.0;
};

struct TieGroup {
    double eps = 0.0;
    std::vector<JumpPoint> members;  // ascending prime
    // Certificate t with p^t * m == m + k - 1 for every member.
    std::optional<std::uint64_t> integer_eps;
};

struct ShcnRecord {
    FactoredNat n;
    double eps_hi = 0.0;
    double eps_lo = 0.0;
    std::optional<double> f_value;  // empty when n < 3
};

// Relative width used to decide that two floating jump values, or a value
// and a window boundary, may coincide.
inline constexpr double kTieTolerance = 1e-11;

JumpPoint jump_value(std::uint64_t k, std::uint64_t p, std::uint64_t m);

// Exact jump test: p^t * m == m + k - 1 in integers.
bool certifies_integer_jump(std::uint64_t k, std::uint64_t p, std::uint64_t m, std::uint64_t t);

// floor((k-1)/(p^eps - 1)). At an exact jump the larger exponent is taken.
std::uint64_t exponent_cap(std::uint64_t p, std::uint64_t k, double eps);

// Number of m >= 1 with eps[k, p; m] > threshold.
std::uint64_t count_jumps_above(std::uint64_t k, std::uint64_t p, double threshold);

// Largest SHCN associated to eps. Throws resource-limit when k^(1/eps)
// exceeds the table.
FactoredNat n_tilde(std::uint64_t k, double eps, const PrimeTable& table);

// Every jump in [eps_lo, eps_hi], merged into tie groups, descending eps.
std::vector<TieGroup> enumerate_jump_groups(std::uint64_t k, double eps_lo, double eps_hi,
                                            const PrimeTable& table);

// The 2^r SHCNs at a group: base times any subset of the member primes.
// base must hold exponent m - 1 for every member. Ascending order.
std::vector<FactoredNat> shcn_variants(std::uint64_t k, const TieGroup& group,
                                       const FactoredNat& base);

struct AnalyticSums {
    double log_n = 0.0;   // sum_m theta(x_m)
    double log_dk = 0.0;  // eps * sum_m pi(x_m) ln x_m
};

// x_m = (1 + (k-1)/m)^(1/eps), m = 1 .. m~(2, k, eps).
AnalyticSums analytic_identities(std::uint64_t k, double eps, const PrimeTable& table);

// ln E(k, eps) = ln d_k(N~) - eps ln N~, via the analytic sums.
double superiority_excess(std::uint64_t k, double eps, const PrimeTable& table);

// The jump groups inside [eps_lo, eps_hi] together with the largest SHCN
// for eps just above the top group. Walking the groups downwards and
// multiplying in each group's primes visits every SHCN of the window.
struct JumpWindow {
    std::uint64_t k = 0;
    double eps_lo = 0.0;
    double eps_hi = 0.0;
    FactoredNat above;
    std::vector<TieGroup> groups;
};

JumpWindow jump_window(std::uint64_t k, double eps_lo, double eps_hi, const PrimeTable& table);

// One record per interval between consecutive groups, clamped to the window:
// the interval's SHCN with its f_k value.
std::vector<ShcnRecord> shcn_chain(const JumpWindow& window);

struct JumpRow {
    TieGroup group;
    FactoredNat n_tilde;  // largest SHCN at group.eps
};

// The first `count` distinct jump values of k, from log2(k) downwards.
std::vector<JumpRow> first_jumps(std::uint64_t k, std::size_t count, const PrimeTable& table);

}  // namespace dkmax
