// maximizer.hpp
// lambda(k) = max f_k(n) and a maximizer N_max(k).
//
// The eps of the maximizer lies in [eps1, eps2]. Starting from eps1 = eps0(k),
// every SHCN of the bracket is evaluated; the best value certifies itself once
// it reaches lambda1(k, eps1), otherwise eps1 shrinks geometrically.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dkmax/factored.hpp"
#include "dkmax/primes.hpp"
#include "dkmax/shcn.hpp"

namespace dkmax {

class ResultCache;

struct LambdaResult {
    std::uint64_t k = 0;
    double lambda = 0.0;
    FactoredNat n_max;
    double eps_lo = 0.0;
    double eps_hi = 0.0;
    double eps1_used = 0.0;
    double lambda1 = 0.0;
    double implied_eps = 0.0;
    double eps2 = 0.0;
    // Another SHCN reached the same f_k within 1e-14; n_max is the smaller one.
    bool maximizer_tie = false;

    friend bool operator==(const LambdaResult&, const LambdaResult&) = default;
};

struct SearchOptions {
    double shrink = 0.99;
    int max_shrink_steps = 60;
};

LambdaResult find_lambda(std::uint64_t k, const PrimeTable& table, const SearchOptions& options = {});

// lambda ln k (ln ln N - 1) / (ln ln N)^2
double implied_epsilon(const LambdaResult& result);
double implied_epsilon(std::uint64_t k, double lambda, const FactoredNat& n);

// The eps interval of the window on which n is an SHCN, clamped to the window.
std::pair<double, double> eps_range_for_nmax(const JumpWindow& window, const FactoredNat& n);

// One result per k in [k_lo, k_hi]. Cached results are reused, new ones are
// appended to the cache. The table is rebuilt larger when a k needs it.
std::vector<LambdaResult> lambda_range(std::uint64_t k_lo, std::uint64_t k_hi, PrimeTable& table,
                                       ResultCache* cache = nullptr,
                                       const SearchOptions& options = {});

// Values of k whose lambda does not exceed that of the preceding entry.
std::vector<std::uint64_t> monotonicity_violations(const std::vector<LambdaResult>& results);

}  // namespace dkmax
