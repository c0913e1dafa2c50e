// maximizer.cpp

#include "dkmax/maximizer.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "dkmax/bounds.hpp"
#include "dkmax/cache.hpp"
#include "dkmax/divisor.hpp"
#include "dkmax/error.hpp"

namespace dkmax {

namespace {

constexpr double kFTieTolerance = 1e-14;
constexpr std::uint64_t kMaxTableLimit = 1'000'000'000;

struct Best {
    FactoredNat n;
    double f = 0.0;
    bool tie = false;
};

void consider(std::optional<Best>& best, const FactoredNat& n, LogBinomialTable& logs) {
    if (n.log_value() < std::log(3.0) - 1e-12) return;
    const double f = logs.f_k(n);
    if (!best || f > best->f + kFTieTolerance) {
        best = Best{n, f, false};
    } else if (std::abs(f - best->f) <= kFTieTolerance) {
        best->tie = true;
        if (n < best->n) best = Best{n, f, true};
    }
}

std::optional<Best> best_in_window(const JumpWindow& w, LogBinomialTable& logs) {
    std::optional<Best> best;
    consider(best, w.above, logs);
    FactoredNat current = w.above;
    for (const auto& g : w.groups) {
        const auto variants = shcn_variants(w.k, g, current);
        // variants.front() is current, already seen.
        for (std::size_t i = 1; i < variants.size(); ++i) consider(best, variants[i], logs);
        current = variants.back();
    }
    return best;
}

}  // namespace

double implied_epsilon(std::uint64_t k, double lambda, const FactoredNat& n) {
    const double llN = std::log(n.log_value());
    return lambda * std::log(static_cast<double>(k)) * (llN - 1.0) / (llN * llN);
}

double implied_epsilon(const LambdaResult& result) {
    return implied_epsilon(result.k, result.lambda, result.n_max);
}

std::pair<double, double> eps_range_for_nmax(const JumpWindow& window, const FactoredNat& n) {
    const auto& groups = window.groups;
    if (n == window.above)
        return {groups.empty() ? window.eps_lo : groups.front().eps, window.eps_hi};
    FactoredNat current = window.above;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        const auto variants = shcn_variants(window.k, groups[i], current);
        if (n == variants.back())
            return {i + 1 < groups.size() ? groups[i + 1].eps : window.eps_lo, groups[i].eps};
        for (std::size_t v = 1; v + 1 < variants.size(); ++v)
            if (n == variants[v]) return {groups[i].eps, groups[i].eps};
        current = variants.back();
    }
    fail(ErrorKind::invalid_argument,
         n.to_factor_string() + " is not an SHCN of k=" + std::to_string(window.k) +
             " in the window");
}

LambdaResult find_lambda(std::uint64_t k, const PrimeTable& table, const SearchOptions& options) {
    if (k < 2) fail(ErrorKind::invalid_argument, "k must be >= 2");
    const StoppingData stop = stopping_data(k, table);
    double eps1 = eps0(k);
    LogBinomialTable logs(k);

    for (int step = 0; step <= options.max_shrink_steps; ++step, eps1 *= options.shrink) {
        const double lambda1 = classical_bounds(k, eps1).lambda1;
        JumpWindow window;
        try {
            window = jump_window(k, eps1, stop.eps2, table);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::resource_limit) throw;
            fail(ErrorKind::resource_limit,
                 "prime table exhausted at eps1 = " + std::to_string(eps1) + " for k=" +
                     std::to_string(k) + " (" + e.what() + ")");
        }
        const auto best = best_in_window(window, logs);
        if (!best || best->f < lambda1) continue;

        LambdaResult r;
        r.k = k;
        r.lambda = best->f;
        r.n_max = best->n;
        std::tie(r.eps_lo, r.eps_hi) = eps_range_for_nmax(window, best->n);
        r.eps1_used = eps1;
        r.lambda1 = lambda1;
        r.eps2 = stop.eps2;
        r.maximizer_tie = best->tie;
        r.implied_eps = implied_epsilon(r);
        return r;
    }
    fail(ErrorKind::internal_inconsistency,
         "no certified maximum for k=" + std::to_string(k) + " after " +
             std::to_string(options.max_shrink_steps) + " shrink steps");
}

std::vector<LambdaResult> lambda_range(std::uint64_t k_lo, std::uint64_t k_hi, PrimeTable& table,
                                       ResultCache* cache, const SearchOptions& options) {
    if (k_lo < 2) fail(ErrorKind::invalid_argument, "k must be >= 2");
    if (k_lo > k_hi) fail(ErrorKind::invalid_argument, "k_min must not exceed k_max");

    std::vector<LambdaResult> out;
    out.reserve(k_hi - k_lo + 1);
    for (std::uint64_t k = k_lo; k <= k_hi; ++k) {
        if (cache) {
            if (auto hit = cache->find(k)) {
                out.push_back(*hit);
                continue;
            }
        }
        for (;;) {
            try {
                out.push_back(find_lambda(k, table, options));
                break;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::resource_limit || table.limit() >= kMaxTableLimit) throw;
                table = build_prime_table(std::min(table.limit() * 4, kMaxTableLimit));
            }
        }
        if (cache) cache->append(out.back());
    }
    return out;
}

std::vector<std::uint64_t> monotonicity_violations(const std::vector<LambdaResult>& results) {
    std::vector<std::uint64_t> bad;
    for (std::size_t i = 1; i < results.size(); ++i)
        if (!(results[i].lambda > results[i - 1].lambda)) bad.push_back(results[i].k);
    return bad;
}

}  // namespace dkmax
