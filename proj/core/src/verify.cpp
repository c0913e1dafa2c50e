// verify.cpp

#include "dkmax/verify.hpp"

#include <cmath>
#include <sstream>

#include "dkmax/divisor.hpp"
#include "dkmax/error.hpp"

namespace dkmax {

namespace {

constexpr std::uint64_t kSegment = 1U << 18;
constexpr std::uint32_t kMaxExponent = 64;

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Calls visit(n, ln d_k(n), ln n) for n = 1 .. n_limit in ascending order.
template <class Visit>
void scan(std::uint64_t k, std::uint64_t n_limit, const PrimeTable& table, Visit&& visit) {
    const std::uint64_t root = isqrt(n_limit);
    if (root > table.limit())
        fail(ErrorKind::resource_limit,
             "scan to " + std::to_string(n_limit) + " needs primes up to " + std::to_string(root));

    std::vector<double> log_binom(kMaxExponent + 1);
    for (std::uint32_t e = 0; e <= kMaxExponent; ++e) log_binom[e] = log_binomial_dk(e, k);

    const auto primes = table.primes();
    std::vector<std::uint64_t> rest(kSegment);
    std::vector<double> log_d(kSegment);

    for (std::uint64_t lo = 1; lo <= n_limit; lo += kSegment) {
        const std::uint64_t hi = std::min(n_limit, lo + kSegment - 1);
        const std::size_t len = hi - lo + 1;
        for (std::size_t i = 0; i < len; ++i) {
            rest[i] = lo + i;
            log_d[i] = 0.0;
        }
        for (std::uint64_t p : primes) {
            if (p * p > hi) break;
            for (std::uint64_t m = (lo + p - 1) / p * p; m <= hi; m += p) {
                const std::size_t i = m - lo;
                std::uint32_t e = 0;
                do {
                    rest[i] /= p;
                    ++e;
                } while (rest[i] % p == 0);
                log_d[i] += log_binom[e];
            }
        }
        for (std::size_t i = 0; i < len; ++i) {
            if (rest[i] > 1) log_d[i] += log_binom[1];
            const std::uint64_t n = lo + i;
            visit(n, log_d[i], std::log(static_cast<double>(n)));
        }
    }
}

class Tracker {
public:
    Tracker(std::uint64_t k, std::uint64_t n_limit) {
        report_.k = k;
        report_.n_limit = n_limit;
    }

    void see(std::uint64_t n, double log_dk, double ln_n) {
        if (n < 3) return;
        const double f = f_from_logs(log_dk, ln_n, report_.k);
        if (report_.argmax == 0 || f > best_) {
            best_ = f;
            report_.argmax = n;
        }
    }

    void violate(std::uint64_t n, std::string detail) {
        if (report_.violations.size() < kMaxViolations)
            report_.violations.push_back({n, std::move(detail)});
        else
            report_.truncated = true;
    }

    ScanReport finish(const PrimeTable& table) {
        if (report_.argmax != 0) report_.max_f = f_k(factorize(report_.argmax, table), report_.k);
        return std::move(report_);
    }

private:
    ScanReport report_;
    double best_ = 0.0;
};

void check_k(std::uint64_t k) {
    if (k < 2) fail(ErrorKind::invalid_argument, "k must be >= 2");
}

}  // namespace

ScanReport brute_force_max_f(std::uint64_t k, std::uint64_t n_limit, const PrimeTable& table) {
    check_k(k);
    if (n_limit < 3) fail(ErrorKind::invalid_argument, "n_limit must be >= 3");
    if (n_limit > kMaxBruteForceLimit)
        fail(ErrorKind::resource_limit, "brute-force scan limited to 1e8");
    Tracker t(k, n_limit);
    scan(k, n_limit, table, [&](std::uint64_t n, double ld, double ln) { t.see(n, ld, ln); });
    return t.finish(table);
}

ScanReport verify_superiority(std::uint64_t k, double eps, const FactoredNat& big_n,
                              std::uint64_t n_limit, const PrimeTable& table) {
    check_k(k);
    if (n_limit > kMaxSuperiorityLimit)
        fail(ErrorKind::resource_limit, "superiority scan limited to 1e7");
    const double target = log_d_k(big_n, k) - eps * big_n.log_value();
    const double slack = 1e-9 * std::max(1.0, std::abs(target));
    Tracker t(k, n_limit);
    scan(k, n_limit, table, [&](std::uint64_t n, double ld, double ln) {
        t.see(n, ld, ln);
        const double v = ld - eps * ln;
        if (v > target + slack) {
            std::ostringstream os;
            os.precision(12);
            os << "ln d_k(n) - eps ln n = " << v << " exceeds " << target << " at N";
            t.violate(n, os.str());
        }
    });
    return t.finish(table);
}

ScanReport verify_k_highly_composite(std::uint64_t k, std::uint64_t big_n, const PrimeTable& table) {
    check_k(k);
    if (big_n < 1) fail(ErrorKind::invalid_argument, "N must be >= 1");
    if (big_n > kMaxHighlyCompositeN)
        fail(ErrorKind::resource_limit, "k-highly composite check limited to N <= 1e7");
    const FactoredNat fn = factorize(big_n, table);
    const double target = log_d_k(fn, k);
    const double slack = 1e-9 * std::max(1.0, target);
    BigNat exact_target;
    bool have_exact = false;

    Tracker t(k, big_n);
    scan(k, big_n, table, [&](std::uint64_t n, double ld, double ln) {
        t.see(n, ld, ln);
        if (n == big_n || ld < target - slack) return;
        if (!have_exact) {
            exact_target = d_k(fn, k).exact();
            have_exact = true;
        }
        const BigNat dn = d_k(factorize(n, table), k).exact();
        if (dn >= exact_target)
            t.violate(n, "d_k(n) = " + dn.str() + " >= d_k(N) = " + exact_target.str());
    });
    return t.finish(table);
}

}  // namespace dkmax
