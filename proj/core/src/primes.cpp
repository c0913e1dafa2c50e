// primes.cpp

#include "dkmax/primes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dkmax/error.hpp"

namespace dkmax {

namespace {

// Odd-only sieve: bit i stands for 2*i + 3.
std::vector<std::uint64_t> sieve_odd(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;
    out.push_back(2);
    if (limit < 3) return out;

    const std::uint64_t bits = (limit - 3) / 2 + 1;
    std::vector<std::uint64_t> words((bits + 63) / 64, ~std::uint64_t{0});
    auto test = [&](std::uint64_t i) { return (words[i >> 6] >> (i & 63)) & 1U; };
    auto clear = [&](std::uint64_t i) { words[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); };

    for (std::uint64_t i = 0; i < bits; ++i) {
        const std::uint64_t p = 2 * i + 3;
        if (p * p > limit) break;
        if (!test(i)) continue;
        for (std::uint64_t j = (p * p - 3) / 2; j < bits; j += p) clear(j);
    }

    out.reserve(static_cast<std::size_t>(1.2551 * limit / std::log(double(limit))) + 2);
    for (std::uint64_t i = 0; i < bits; ++i)
        if (test(i)) out.push_back(2 * i + 3);
    return out;
}

// Checked y^m <= n without overflow.
bool pow_le(std::uint64_t y, unsigned m, std::uint64_t n) {
    unsigned __int128 acc = 1;
    for (unsigned i = 0; i < m; ++i) {
        acc *= y;
        if (acc > n) return false;
    }
    return true;
}

}  // namespace

std::size_t PrimeTable::estimated_bytes(std::uint64_t limit) noexcept {
    const double x = static_cast<double>(std::max<std::uint64_t>(limit, 3));
    const double prime_count = BoundConstants::omega1 * x / std::log(x);
    // Bitset plus one uint64 and one double per prime.
    return static_cast<std::size_t>(x / 16.0 + prime_count * 16.0);
}

PrimeTable::PrimeTable(std::uint64_t limit, std::size_t memory_budget) : limit_(limit) {
    if (limit < 2) fail(ErrorKind::invalid_argument, "prime table limit must be >= 2");
    if (estimated_bytes(limit) > memory_budget)
        fail(ErrorKind::resource_limit,
             "prime table limit " + std::to_string(limit) + " exceeds memory budget");

    primes_ = sieve_odd(limit);
    log_prefix_.resize(primes_.size());

    // Kahan summation.
    double sum = 0.0;
    double comp = 0.0;
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        const double y = std::log(static_cast<double>(primes_[i])) - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        log_prefix_[i] = sum;
    }
}

bool PrimeTable::is_prime(std::uint64_t n) const {
    if (n > limit_) fail(ErrorKind::out_of_range, "is_prime query beyond table limit");
    return std::binary_search(primes_.begin(), primes_.end(), n);
}

void PrimeTable::check_range(double x) const {
    if (std::isnan(x) || x < 0.0)
        fail(ErrorKind::invalid_argument, "prime function argument must be >= 0");
    if (x > static_cast<double>(limit_))
        fail(ErrorKind::out_of_range,
             "argument " + std::to_string(x) + " exceeds prime table limit " +
                 std::to_string(limit_));
}

std::uint64_t PrimeTable::count_le(std::uint64_t n) const noexcept {
    return static_cast<std::uint64_t>(
        std::upper_bound(primes_.begin(), primes_.end(), n) - primes_.begin());
}

std::uint64_t PrimeTable::pi(double x) const {
    check_range(x);
    return count_le(static_cast<std::uint64_t>(std::floor(x)));
}

double PrimeTable::theta(double x) const {
    const std::uint64_t count = pi(x);
    return count == 0 ? 0.0 : log_prefix_[count - 1];
}

double PrimeTable::psi(double x) const {
    check_range(x);
    if (x < 2.0) return 0.0;
    double total = 0.0;
    // m runs while 2^m <= x.
    for (unsigned m = 1;; ++m) {
        const std::uint64_t root = integer_root_floor(x, m);
        if (root < 2) break;
        const std::uint64_t count = count_le(root);
        total += log_prefix_[count - 1];
    }
    return total;
}

std::uint64_t integer_root_floor(double x, unsigned m) {
    if (m == 0) fail(ErrorKind::invalid_argument, "root degree must be >= 1");
    const auto n = static_cast<std::uint64_t>(std::floor(x));
    if (m == 1 || n < 2) return n;
    auto y = static_cast<std::uint64_t>(std::pow(static_cast<double>(n), 1.0 / m));
    while (y > 0 && !pow_le(y, m, n)) --y;
    while (pow_le(y + 1, m, n)) ++y;
    return y;
}

PrimeTable build_prime_table(std::uint64_t limit) { return PrimeTable(limit); }

std::uint64_t prime_pi(const PrimeTable& table, double x) { return table.pi(x); }

double chebyshev_theta(const PrimeTable& table, double x) { return table.theta(x); }

double chebyshev_psi(const PrimeTable& table, double x) { return table.psi(x); }

}  // namespace dkmax
