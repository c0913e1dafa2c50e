// divisor.hpp
// Generalized divisor functions d_k over factored integers:
//   d_k(p1^m1 ... pr^mr) = prod_i C(m_i + k - 1, k - 1)
// evaluated in the log domain, plus the normalized quantity
//   f_k(n) = ln d_k(n) * ln ln n / (ln k * ln n),   n >= 3
// and an independent oracle that builds d_k by repeated divisor sums.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dkmax/factored.hpp"
#include "dkmax/primes.hpp"

namespace dkmax {

// Trial division by the table's primes. Throws invalid-argument for n = 0
// and resource-limit when a cofactor above limit^2 cannot be classified.
FactoredNat factorize(std::uint64_t n, const PrimeTable& table);

// ln C(m + k - 1, k - 1), summed as ln-numerator minus ln-denominator terms.
double log_binomial_dk(std::uint32_t m, std::uint64_t k);

// Exact C(m + k - 1, k - 1).
BigNat binomial_dk(std::uint32_t m, std::uint64_t k);

class DivisorValue {
public:
    DivisorValue(std::uint64_t k, std::vector<std::uint32_t> exponents, double log);

    double log() const noexcept { return log_; }
    // Materializes the exact product; may have thousands of digits.
    BigNat exact() const;

private:
    std::uint64_t k_;
    std::vector<std::uint32_t> exponents_;
    double log_;
};

DivisorValue d_k(const FactoredNat& n, std::uint64_t k);

// ln d_k(n) without building a DivisorValue.
double log_d_k(const FactoredNat& n, std::uint64_t k);

// Throws domain-error for n in {1, 2}.
double f_k(const FactoredNat& n, std::uint64_t k);

// f_k from precomputed logs; ln_n must exceed ln 2.
double f_from_logs(double log_dk, double ln_n, std::uint64_t k) noexcept;

// Memoized ln C(m+k-1, k-1) for one k. log_d_k and f_k agree bit for bit
// with the free functions.
class LogBinomialTable {
public:
    explicit LogBinomialTable(std::uint64_t k);

    std::uint64_t k() const noexcept { return k_; }
    double operator()(std::uint32_t m);
    double log_d_k(const FactoredNat& n);
    double f_k(const FactoredNat& n);

private:
    std::uint64_t k_;
    std::vector<double> memo_;
};

// Convolution oracle: d_1 = 1, d_j(q) = sum over r | q of d_{j-1}(r).
// Never touches the binomial product formula.
class DivisorOracle {
public:
    static constexpr std::uint64_t kDefaultCap = 1'000'000;
    static constexpr std::uint64_t kMaxK = 12;

    explicit DivisorOracle(std::uint64_t cap = kDefaultCap);

    std::uint64_t cap() const noexcept { return cap_; }
    std::vector<std::uint64_t> divisors(std::uint64_t n) const;
    BigNat d_k(std::uint64_t n, std::uint64_t k) const;

private:
    std::uint64_t cap_;
    std::vector<std::uint32_t> spf_;  // smallest prime factor
};

BigNat d_k_oracle(std::uint64_t n, std::uint64_t k,
                  std::uint64_t cap = DivisorOracle::kDefaultCap);

}  // namespace dkmax
