// divisor.cpp

#include "dkmax/divisor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dkmax/error.hpp"

namespace dkmax {

namespace {

struct Kahan {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v) {
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

void check_k(std::uint64_t k) {
    if (k < 2) fail(ErrorKind::invalid_argument, "k must be >= 2");
}

}  // namespace

FactoredNat factorize(std::uint64_t n, const PrimeTable& table) {
    if (n == 0) fail(ErrorKind::invalid_argument, "cannot factorize 0");
    std::vector<PrimePower> out;
    std::uint64_t rest = n;
    for (std::uint64_t p : table.primes()) {
        if (p > rest / p) break;
        if (rest % p != 0) continue;
        std::uint32_t e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (rest > 1) {
        // rest has no prime factor <= min(sqrt(rest), limit); it is prime when
        // the sieve reached sqrt(rest).
        const std::uint64_t limit = table.limit();
        const bool sieve_covers = limit >= 0xFFFFFFFFull || limit * limit >= rest;
        if (!sieve_covers)
            fail(ErrorKind::resource_limit, "cofactor " + std::to_string(rest) + " of " +
                                                std::to_string(n) +
                                                " exceeds the prime table's reach");
        out.push_back({rest, 1});
    }
    return FactoredNat(std::move(out));
}

double log_binomial_dk(std::uint32_t m, std::uint64_t k) {
    check_k(k);
    // C(m + k - 1, j) with j = min(m, k - 1) = prod_{i=1..j} (m + k - 1 - j + i) / i
    const std::uint64_t top = m + k - 1;
    const std::uint64_t j = std::min<std::uint64_t>(m, k - 1);
    Kahan acc;
    for (std::uint64_t i = 1; i <= j; ++i) {
        acc.add(std::log(static_cast<double>(top - j + i)));
        acc.add(-std::log(static_cast<double>(i)));
    }
    return acc.sum;
}

BigNat binomial_dk(std::uint32_t m, std::uint64_t k) {
    check_k(k);
    const std::uint64_t top = m + k - 1;
    const std::uint64_t j = std::min<std::uint64_t>(m, k - 1);
    BigNat c = 1;
    for (std::uint64_t i = 1; i <= j; ++i) {
        c *= top - j + i;
        c /= i;
    }
    return c;
}

DivisorValue::DivisorValue(std::uint64_t k, std::vector<std::uint32_t> exponents, double log)
    : k_(k), exponents_(std::move(exponents)), log_(log) {}

BigNat DivisorValue::exact() const {
    BigNat v = 1;
    for (std::uint32_t m : exponents_) v *= binomial_dk(m, k_);
    return v;
}

double log_d_k(const FactoredNat& n, std::uint64_t k) {
    check_k(k);
    Kahan acc;
    for (const auto& f : n.factors()) acc.add(log_binomial_dk(f.exponent, k));
    return acc.sum;
}

DivisorValue d_k(const FactoredNat& n, std::uint64_t k) {
    std::vector<std::uint32_t> exps;
    exps.reserve(n.factors().size());
    for (const auto& f : n.factors()) exps.push_back(f.exponent);
    return DivisorValue(k, std::move(exps), log_d_k(n, k));
}

double f_from_logs(double log_dk, double ln_n, std::uint64_t k) noexcept {
    return log_dk * std::log(ln_n) / (std::log(static_cast<double>(k)) * ln_n);
}

double f_k(const FactoredNat& n, std::uint64_t k) {
    check_k(k);
    const auto f = n.factors();
    if (f.empty() || (f.size() == 1 && f[0].prime == 2 && f[0].exponent == 1))
        fail(ErrorKind::domain_error, "f_k is defined only for n >= 3");
    return f_from_logs(log_d_k(n, k), n.log_value(), k);
}

LogBinomialTable::LogBinomialTable(std::uint64_t k) : k_(k) { check_k(k); }

double LogBinomialTable::operator()(std::uint32_t m) {
    while (memo_.size() <= m) memo_.push_back(log_binomial_dk(static_cast<std::uint32_t>(memo_.size()), k_));
    return memo_[m];
}

double LogBinomialTable::log_d_k(const FactoredNat& n) {
    Kahan acc;
    for (const auto& f : n.factors()) acc.add((*this)(f.exponent));
    return acc.sum;
}

double LogBinomialTable::f_k(const FactoredNat& n) {
    const auto f = n.factors();
    if (f.empty() || (f.size() == 1 && f[0].prime == 2 && f[0].exponent == 1))
        fail(ErrorKind::domain_error, "f_k is defined only for n >= 3");
    return f_from_logs(log_d_k(n), n.log_value(), k_);
}

DivisorOracle::DivisorOracle(std::uint64_t cap) : cap_(cap) {
    if (cap < 1) fail(ErrorKind::invalid_argument, "oracle cap must be >= 1");
    if (cap > 100'000'000)
        fail(ErrorKind::resource_limit, "oracle cap above 1e8 is not supported");
    spf_.assign(cap + 1, 0);
    for (std::uint64_t i = 2; i <= cap; ++i) {
        if (spf_[i] != 0) continue;
        for (std::uint64_t j = i; j <= cap; j += i)
            if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
    }
}

std::vector<std::uint64_t> DivisorOracle::divisors(std::uint64_t n) const {
    if (n == 0) fail(ErrorKind::invalid_argument, "divisors of 0");
    if (n > cap_)
        fail(ErrorKind::resource_limit,
             std::to_string(n) + " exceeds oracle cap " + std::to_string(cap_));
    std::vector<std::uint64_t> divs{1};
    while (n > 1) {
        const std::uint64_t p = spf_[n];
        std::size_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        const std::size_t base = divs.size();
        std::uint64_t pk = 1;
        for (std::size_t i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

BigNat DivisorOracle::d_k(std::uint64_t n, std::uint64_t k) const {
    if (k < 1) fail(ErrorKind::invalid_argument, "oracle k must be >= 1");
    if (k > kMaxK) fail(ErrorKind::resource_limit, "oracle supports k <= 12");
    const auto divs = divisors(n);
    std::vector<BigNat> cur(divs.size(), BigNat(1));
    std::vector<BigNat> next(divs.size());
    for (std::uint64_t level = 2; level <= k; ++level) {
        for (std::size_t a = 0; a < divs.size(); ++a) {
            BigNat s = 0;
            for (std::size_t b = 0; b <= a; ++b)
                if (divs[a] % divs[b] == 0) s += cur[b];
            next[a] = std::move(s);
        }
        cur.swap(next);
    }
    return cur.back();
}

BigNat d_k_oracle(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (n > cap)
        fail(ErrorKind::resource_limit,
             std::to_string(n) + " exceeds oracle cap " + std::to_string(cap));
    return DivisorOracle(std::max<std::uint64_t>(n, 1)).d_k(n, k);
}

}  // namespace dkmax
