// factored.cpp

#include "dkmax/factored.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dkmax/error.hpp"

namespace dkmax {

FactoredNat::FactoredNat(std::vector<PrimePower> factors) : factors_(std::move(factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].prime < 2 || factors_[i].exponent == 0)
            fail(ErrorKind::invalid_argument, "factor must have prime >= 2 and exponent >= 1");
        if (i > 0 && factors_[i - 1].prime >= factors_[i].prime)
            fail(ErrorKind::invalid_argument, "factor primes must be strictly ascending");
    }
    recompute_log();
}

void FactoredNat::recompute_log() {
    double sum = 0.0;
    double comp = 0.0;
    for (const auto& f : factors_) {
        const double y = f.exponent * std::log(static_cast<double>(f.prime)) - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    log_value_ = sum;
}

std::uint32_t FactoredNat::exponent_of(std::uint64_t prime) const noexcept {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), prime,
                               [](const PrimePower& f, std::uint64_t p) { return f.prime < p; });
    return (it != factors_.end() && it->prime == prime) ? it->exponent : 0;
}

FactoredNat FactoredNat::times_prime(std::uint64_t prime) const {
    FactoredNat out = *this;
    auto it = std::lower_bound(out.factors_.begin(), out.factors_.end(), prime,
                               [](const PrimePower& f, std::uint64_t p) { return f.prime < p; });
    if (it != out.factors_.end() && it->prime == prime)
        ++it->exponent;
    else
        out.factors_.insert(it, PrimePower{prime, 1});
    out.recompute_log();
    return out;
}

FactoredNat FactoredNat::divided_by_prime(std::uint64_t prime) const {
    FactoredNat out = *this;
    auto it = std::lower_bound(out.factors_.begin(), out.factors_.end(), prime,
                               [](const PrimePower& f, std::uint64_t p) { return f.prime < p; });
    if (it == out.factors_.end() || it->prime != prime)
        fail(ErrorKind::invalid_argument,
             "prime " + std::to_string(prime) + " does not divide " + to_factor_string());
    if (--it->exponent == 0) out.factors_.erase(it);
    out.recompute_log();
    return out;
}

BigNat FactoredNat::value() const {
    BigNat v = 1;
    for (const auto& f : factors_) v *= boost::multiprecision::pow(BigNat(f.prime), f.exponent);
    return v;
}

std::optional<std::uint64_t> FactoredNat::to_u64() const noexcept {
    unsigned __int128 v = 1;
    for (const auto& f : factors_) {
        for (std::uint32_t i = 0; i < f.exponent; ++i) {
            v *= f.prime;
            if (v > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
        }
    }
    return static_cast<std::uint64_t>(v);
}

std::string FactoredNat::to_decimal() const { return value().str(); }

std::string FactoredNat::to_factor_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& f : factors_) {
        if (!out.empty()) out += '*';
        out += std::to_string(f.prime);
        if (f.exponent > 1) out += '^' + std::to_string(f.exponent);
    }
    return out;
}

bool operator<(const FactoredNat& a, const FactoredNat& b) {
    const double gap = a.log_value_ - b.log_value_;
    if (std::abs(gap) > 1e-9 * std::max(1.0, std::abs(a.log_value_))) return gap < 0;
    return a.value() < b.value();
}

}  // namespace dkmax
