// factored.hpp
// FactoredNat: a natural number held as its prime factorization plus the
// cached natural log. This is the only representation used for the large
// numbers the search produces (N_max(2000) has ~40 decimal digits).

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dkmax {

using BigNat = boost::multiprecision::cpp_int;

struct PrimePower {
    std::uint64_t prime = 0;
    std::uint32_t exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

class FactoredNat {
public:
    // The number 1.
    FactoredNat() = default;

    // Factors must have strictly ascending primes and exponents >= 1.
    // Primality of the bases is the caller's responsibility.
    explicit FactoredNat(std::vector<PrimePower> factors);

    std::span<const PrimePower> factors() const noexcept { return factors_; }
    double log_value() const noexcept { return log_value_; }
    bool is_one() const noexcept { return factors_.empty(); }

    std::uint32_t exponent_of(std::uint64_t prime) const noexcept;

    // Returns a copy with the exponent of `prime` raised (or lowered) by one.
    FactoredNat times_prime(std::uint64_t prime) const;
    FactoredNat divided_by_prime(std::uint64_t prime) const;

    BigNat value() const;
    // Exact value when it fits in 64 bits.
    std::optional<std::uint64_t> to_u64() const noexcept;

    std::string to_decimal() const;
    // "2^5*3^3*5^2*7"; "1" for the empty product.
    std::string to_factor_string() const;

    friend bool operator==(const FactoredNat& a, const FactoredNat& b) noexcept {
        return a.factors_ == b.factors_;
    }

    // Orders by value (exact; log values only break the common case).
    friend bool operator<(const FactoredNat& a, const FactoredNat& b);

private:
    void recompute_log();

    std::vector<PrimePower> factors_;
    double log_value_ = 0.0;
};

}  // namespace dkmax
