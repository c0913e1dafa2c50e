// bounds.hpp
// Explicit constants that bracket the eps of the maximizer: eps0, c0, c1,
// lambda0/lambda1 from below and eps2, N2, u from above.

#pragma once

#include <cstdint>

#include "dkmax/factored.hpp"
#include "dkmax/primes.hpp"

namespace dkmax {

struct BoundSet {
    std::uint64_t k = 0;
    double eps0 = 0.0;
    double c0 = 0.0;
    double c1 = 0.0;
    double eps1 = 0.0;
    double lambda0 = 0.0;
    double lambda1 = 0.0;
};

struct StoppingData {
    std::uint64_t k = 0;
    double eps2 = 0.0;
    FactoredNat n2;
    double u = 0.0;
};

// ln((k+1)/2) / ln 8
double eps0(std::uint64_t k);
// (k-1)/(e ln(2k/(k+1))) + omega2
double c0(std::uint64_t k);
// (k-1)/(2e ln(2k/(k+1))) + omega2
double c1(std::uint64_t k);

// (ln k + eps ln c1)^2 / (ln k (ln k + (ln c1 - 1) eps)); valid for eps <= eps0.
double lambda_bound(std::uint64_t k, double eps);

// Requires 0 < eps1 <= eps0(k).
BoundSet classical_bounds(std::uint64_t k, double eps1);

// (ln k)/2 for k <= 25, else log2((k+10)/11).
double stopping_eps(std::uint64_t k);

// Throws internal-inconsistency if u > 0 or N2 <= e^(e^2).
StoppingData stopping_data(std::uint64_t k, const PrimeTable& table);

// e^t/t * (1 - (b-1)t/b^2)
double f_b(double b, double t);

}  // namespace dkmax
