// bounds.cpp

#include "dkmax/bounds.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dkmax/divisor.hpp"
#include "dkmax/error.hpp"
#include "dkmax/shcn.hpp"

namespace dkmax {

namespace {

void check_k(std::uint64_t k) {
    if (k < 2) fail(ErrorKind::invalid_argument, "k must be >= 2");
}

double log_ratio(std::uint64_t k) {
    const auto kd = static_cast<double>(k);
    return std::log(2.0 * kd / (kd + 1.0));
}

}  // namespace

double eps0(std::uint64_t k) {
    check_k(k);
    return std::log((static_cast<double>(k) + 1.0) / 2.0) / std::log(8.0);
}

double c0(std::uint64_t k) {
    check_k(k);
    return static_cast<double>(k - 1) / (std::numbers::e * log_ratio(k)) + BoundConstants{}.omega2;
}

double c1(std::uint64_t k) {
    check_k(k);
    return static_cast<double>(k - 1) / (2.0 * std::numbers::e * log_ratio(k)) +
           BoundConstants{}.omega2;
}

double lambda_bound(std::uint64_t k, double eps) {
    check_k(k);
    const double lk = std::log(static_cast<double>(k));
    const double lc = std::log(c1(k));
    const double num = lk + eps * lc;
    return num * num / (lk * (lk + (lc - 1.0) * eps));
}

BoundSet classical_bounds(std::uint64_t k, double eps1) {
    check_k(k);
    BoundSet b;
    b.k = k;
    b.eps0 = eps0(k);
    if (!(eps1 > 0.0) || eps1 > b.eps0)
        fail(ErrorKind::invalid_argument,
             "eps1 = " + std::to_string(eps1) + " must lie in (0, eps0(k) = " +
                 std::to_string(b.eps0) + "]");
    b.c0 = c0(k);
    b.c1 = c1(k);
    b.eps1 = eps1;
    b.lambda0 = lambda_bound(k, b.eps0);
    b.lambda1 = lambda_bound(k, eps1);
    return b;
}

double stopping_eps(std::uint64_t k) {
    check_k(k);
    if (k <= 25) return std::log(static_cast<double>(k)) / 2.0;
    return std::log2((static_cast<double>(k) + 10.0) / 11.0);
}

StoppingData stopping_data(std::uint64_t k, const PrimeTable& table) {
    StoppingData s;
    s.k = k;
    s.eps2 = stopping_eps(k);
    s.n2 = n_tilde(k, s.eps2, table);
    const double e2 = std::exp(2.0);
    s.u = log_d_k(s.n2, k) - s.eps2 * s.n2.log_value() - e2 * s.eps2;
    if (s.u > 0.0)
        fail(ErrorKind::internal_inconsistency,
             "u(" + std::to_string(k) + ") = " + std::to_string(s.u) + " > 0");
    if (!(s.n2.log_value() > e2))
        fail(ErrorKind::internal_inconsistency,
             "N2(" + std::to_string(k) + ") = " + s.n2.to_factor_string() + " <= e^(e^2)");
    return s;
}

double f_b(double b, double t) {
    return std::exp(t) / t * (1.0 - (b - 1.0) * t / (b * b));
}

}  // namespace dkmax
