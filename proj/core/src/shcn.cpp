// shcn.cpp

#include "dkmax/shcn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "dkmax/divisor.hpp"
#include "dkmax/error.hpp"

namespace dkmax {

namespace {

using Decimal50 = boost::multiprecision::cpp_dec_float_50;

double tolerance(double eps) { return kTieTolerance * std::max(1.0, std::abs(eps)); }

void check_k(std::uint64_t k) {
    if (k < 2) fail(ErrorKind::invalid_argument, "k must be >= 2");
}

std::string triple(const JumpPoint& j) {
    return "[k=" + std::to_string(j.k) + ",p=" + std::to_string(j.p) +
           ",m=" + std::to_string(j.m) + "]";
}

Decimal50 jump_value_50(const JumpPoint& j) {
    using boost::multiprecision::log;
    return (log(Decimal50(j.m + j.k - 1)) - log(Decimal50(j.m))) / log(Decimal50(j.p));
}

// Largest prime considered for eps: k^(1/eps), padded so a prime sitting
// exactly on the bound is not lost to rounding.
std::uint64_t prime_bound(std::uint64_t k, double eps, const PrimeTable& table) {
    if (!(eps > 0.0)) fail(ErrorKind::invalid_argument, "eps must be > 0");
    const double bound = std::exp(std::log(static_cast<double>(k)) / eps) * (1.0 + 1e-9);
    if (bound > static_cast<double>(table.limit()))
        fail(ErrorKind::resource_limit,
             "k^(1/eps) = " + std::to_string(bound) + " exceeds prime table limit " +
                 std::to_string(table.limit()) + " (k=" + std::to_string(k) +
                 ", eps=" + std::to_string(eps) + ")");
    return static_cast<std::uint64_t>(bound);
}

// Snaps a real x onto an integer it agrees with to within the tie tolerance,
// so that x_m landing exactly on a prime counts that prime.
double snap(double x) {
    const double r = std::nearbyint(x);
    return std::abs(x - r) <= kTieTolerance * std::max(1.0, x) ? r : x;
}

std::vector<TieGroup> group_jumps(std::vector<JumpPoint> points) {
    std::sort(points.begin(), points.end(), [](const JumpPoint& a, const JumpPoint& b) {
        if (a.value != b.value) return a.value > b.value;
        return a.p < b.p;
    });

    std::vector<TieGroup> groups;
    std::size_t i = 0;
    while (i < points.size()) {
        std::size_t j = i + 1;
        while (j < points.size() && points[j - 1].value - points[j].value <= tolerance(points[j].value))
            ++j;

        if (j - i == 1) {
            TieGroup g{points[i].value, {points[i]}, std::nullopt};
            const auto t = static_cast<std::uint64_t>(std::llround(points[i].value));
            if (t >= 1 && certifies_integer_jump(points[i].k, points[i].p, points[i].m, t)) {
                g.integer_eps = t;
                g.eps = static_cast<double>(t);
            }
            groups.push_back(std::move(g));
            i = j;
            continue;
        }

        // Near-coincident cluster: certified members share the exact value t;
        // everything else is ordered in 50-digit arithmetic.
        struct Entry {
            JumpPoint point;
            Decimal50 exact;
            std::optional<std::uint64_t> t;
        };
        std::vector<Entry> cluster;
        for (std::size_t c = i; c < j; ++c) {
            Entry e{points[c], jump_value_50(points[c]), std::nullopt};
            const auto t = static_cast<std::uint64_t>(std::llround(points[c].value));
            if (t >= 1 && certifies_integer_jump(points[c].k, points[c].p, points[c].m, t)) {
                e.t = t;
                e.exact = Decimal50(t);
            }
            cluster.push_back(std::move(e));
        }
        std::sort(cluster.begin(), cluster.end(), [](const Entry& a, const Entry& b) {
            if (a.exact != b.exact) return a.exact > b.exact;
            return a.point.p < b.point.p;
        });

        const Decimal50 separation("1e-40");
        for (std::size_t c = 0; c < cluster.size(); ++c) {
            const Entry& e = cluster[c];
            if (c > 0) {
                const Entry& prev = cluster[c - 1];
                if (prev.t && e.t && *prev.t == *e.t) {
                    groups.back().members.push_back(e.point);
                    continue;
                }
                if (abs(prev.exact - e.exact) <= separation)
                    fail(ErrorKind::internal_inconsistency,
                         "cannot separate jump values " + triple(prev.point) + " and " +
                             triple(e.point) + " at 50 digits without an integer certificate");
            }
            TieGroup g{e.point.value, {e.point}, e.t};
            if (e.t) g.eps = static_cast<double>(*e.t);
            groups.push_back(std::move(g));
        }
        i = j;
    }

    for (auto& g : groups)
        std::sort(g.members.begin(), g.members.end(),
                  [](const JumpPoint& a, const JumpPoint& b) { return a.p < b.p; });
    return groups;
}

}  // namespace

JumpPoint jump_value(std::uint64_t k, std::uint64_t p, std::uint64_t m) {
    check_k(k);
    if (p < 2) fail(ErrorKind::invalid_argument, "p must be prime");
    if (m < 1) fail(ErrorKind::invalid_argument, "m must be >= 1");
    const double value = std::log1p(static_cast<double>(k - 1) / static_cast<double>(m)) /
                         std::log(static_cast<double>(p));
    return {k, p, m, value};
}

bool certifies_integer_jump(std::uint64_t k, std::uint64_t p, std::uint64_t m, std::uint64_t t) {
    if (t == 0) return false;
    const unsigned __int128 target = static_cast<unsigned __int128>(m) + k - 1;
    unsigned __int128 lhs = m;
    for (std::uint64_t i = 0; i < t; ++i) {
        lhs *= p;
        if (lhs > target) return false;
    }
    return lhs == target;
}

std::uint64_t exponent_cap(std::uint64_t p, std::uint64_t k, double eps) {
    check_k(k);
    if (!(eps > 0.0)) fail(ErrorKind::invalid_argument, "eps must be > 0");
    const double denom = std::expm1(eps * std::log(static_cast<double>(p)));
    const double x = static_cast<double>(k - 1) / denom;
    if (!std::isfinite(x)) fail(ErrorKind::resource_limit, "exponent cap overflow");
    const double r = std::nearbyint(x);
    if (r >= 1.0 && std::abs(x - r) <= kTieTolerance * std::max(1.0, x))
        return static_cast<std::uint64_t>(r);
    return x < 1.0 ? 0 : static_cast<std::uint64_t>(std::floor(x));
}

std::uint64_t count_jumps_above(std::uint64_t k, std::uint64_t p, double threshold) {
    check_k(k);
    if (!(threshold > 0.0)) fail(ErrorKind::invalid_argument, "threshold must be > 0");
    const double est = static_cast<double>(k - 1) /
                       std::expm1(threshold * std::log(static_cast<double>(p)));
    auto m = static_cast<std::uint64_t>(std::max(0.0, std::floor(est)));
    while (m >= 1 && jump_value(k, p, m).value <= threshold) --m;
    while (jump_value(k, p, m + 1).value > threshold) ++m;
    return m;
}

FactoredNat n_tilde(std::uint64_t k, double eps, const PrimeTable& table) {
    check_k(k);
    const std::uint64_t bound = prime_bound(k, eps, table);
    std::vector<PrimePower> factors;
    for (std::uint64_t p : table.primes()) {
        if (p > bound) break;
        const std::uint64_t e = exponent_cap(p, k, eps);
        if (e == 0) break;  // exponents are nonincreasing in p
        factors.push_back({p, static_cast<std::uint32_t>(e)});
    }
    return FactoredNat(std::move(factors));
}

std::vector<TieGroup> enumerate_jump_groups(std::uint64_t k, double eps_lo, double eps_hi,
                                            const PrimeTable& table) {
    check_k(k);
    if (!(eps_lo > 0.0)) fail(ErrorKind::invalid_argument, "eps_lo must be > 0");
    if (!(eps_lo < eps_hi)) return {};

    const std::uint64_t bound = prime_bound(k, eps_lo, table);
    const double hi = eps_hi + tolerance(eps_hi);
    const double lo = eps_lo - tolerance(eps_lo);

    std::vector<JumpPoint> points;
    for (std::uint64_t p : table.primes()) {
        if (p > bound) break;
        for (std::uint64_t m = count_jumps_above(k, p, hi) + 1;; ++m) {
            const JumpPoint j = jump_value(k, p, m);
            if (j.value < lo) break;
            points.push_back(j);
        }
    }
    return group_jumps(std::move(points));
}

std::vector<FactoredNat> shcn_variants(std::uint64_t k, const TieGroup& group,
                                       const FactoredNat& base) {
    check_k(k);
    const std::size_t r = group.members.size();
    if (r == 0) fail(ErrorKind::invalid_argument, "empty tie group");
    if (r > 20)
        fail(ErrorKind::resource_limit,
             "tie group at eps=" + std::to_string(group.eps) + " has " + std::to_string(r) +
                 " primes; 2^r variants exceed the supported 2^20");
    for (const auto& j : group.members)
        if (base.exponent_of(j.p) != j.m - 1)
            fail(ErrorKind::invalid_argument,
                 "base exponent of " + std::to_string(j.p) + " is " +
                     std::to_string(base.exponent_of(j.p)) + ", expected " +
                     std::to_string(j.m - 1));

    std::vector<FactoredNat> out;
    out.reserve(std::size_t{1} << r);
    for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
        FactoredNat v = base;
        for (std::size_t i = 0; i < r; ++i)
            if (mask >> i & 1U) v = v.times_prime(group.members[i].p);
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

AnalyticSums analytic_identities(std::uint64_t k, double eps, const PrimeTable& table) {
    check_k(k);
    prime_bound(k, eps, table);
    const std::uint64_t terms = exponent_cap(2, k, eps);
    double sum_theta = 0.0;
    double sum_pi_log = 0.0;
    for (std::uint64_t m = 1; m <= terms; ++m) {
        const double ln_ratio = std::log(static_cast<double>(m + k - 1)) -
                                std::log(static_cast<double>(m));
        const double x = snap(std::exp(ln_ratio / eps));
        sum_theta += table.theta(x);
        sum_pi_log += static_cast<double>(table.pi(x)) * std::log(x);
    }
    return {sum_theta, eps * sum_pi_log};
}

double superiority_excess(std::uint64_t k, double eps, const PrimeTable& table) {
    const AnalyticSums s = analytic_identities(k, eps, table);
    return s.log_dk - eps * s.log_n;
}

JumpWindow jump_window(std::uint64_t k, double eps_lo, double eps_hi, const PrimeTable& table) {
    check_k(k);
    if (!(eps_lo > 0.0) || !(eps_lo <= eps_hi))
        fail(ErrorKind::invalid_argument, "jump window needs 0 < eps_lo <= eps_hi");
    JumpWindow w;
    w.k = k;
    w.eps_lo = eps_lo;
    w.eps_hi = eps_hi;
    w.groups = enumerate_jump_groups(k, eps_lo, eps_hi, table);

    const std::uint64_t bound = prime_bound(k, eps_lo, table);
    const double hi = eps_hi + tolerance(eps_hi);
    std::vector<PrimePower> above;
    for (std::uint64_t p : table.primes()) {
        if (p > bound) break;
        const std::uint64_t e = count_jumps_above(k, p, hi);
        if (e == 0) break;
        above.push_back({p, static_cast<std::uint32_t>(e)});
    }
    w.above = FactoredNat(std::move(above));
    return w;
}

std::vector<ShcnRecord> shcn_chain(const JumpWindow& window) {
    auto record = [&](const FactoredNat& n, double hi, double lo) {
        ShcnRecord r{n, hi, lo, std::nullopt};
        if (n.log_value() > std::log(2.5)) r.f_value = f_k(n, window.k);
        return r;
    };

    std::vector<ShcnRecord> out;
    FactoredNat current = window.above;
    double upper = window.eps_hi;
    for (const auto& g : window.groups) {
        out.push_back(record(current, upper, g.eps));
        for (const auto& j : g.members) current = current.times_prime(j.p);
        upper = g.eps;
    }
    out.push_back(record(current, upper, window.eps_lo));
    // A group sitting on eps_hi leaves a degenerate first interval.
    if (out.size() > 1 && out.front().eps_hi - out.front().eps_lo <= tolerance(out.front().eps_hi))
        out.erase(out.begin());
    if (out.size() > 1 && out.back().eps_hi - out.back().eps_lo <= tolerance(out.back().eps_lo))
        out.pop_back();
    return out;
}

std::vector<JumpRow> first_jumps(std::uint64_t k, std::size_t count, const PrimeTable& table) {
    check_k(k);
    if (count == 0) return {};
    const double top = std::log2(static_cast<double>(k));
    double lo = top / 2.0;
    for (;;) {
        const JumpWindow w = jump_window(k, lo, top, table);
        if (w.groups.size() >= count) {
            std::vector<JumpRow> rows;
            FactoredNat current = w.above;
            for (std::size_t i = 0; i < count; ++i) {
                for (const auto& j : w.groups[i].members) current = current.times_prime(j.p);
                rows.push_back({w.groups[i], current});
            }
            return rows;
        }
        lo /= 2.0;
    }
}

}  // namespace dkmax
