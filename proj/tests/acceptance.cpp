// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dkmax/bounds.hpp"
#include "dkmax/cache.hpp"
#include "dkmax/divisor.hpp"
#include "dkmax/error.hpp"
#include "dkmax/maximizer.hpp"
#include "dkmax/shcn.hpp"
#include "dkmax/verify.hpp"
#include "dkmax_cli.hpp"
#include "test_support.hpp"

using namespace dkmax;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Check {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (!ok && failures.size() < 5) failures.push_back(what);
    }
    void near(double got, double want, double tol, const std::string& what) {
        std::ostringstream s;
        s.precision(10);
        s << what << ": got " << got << ", want " << want;
        expect(std::abs(got - want) <= tol, s.str());
    }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

PrimeTable& table() {
    static PrimeTable t(2'000'000);
    return t;
}

void lambda_row(Check& c, std::uint64_t k, double lambda, std::uint64_t n, double lo, double hi) {
    const auto r = find_lambda(k, table());
    const auto tag = "k=" + std::to_string(k);
    c.near(r.lambda, lambda, 1e-4, tag + " lambda");
    c.expect(r.n_max.to_u64() == n, tag + " N_max " + r.n_max.to_decimal());
    c.near(r.eps_lo, lo, 1e-4, tag + " eps_lo");
    c.near(r.eps_hi, hi, 1e-4, tag + " eps_hi");
}

fs::path work_dir() {
    const auto d = fs::temp_directory_path() / "dkmax_acceptance";
    fs::create_directories(d);
    return d;
}

std::vector<LambdaResult>& sweep_results() {
    static std::vector<LambdaResult> r;
    return r;
}
double sweep_seconds = 0.0;

void criterion1(Check& c) {
    const auto t0 = Clock::now();
    PrimeTable fresh(2'000'000);
    const auto r = find_lambda(2, fresh);
    const double dt = seconds_since(t0);
    lambda_row(c, 2, 1.5379, 6983776800ULL, 0.2224, 0.2354);
    c.expect(r.n_max.to_decimal() == "6983776800", "k=2 N_max decimal");
    c.expect(dt < 1.0, "k=2 runtime " + std::to_string(dt) + " s");
}

void criterion2(Check& c) {
    lambda_row(c, 3, 1.5914, 43243200, 0.3878, 0.4150);
    lambda_row(c, 4, 1.6337, 259459200, 0.4893, 0.5094);
    lambda_row(c, 5, 1.6714, 259459200, 0.5850, 0.6275);
    c.expect(find_lambda(4, table()).n_max == find_lambda(5, table()).n_max, "N_max(4) != N_max(5)");
}

void criterion3(Check& c) {
    const std::tuple<std::uint64_t, double, double, double> rows[] = {
        {10, 1.7993, 0.8977, 0.9260}, {50, 2.1888, 1.7874, 1.8395}, {100, 2.3799, 2.2224, 2.2619}};
    const auto t16 = test::read_tsv("table16.tsv");
    for (const auto& [k, lambda, lo, hi] : rows) {
        const auto r = find_lambda(k, table());
        const auto tag = "k=" + std::to_string(k);
        c.near(r.lambda, lambda, 1e-4, tag + " lambda");
        c.near(r.eps_lo, lo, 1e-4, tag + " eps_lo");
        c.near(r.eps_hi, hi, 1e-4, tag + " eps_hi");
    }
    for (const auto& row : t16) {
        const auto k = test::nat(row, "k");
        const auto r = find_lambda(k, table());
        const auto tag = "table16 k=" + std::to_string(k);
        c.near(r.lambda, test::num(row, "lambda"), 1e-4, tag + " lambda");
        c.near(r.eps_lo, test::num(row, "eps_lo"), 1e-4, tag + " eps_lo");
        c.near(r.eps_hi, test::num(row, "eps_hi"), 1e-4, tag + " eps_hi");
    }
}

void criterion4(Check& c) {
    const auto cache_path = work_dir() / "sweep.jsonl";
    fs::remove(cache_path);
    PrimeTable t(2'000'000);
    ResultCache cache(cache_path);
    const auto t0 = Clock::now();
    sweep_results() = lambda_range(2, 2000, t, &cache);
    sweep_seconds = seconds_since(t0);
    const auto& all = sweep_results();
    c.expect(all.size() == 1999, "sweep size " + std::to_string(all.size()));
    if (all.size() != 1999) return;

    std::size_t rows = 0;
    for (const auto& r : test::read_tsv("table17.tsv")) {
        ++rows;
        const auto n = test::parse_factors(r.at("nmax_factors"));
        for (auto k = test::nat(r, "k_min"); k <= test::nat(r, "k_max"); ++k)
            c.expect(all[k - 2].n_max == n, "k=" + std::to_string(k) + " N_max " + all[k - 2].n_max.to_factor_string());
    }
    std::size_t runs = 1;
    for (std::size_t i = 1; i < all.size(); ++i) runs += !(all[i].n_max == all[i - 1].n_max);
    c.expect(runs == rows, "run count " + std::to_string(runs) + " vs " + std::to_string(rows));
    c.expect(all[198].n_max.to_factor_string() == "2^36*3^11*5^2*7", "N_max(200)");
    for (std::uint64_t k = 996; k <= 1025; ++k)
        c.expect(all[k - 2].n_max.to_factor_string() == "2^76*3^15*5^2", "N_max(" + std::to_string(k) + ")");
    for (std::uint64_t k = 1968; k <= 2000; ++k)
        c.expect(all[k - 2].n_max.to_factor_string() == "2^102*3^16*5", "N_max(" + std::to_string(k) + ")");
    c.expect(sweep_seconds <= 300.0, "sweep runtime " + std::to_string(sweep_seconds) + " s");
}

void criterion5(Check& c) {
    const std::pair<std::uint64_t, const char*> tables[] = {
        {2, "table5.tsv"}, {3, "table7.tsv"}, {4, "table9.tsv"}, {5, "table11.tsv"}};
    for (const auto& [k, name] : tables) {
        const auto expect = test::read_tsv(name);
        std::size_t i = 0;
        const auto rows = first_jumps(k, 20, table());
        c.expect(rows.size() == 20, std::string(name) + " group count");
        for (const auto& row : rows)
            for (const auto& j : row.group.members) {
                if (i >= expect.size()) {
                    c.expect(false, std::string(name) + " has extra rows");
                    break;
                }
                const auto& e = expect[i++];
                const auto tag = std::string(name) + " row " + std::to_string(i);
                c.near(row.group.eps, test::num(e, "eps"), 1e-4, tag + " eps");
                c.expect(j.p == test::nat(e, "p") && j.m == test::nat(e, "m"), tag + " (p, m)");
                c.expect(row.n_tilde.to_u64() == test::nat(e, "n_tilde"), tag + " n_tilde");
            }
        c.expect(i == expect.size(), std::string(name) + " row count");
    }
    const auto g3 = enumerate_jump_groups(3, 0.99, 1.01, table());
    c.expect(g3.size() == 1 && g3[0].members.size() == 2, "k=3 tie at eps=1");
    const auto g5 = enumerate_jump_groups(5, 0.99, 1.01, table());
    c.expect(g5.size() == 1 && g5[0].members.size() == 3, "k=5 tie at eps=1");
    if (g5.size() == 1) {
        std::vector<std::uint64_t> got;
        for (const auto& n : shcn_variants(5, g5[0], n_tilde(5, 1.01, table()))) got.push_back(*n.to_u64());
        c.expect(got == std::vector<std::uint64_t>{24, 48, 72, 120, 144, 240, 360, 720}, "Table 12 variants");
    }
}

void criterion6(Check& c) {
    for (const auto& r : test::read_tsv("table1.tsv")) {
        const auto k = test::nat(r, "k");
        const auto b = classical_bounds(k, eps0(k));
        const auto tag = "table1 k=" + std::to_string(k);
        c.near(b.eps0, test::num(r, "eps0"), 1e-4, tag + " eps0");
        c.near(b.c0, test::num(r, "c0"), 1e-4, tag + " c0");
        c.near(b.c1, test::num(r, "c1"), 1e-4, tag + " c1");
    }
    for (const auto& r : test::read_tsv("table3.tsv")) {
        const auto k = test::nat(r, "k");
        c.near(classical_bounds(k, eps0(k)).lambda0, test::num(r, "lambda0"), 1e-4,
               "table3 k=" + std::to_string(k));
    }
    for (const auto& r : test::read_tsv("table2.tsv")) {
        const auto k = test::nat(r, "k");
        const auto s = stopping_data(k, table());
        const auto tag = "table2 k=" + std::to_string(k);
        c.near(s.eps2, test::num(r, "eps2"), 1e-4, tag + " eps2");
        c.expect(s.n2.to_decimal() == r.at("n2"), tag + " N2");
        c.near(s.u, test::num(r, "u"), 1e-3, tag + " u");
    }
    for (std::uint64_t k = 2; k <= 2000; ++k) {
        try {
            c.expect(stopping_data(k, table()).u < 0.0, "u >= 0 at k=" + std::to_string(k));
        } catch (const Error& e) {
            c.expect(false, "k=" + std::to_string(k) + ": " + e.what());
        }
    }
}

void criterion7(Check& c) {
    DivisorOracle oracle(5000);
    for (std::uint64_t n = 1; n <= 5000; ++n) {
        const auto fn = factorize(n, table());
        for (std::uint64_t k = 2; k <= 8; ++k)
            c.expect(d_k(fn, k).exact() == oracle.d_k(n, k),
                     "d_k oracle n=" + std::to_string(n) + " k=" + std::to_string(k));
    }

    std::mt19937_64 rng(20240531);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t k = std::uniform_int_distribution<std::uint64_t>(2, 200)(rng);
        const double lo = std::log(double(k)) / std::log(1e5);
        const double hi = 1.1 * std::log2(double(k));
        const double eps = std::uniform_real_distribution<double>(lo, hi)(rng);
        const auto tag = "k=" + std::to_string(k) + " eps=" + std::to_string(eps);
        const auto a = analytic_identities(k, eps, table());
        const auto n = n_tilde(k, eps, table());
        const double ld = log_d_k(n, k);
        c.expect(std::abs(a.log_n - n.log_value()) <= 1e-9 * std::max(1.0, a.log_n), tag + " theta identity");
        c.expect(std::abs(a.log_dk - ld) <= 1e-9 * std::max(1.0, a.log_dk), tag + " pi identity");
        const double x = std::pow(double(k), 1.0 / eps);
        c.expect(n.log_value() >= chebyshev_psi(table(), x) - 1e-9, tag + " psi bound");
        c.expect(n.log_value() <= c0(k) * x, tag + " c0 bound");
        if (eps <= eps0(k)) c.expect(n.log_value() <= c1(k) * x, tag + " c1 bound");
    }

    for (std::uint64_t k = 2; k <= 5; ++k)
        for (const auto& row : first_jumps(k, 20, table()))
            c.expect(verify_superiority(k, row.group.eps, row.n_tilde, 100'000, table()).ok(),
                     "superiority k=" + std::to_string(k) + " N=" + row.n_tilde.to_decimal());

    for (const auto& r : sweep_results())
        c.expect(r.eps_lo <= r.implied_eps && r.implied_eps <= r.eps_hi,
                 "implied eps outside range at k=" + std::to_string(r.k));
    c.expect(sweep_results().size() == 1999, "implied eps check needs the full sweep");

    for (std::uint64_t n = 1; n <= 10'000; ++n) {
        const auto fn = factorize(n, table());
        const BigNat d2 = d_k(fn, 2).exact();
        BigNat pow = 1;
        for (std::uint64_t k = 2; k <= 8; ++k) {
            pow *= d2;
            c.expect(d_k(fn, k).exact() <= pow, "d_k <= d^(k-1) at n=" + std::to_string(n));
        }
    }
    for (std::uint64_t k = 2; k <= 100; ++k) {
        BigNat kp = 1;
        for (std::uint32_t m = 0; m <= 64; ++m) {
            c.expect(binomial_dk(m, k) <= kp, "C(m+k-1,k-1) <= k^m at k=" + std::to_string(k));
            kp *= k;
        }
    }

    c.expect(brute_force_max_f(2, 100'000, table()).argmax == 55440, "brute force argmax k=2");
}

void criterion8(Check& c) {
    const auto cache_path = work_dir() / "sweep.jsonl";
    std::ostringstream out, err;
    const int code = cli::run_command(
        {"--cache", cache_path.string(), "plot-data", "--k-min", "2", "--k-max", "2000", "--format", "csv"}, out, err);
    c.expect(code == 0, "plot-data exit " + std::to_string(code) + ": " + err.str());

    std::istringstream lines(out.str());
    std::string line;
    std::getline(lines, line);
    c.expect(line == "\"k\",\"lambda\"\r", "plot-data header");
    std::vector<std::pair<std::uint64_t, double>> pts;
    while (std::getline(lines, line)) {
        const auto comma = line.find(',');
        pts.emplace_back(std::stoull(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
    }
    c.expect(pts.size() == 1999, "plot-data rows " + std::to_string(pts.size()));
    if (pts.size() != 1999) return;
    for (std::size_t i = 1; i < pts.size(); ++i)
        c.expect(pts[i].first == pts[i - 1].first + 1, "k sequence at " + std::to_string(pts[i].first));

    const auto& all = sweep_results();
    c.expect(all.size() == 1999, "full sweep missing");
    if (all.size() != 1999) return;
    c.expect(monotonicity_violations(all).empty(), "lambda not strictly increasing");
    c.near(pts.front().second, 1.5379, 1e-12, "plot-data lambda(2)");
    c.near(all.front().lambda, 1.5379, 1e-4, "lambda(2)");

    const auto last = all.back();
    c.expect(last.k == 2000, "last k");
    c.near(pts.back().second, std::nearbyint(last.lambda * 1e4) / 1e4, 1e-12, "plot-data lambda(2000)");
    const auto again = find_lambda(2000, table());
    c.expect(again == last, "lambda(2000) differs between runs");
    const auto reloaded = load_cache(cache_path);
    bool found = false;
    for (const auto& r : reloaded.results)
        if (r.k == 2000) found = (r == last);
    c.expect(found, "lambda(2000) cache record not bit-identical");

    const auto pinned = work_dir() / "lambda2000.jsonl";
    const auto line2000 = to_cache_line(last);
    if (fs::exists(pinned)) {
        std::ifstream in(pinned);
        std::string previous;
        std::getline(in, previous);
        c.expect(previous == line2000, "lambda(2000) changed since previous run: " + previous);
    } else {
        std::ofstream(pinned) << line2000 << '\n';
    }
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<void(Check&)>> criteria[] = {
        {"lambda(2), N_max(2), eps range, runtime < 1 s", criterion1},
        {"lambda and N_max for k = 3, 4, 5", criterion2},
        {"Table 16 lambda and eps ranges", criterion3},
        {"Table 17 partition for k = 2..2000, runtime <= 5 min", criterion4},
        {"first 20 jumps for k = 2..5, tie rows, Table 12 variants", criterion5},
        {"Tables 1, 2, 3 and u(k) < 0 for k <= 2000", criterion6},
        {"property suite", criterion7},
        {"lambda-range data strictly increasing, lambda(2000) stable", criterion8},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Check c;
        const auto t0 = Clock::now();
        try {
            run(c);
        } catch (const std::exception& e) {
            c.failures.insert(c.failures.begin(), std::string("exception: ") + e.what());
        }
        const double dt = seconds_since(t0);
        const bool ok = c.failures.empty();
        failed += !ok;
        std::printf("%s criterion %d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", index, name, dt);
        for (const auto& f : c.failures) std::printf("    %s\n", f.c_str());
    }
    if (sweep_seconds > 0) std::printf("sweep k = 2..2000: %.1f s\n", sweep_seconds);
    return failed;
}
