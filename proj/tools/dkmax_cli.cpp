// dkmax_cli.cpp

#include "dkmax_cli.hpp"

#include <cmath>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dkmax/bounds.hpp"
#include "dkmax/cache.hpp"
#include "dkmax/divisor.hpp"
#include "dkmax/error.hpp"
#include "dkmax/maximizer.hpp"
#include "dkmax/render.hpp"
#include "dkmax/shcn.hpp"
#include "dkmax/verify.hpp"
#include "dkmax/version.hpp"

namespace dkmax::cli {

namespace {

constexpr std::uint64_t kDecimalCutoff = 1'000'000'000'000'000'000ULL;

struct Globals {
    std::string format;
    std::string cache_path;
    std::uint64_t sieve_limit = PrimeTable::kDefaultLimit;
    bool full_decimal = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_k(std::uint64_t k) {
    if (k < 2) throw UsageError("k must be ≥ 2");
}

// Decimal when small (or forced), else the factorization.
std::string n_plain(const FactoredNat& n, bool full) {
    const auto v = n.to_u64();
    if (full || (v && *v <= kDecimalCutoff)) return n.to_decimal();
    return n.to_factor_string();
}

std::string n_display(const FactoredNat& n, bool full) {
    const auto v = n.to_u64();
    if (n.is_one()) return "1";
    if (full || (v && *v <= kDecimalCutoff)) return n.to_decimal() + " = " + n.to_factor_string();
    return n.to_factor_string();
}

std::string eps_range(double lo, double hi) {
    if (fixed_round_even(lo) == fixed_round_even(hi)) return "eps = " + fixed_round_even(lo);
    return fixed_round_even(lo) + " <= eps <= " + fixed_round_even(hi);
}

Cell eps_cell(const TieGroup& g) {
    if (g.integer_eps) return static_cast<std::int64_t>(*g.integer_eps);
    return g.eps;
}

class Session {
public:
    Session(const Globals& g, std::ostream& out, std::ostream& err)
        : g_(g), out_(out), err_(err), format_(g.format.empty() ? Format::md : parse_format(g.format)) {}

    Format format(Format fallback) const {
        return g_.format.empty() ? fallback : format_;
    }

    const PrimeTable& table() {
        if (!table_) table_ = std::make_unique<PrimeTable>(g_.sieve_limit);
        return *table_;
    }

    PrimeTable& mutable_table() {
        table();
        return *table_;
    }

    ResultCache* cache() {
        if (g_.cache_path.empty()) return nullptr;
        if (!cache_) {
            cache_ = std::make_unique<ResultCache>(g_.cache_path);
            for (const auto& w : cache_->warnings()) err_ << "warning: " << w << '\n';
        }
        return cache_.get();
    }

    int jumps(std::uint64_t k, std::optional<double> lo, std::optional<double> hi,
              std::optional<std::size_t> count) {
        require_k(k);
        Table t{{"eps", "p", "m", "N"}, {}};
        auto add = [&](const TieGroup& g, const FactoredNat& n) {
            for (const auto& j : g.members)
                t.rows.push_back({eps_cell(g), static_cast<std::int64_t>(j.p),
                                  static_cast<std::int64_t>(j.m), n_text(n)});
        };
        if (lo || hi) {
            if (!lo || !hi) throw UsageError("--eps-min and --eps-max go together");
            const JumpWindow w = jump_window(k, *lo, *hi, table());
            FactoredNat current = w.above;
            for (const auto& g : w.groups) {
                for (const auto& j : g.members) current = current.times_prime(j.p);
                add(g, current);
            }
        } else {
            const std::size_t rows = count.value_or(20);
            // Groups are never split, so a tie may add rows past the count.
            for (const auto& r : first_jumps(k, rows, table())) {
                if (t.rows.size() >= rows) break;
                add(r.group, r.n_tilde);
            }
        }
        if (t.rows.empty()) {
            err_ << "no jumps in the requested range\n";
            return kValidationFailure;
        }
        out_ << render_table(t, format(Format::md));
        return kOk;
    }

    int shcn(std::uint64_t k, double eps) {
        require_k(k);
        if (!(eps > 0.0)) throw UsageError("eps must be > 0");
        const double tol = kTieTolerance * std::max(1.0, eps);
        std::vector<FactoredNat> list;
        const JumpWindow w = jump_window(k, eps - tol, eps + tol, table());
        if (w.groups.empty()) list.push_back(n_tilde(k, eps, table()));
        else list = shcn_variants(k, w.groups.front(), w.above);

        Table t{{"N", "ln N", "ln d_k(N)", "f_k(N)"}, {}};
        for (const auto& n : list) {
            Cell f = std::string("-");
            if (n.log_value() > std::log(2.5)) f = f_k(n, k);
            t.rows.push_back({n_text(n), n.log_value(), log_d_k(n, k), f});
        }
        out_ << render_table(t, format(Format::md));
        return kOk;
    }

    int lambda(std::uint64_t k) {
        require_k(k);
        const LambdaResult r = cached_or_computed(k);
        const Format f = format(Format::md);
        if (f == Format::json) {
            out_ << lambda_json(r).dump() << '\n';
            return kOk;
        }
        if (f == Format::csv) {
            out_ << render_table(lambda_table({r}), f);
            return kOk;
        }
        const JumpWindow w = jump_window(k, r.eps1_used, r.eps2, table());
        Table t{{"range of eps", "N", "f_k(N)"}, {}};
        for (const auto& rec : shcn_chain(w)) {
            Cell fv = std::string("-");
            if (rec.f_value) fv = *rec.f_value;
            t.rows.push_back({eps_range(rec.eps_lo, rec.eps_hi), n_display(rec.n, g_.full_decimal), fv});
        }
        out_ << render_table(t, f) << '\n'
             << "lambda(" << k << ") = " << fixed_round_even(r.lambda) << " at N_max(" << k
             << ") = " << n_display(r.n_max, g_.full_decimal) << ", "
             << eps_range(r.eps_lo, r.eps_hi) << '\n'
             << "eps1 = " << fixed_round_even(r.eps1_used) << ", lambda1 = "
             << fixed_round_even(r.lambda1) << ", eps2 = " << fixed_round_even(r.eps2)
             << ", implied eps = " << fixed_round_even(r.implied_eps)
             << (r.maximizer_tie ? ", tie: another SHCN attains the same value" : "") << '\n';
        return kOk;
    }

    int lambda_range_cmd(std::uint64_t a, std::uint64_t b) {
        check_range(a, b);
        const auto results = lambda_range(a, b, mutable_table(), cache());
        warn_monotonicity(results);
        const Format f = format(Format::md);
        if (f == Format::json) {
            auto arr = nlohmann::ordered_json::array();
            for (const auto& r : results) arr.push_back(lambda_json(r));
            out_ << arr.dump() << '\n';
        } else {
            out_ << render_table(lambda_table(results), f);
        }
        return kOk;
    }

    int nmax_range(std::uint64_t a, std::uint64_t b) {
        check_range(a, b);
        const auto results = lambda_range(a, b, mutable_table(), cache());
        Table t{{"k_min", "k_max", "N_max"}, {}};
        std::size_t i = 0;
        while (i < results.size()) {
            std::size_t j = i;
            while (j + 1 < results.size() && results[j + 1].n_max == results[i].n_max) ++j;
            t.rows.push_back({static_cast<std::int64_t>(results[i].k),
                              static_cast<std::int64_t>(results[j].k),
                              n_text(results[i].n_max)});
            i = j + 1;
        }
        out_ << render_table(t, format(Format::md));
        return kOk;
    }

    int bounds(std::uint64_t k, std::optional<std::uint64_t> k_max, std::optional<double> eps1) {
        require_k(k);
        const std::uint64_t last = k_max.value_or(k);
        if (last < k) throw UsageError("--k-max must not be below --k");
        Table t{{"k", "eps0", "c0", "c1", "eps1", "lambda0", "lambda1", "eps2", "N2", "u"}, {}};
        for (std::uint64_t kk = k; kk <= last; ++kk) {
            const BoundSet b = classical_bounds(kk, eps1.value_or(eps0(kk)));
            const StoppingData s = stopping_data(kk, table());
            t.rows.push_back({static_cast<std::int64_t>(kk), b.eps0, b.c0, b.c1, b.eps1, b.lambda0,
                              b.lambda1, s.eps2, n_text(s.n2), s.u});
        }
        out_ << render_table(t, format(Format::md));
        return kOk;
    }

    int verify(std::uint64_t k, std::uint64_t limit, std::optional<double> eps,
               std::optional<std::uint64_t> n) {
        require_k(k);
        ScanReport rep;
        std::string what;
        if (eps && n) {
            rep = verify_superiority(k, *eps, factorize(*n, table()), limit, table());
            what = "superiority of " + std::to_string(*n) + " at eps " + fixed_round_even(*eps, 6);
        } else if (n) {
            rep = verify_k_highly_composite(k, *n, table());
            what = std::to_string(*n) + " is " + std::to_string(k) + "-highly composite";
        } else if (eps) {
            throw UsageError("--eps needs --n");
        } else {
            rep = brute_force_max_f(k, limit, table());
            what = "max f_k over 3.." + std::to_string(limit);
        }
        Table t{{"check", "k", "n_limit", "argmax", "max_f", "violations"}, {}};
        t.rows.push_back({what, static_cast<std::int64_t>(k), static_cast<std::int64_t>(rep.n_limit),
                          static_cast<std::int64_t>(rep.argmax), rep.max_f,
                          static_cast<std::int64_t>(rep.violations.size())});
        out_ << render_table(t, format(Format::md));
        for (const auto& v : rep.violations) err_ << "violation at n=" << v.n << ": " << v.detail << '\n';
        if (rep.truncated) err_ << "(further violations truncated)\n";
        return rep.ok() ? kOk : kValidationFailure;
    }

    int plot_data(std::uint64_t a, std::uint64_t b) {
        check_range(a, b);
        const auto results = lambda_range(a, b, mutable_table(), cache());
        warn_monotonicity(results);
        Table t{{"k", "lambda"}, {}};
        for (const auto& r : results) t.rows.push_back({static_cast<std::int64_t>(r.k), r.lambda});
        out_ << render_table(t, format(Format::csv));
        return kOk;
    }

private:
    std::string n_text(const FactoredNat& n) const {
        return format_ == Format::md ? n_display(n, g_.full_decimal) : n_plain(n, g_.full_decimal);
    }

    static void check_range(std::uint64_t a, std::uint64_t b) {
        require_k(a);
        if (a > b) throw UsageError("--k-min must not exceed --k-max");
    }

    LambdaResult cached_or_computed(std::uint64_t k) {
        return lambda_range(k, k, mutable_table(), cache()).front();
    }

    void warn_monotonicity(const std::vector<LambdaResult>& results) {
        for (auto k : monotonicity_violations(results))
            err_ << "warning: lambda(" << k << ") does not exceed lambda(" << k - 1 << ")\n";
    }

    nlohmann::ordered_json lambda_json(const LambdaResult& r) const {
        nlohmann::ordered_json j;
        auto factors = nlohmann::ordered_json::array();
        for (const auto& f : r.n_max.factors()) factors.push_back({f.prime, f.exponent});
        j["k"] = r.k;
        j["lambda"] = round_significant(r.lambda);
        j["nmax"] = n_plain(r.n_max, g_.full_decimal);
        j["nmax_factors"] = std::move(factors);
        j["eps_lo"] = round_significant(r.eps_lo);
        j["eps_hi"] = round_significant(r.eps_hi);
        j["eps1_used"] = round_significant(r.eps1_used);
        j["lambda1"] = round_significant(r.lambda1);
        j["implied_eps"] = round_significant(r.implied_eps);
        j["eps2"] = round_significant(r.eps2);
        j["maximizer_tie"] = r.maximizer_tie;
        return j;
    }

    Table lambda_table(const std::vector<LambdaResult>& results) const {
        Table t{{"k", "lambda", "N_max", "eps_lo", "eps_hi", "eps1_used", "lambda1", "implied_eps"}, {}};
        for (const auto& r : results)
            t.rows.push_back({static_cast<std::int64_t>(r.k), r.lambda, n_text(r.n_max), r.eps_lo,
                              r.eps_hi, r.eps1_used, r.lambda1, r.implied_eps});
        return t;
    }

    const Globals& g_;
    std::ostream& out_;
    std::ostream& err_;
    Format format_;
    std::unique_ptr<PrimeTable> table_;
    std::unique_ptr<ResultCache> cache_;
};

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Superior k-highly composite numbers and the maximum of f_k", "dkmax"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"md", "csv", "json"}));
    app.add_option("--cache", g.cache_path, "JSON-lines result cache");
    app.add_option("--sieve-limit", g.sieve_limit, "Initial prime table limit")->check(CLI::Range(2ULL, 4'000'000'000ULL));
    app.add_flag("--full-decimal", g.full_decimal, "Print large N in full decimal");

    std::uint64_t k = 0, k_min = 0, k_max = 0, limit = 0;
    std::optional<std::uint64_t> k_max_opt, n_opt;
    std::optional<double> eps_min, eps_max, eps_opt, eps1_opt;
    std::optional<std::size_t> count;
    double eps = 0.0;

    auto* jumps = app.add_subcommand("jumps", "Jump values eps[k,p;m] with the largest SHCN at each");
    jumps->add_option("--k", k)->required();
    jumps->add_option("--eps-min", eps_min);
    jumps->add_option("--eps-max", eps_max);
    jumps->add_option("--count", count, "Number of rows from log2(k) downwards (default 20)");

    auto* shcn = app.add_subcommand("shcn", "All SHCNs associated to eps");
    shcn->add_option("--k", k)->required();
    shcn->add_option("--eps", eps)->required();

    auto* lambda = app.add_subcommand("lambda", "lambda(k) and N_max(k)");
    lambda->add_option("--k", k)->required();

    auto* lrange = app.add_subcommand("lambda-range", "lambda(k) for a range of k");
    lrange->add_option("--k-min", k_min)->required();
    lrange->add_option("--k-max", k_max)->required();

    auto* nrange = app.add_subcommand("nmax-range", "N_max(k) grouped into runs of equal value");
    nrange->add_option("--k-min", k_min)->required();
    nrange->add_option("--k-max", k_max)->required();

    auto* bounds = app.add_subcommand("bounds", "eps0, c0, c1, lambda0, lambda1, eps2, N2, u");
    bounds->add_option("--k", k)->required();
    bounds->add_option("--k-max", k_max_opt, "Last k of a range starting at --k");
    bounds->add_option("--eps1", eps1_opt, "Defaults to eps0(k)");

    auto* verify = app.add_subcommand("verify", "Brute-force checks");
    verify->add_option("--k", k)->required();
    verify->add_option("--limit", limit, "Scan limit");
    verify->add_option("--eps", eps_opt);
    verify->add_option("--n", n_opt);

    auto* plot = app.add_subcommand("plot-data", "(k, lambda) pairs as CSV");
    plot->add_option("--k-min", k_min)->required();
    plot->add_option("--k-max", k_max)->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsageError;
    }

    try {
        Session s(g, out, err);
        if (jumps->parsed()) return s.jumps(k, eps_min, eps_max, count);
        if (shcn->parsed()) return s.shcn(k, eps);
        if (lambda->parsed()) return s.lambda(k);
        if (lrange->parsed()) return s.lambda_range_cmd(k_min, k_max);
        if (nrange->parsed()) return s.nmax_range(k_min, k_max);
        if (bounds->parsed()) return s.bounds(k, k_max_opt, eps1_opt);
        if (verify->parsed()) {
            if (limit == 0 && !(n_opt && !eps_opt)) throw UsageError("--limit is required");
            return s.verify(k, limit, eps_opt, n_opt);
        }
        if (plot->parsed()) return s.plot_data(k_min, k_max);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::invalid_argument ? kUsageError : kValidationFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kValidationFailure;
    }
    return kUsageError;
}

}  // namespace dkmax::cli
