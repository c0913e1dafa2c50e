#include <gtest/gtest.h>

#include <cmath>

#include "dkmax/divisor.hpp"
#include "dkmax/error.hpp"
#include "dkmax/maximizer.hpp"
#include "dkmax/shcn.hpp"
#include "dkmax/verify.hpp"
#include "test_support.hpp"

using namespace dkmax;

namespace {

const PrimeTable& table() {
    static const PrimeTable t(2'000'000);
    return t;
}

}  // namespace

TEST(Verify, BruteForceExamples) {
    const auto a = brute_force_max_f(2, 100'000, table());
    EXPECT_EQ(a.argmax, static_cast<std::uint64_t>(test::derived("bf_k2_1e5_argmax")));
    EXPECT_EQ(a.argmax, 55440u);
    EXPECT_NEAR(a.max_f, 1.5118, 1e-4);
    EXPECT_NEAR(a.max_f, test::derived("bf_k2_1e5_max"), 1e-12);
    EXPECT_EQ(a.max_f, f_k(factorize(55440, table()), 2));

    const auto b = brute_force_max_f(2, 2520, table());
    EXPECT_EQ(b.argmax, 2520u);
    EXPECT_NEAR(b.max_f, 1.4677, 1e-4);

    const auto c = brute_force_max_f(3, 10, table());
    std::uint64_t best = 3;
    for (std::uint64_t n = 4; n <= 10; ++n)
        if (f_k(factorize(n, table()), 3) > f_k(factorize(best, table()), 3)) best = n;
    EXPECT_EQ(c.argmax, best);

    try {
        brute_force_max_f(2, 200'000'000, table());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::resource_limit);
    }
}

// The scan maximum lies between the best chain SHCN below the limit and
// lambda(k). It equals the former for k = 2, 4 only: for k = 3 and 5 the
// non-superior 665280 and 604800 beat every SHCN below 10^6.
TEST(Verify, BruteForceToMillionAgainstChains) {
    const std::pair<std::uint64_t, const char*> chains[] = {
        {2, "table4.tsv"}, {3, "table13.tsv"}, {4, "table14.tsv"}, {5, "table15.tsv"}};
    for (const auto& [k, name] : chains) {
        const auto rep = brute_force_max_f(k, 1'000'000, table());
        const std::string tag = "bf_k" + std::to_string(k) + "_1e6_";
        EXPECT_EQ(rep.argmax, static_cast<std::uint64_t>(test::derived(tag + "argmax"))) << k;
        EXPECT_NEAR(rep.max_f, test::derived(tag + "max"), 1e-12) << k;
        double chain_best = 0.0;
        for (const auto& r : test::read_tsv(name))
            if (test::nat(r, "n") <= 1'000'000)
                chain_best = std::max(chain_best, f_k(factorize(test::nat(r, "n"), table()), k));
        EXPECT_GE(rep.max_f, chain_best) << k;
        EXPECT_LE(rep.max_f, find_lambda(k, table()).lambda) << k;
        if (k == 2 || k == 4) EXPECT_NEAR(rep.max_f, chain_best, 1e-12) << k;
    }
}

TEST(Verify, SuperiorityExamples) {
    EXPECT_TRUE(verify_superiority(2, 0.23, factorize(6983776800ULL, table()), 1'000'000, table()).ok());
    EXPECT_TRUE(verify_superiority(2, 0.5, factorize(12, table()), 100'000, table()).ok());
    const auto bad = verify_superiority(2, 0.1, factorize(12, table()), 10'000, table());
    EXPECT_FALSE(bad.ok());
    bool saw_5040 = false;
    for (const auto& v : bad.violations) saw_5040 |= v.n == 5040;
    EXPECT_TRUE(saw_5040 || bad.truncated);
    const auto many = verify_superiority(2, 0.1, factorize(12, table()), 100'000, table());
    EXPECT_EQ(many.violations.size(), kMaxViolations);
    EXPECT_TRUE(many.truncated);
}

TEST(Verify, HighlyCompositeExamples) {
    EXPECT_TRUE(verify_k_highly_composite(2, 5040, table()).ok());
    const auto bad = verify_k_highly_composite(2, 5041, table());
    EXPECT_FALSE(bad.ok());
    EXPECT_EQ(d_k(factorize(5041, table()), 2).exact(), 3);
    EXPECT_TRUE(verify_k_highly_composite(3, 720, table()).ok());
}

TEST(Verify, JumpTableShcnsAreSuperior) {
    const std::pair<std::uint64_t, const char*> tables[] = {
        {2, "table5.tsv"}, {3, "table7.tsv"}, {4, "table9.tsv"}, {5, "table11.tsv"}};
    for (const auto& [k, name] : tables) {
        for (const auto& row : first_jumps(k, 20, table())) {
            const auto rep = verify_superiority(k, row.group.eps, row.n_tilde, 100'000, table());
            EXPECT_TRUE(rep.ok()) << name << " " << row.n_tilde.to_decimal();
        }
    }
}

TEST(Verify, SmallShcnsAreHighlyComposite) {
    for (std::uint64_t k = 2; k <= 5; ++k)
        for (const auto& row : first_jumps(k, 20, table())) {
            const auto v = row.n_tilde.to_u64();
            if (!v || *v > 1'000'000) continue;
            EXPECT_TRUE(verify_k_highly_composite(k, *v, table()).ok()) << k << " " << *v;
        }
}

TEST(Verify, AllVariantsSuperiorForSmallK) {
    for (std::uint64_t k = 2; k <= 10; ++k) {
        const double top = std::log2(double(k));
        const auto w = jump_window(k, top / 4, top + 0.01, table());
        FactoredNat current = w.above;
        for (const auto& g : w.groups) {
            const auto variants = shcn_variants(k, g, current);
            current = variants.back();
            for (const auto& n : variants) {
                const auto v = n.to_u64();
                if (!v || *v > 1'000'000) continue;
                EXPECT_TRUE(verify_superiority(k, g.eps, n, 100'000, table()).ok())
                    << k << " " << g.eps << " " << *v;
            }
            if (current.log_value() > std::log(1e6)) break;
        }
    }
}
