#include <gtest/gtest.h>

#include "semimod/errors.hpp"
#include "semimod/verify.hpp"

using namespace semimod;

namespace {

SupportWindow window_n(int len) {
    SupportWindow w;
    for (int i = 0; i < len; ++i) w.exponents.push_back(MonoidElement{i});
    return w;
}

struct Zn {
    RingPtr r;
    ModulePtr m;
    explicit Zn(std::size_t n) : r(build_zmod(n)), m(ring_as_module(r)) {}
};

void expect_pass(const VerificationReport& r) {
    EXPECT_EQ(r.outcome, Outcome::pass) << r.statement << ": " << r.payload.dump();
    EXPECT_EQ(r.instances_checked, r.predicted_instances) << r.statement;
}

// Rebuilds a series from its payload encoding.
Series decode(const Json& j, const RingPtr& r, const ModulePtr& m, const MonoidPtr& s) {
    const auto terms = series_terms_from_json(j["terms"], *s, [](const Json& c) { return c.get<Index>(); });
    return m ? Series::over_module(m, s, terms) : Series::over_ring(r, s, terms);
}

}  // namespace

TEST(McCoyContent, ContentBranchOverZ6) {
    Zn z(6);
    const auto rep = verify_mccoy_content(z.r, z.m, build_free_monoid(1), window_n(3));
    expect_pass(rep);
    EXPECT_EQ(rep.instances_checked, 46656u);
    EXPECT_EQ(rep.payload["dm_inconclusive"], 0);
    EXPECT_EQ(rep.payload["zero_products"], rep.payload["mccoy_witnesses"]);
}

TEST(McCoyContent, NonCancellativeBranchReplays) {
    Zn z(6);
    const MonoidPtr sat = build_saturating_monoid(2);
    const auto rep = verify_mccoy_content(z.r, z.m, sat, window_n(3));
    expect_pass(rep);
    EXPECT_EQ(rep.payload["branch"], "noncancellative");
    ASSERT_EQ(rep.payload["instances"].size(), 5u);
    for (const Json& inst : rep.payload["instances"]) {
        const Series f = decode(inst["f"], z.r, nullptr, sat);
        const Series g = decode(inst["g"], z.r, z.m, sat);
        EXPECT_TRUE(series_multiply(f, g).is_zero());
        EXPECT_FALSE(g.is_zero());
        for (Index m = 1; m < 6; ++m) EXPECT_FALSE(series_act_on_element(f, z.m, m).is_zero());
    }
}

TEST(McCoyContent, TorsionBranchReplays) {
    Zn z(6);
    for (std::size_t k = 2; k <= 4; ++k) {
        const MonoidPtr c = build_cyclic_group(k);
        const auto rep = verify_mccoy_content(z.r, z.m, c, default_window(*c));
        expect_pass(rep);
        EXPECT_EQ(rep.payload["branch"], "torsion");
        EXPECT_EQ(rep.payload["k"], k);
        for (const Json& inst : rep.payload["instances"]) {
            const Series h = decode(inst["h"], z.r, nullptr, c);
            const Series g = decode(inst["g"], z.r, z.m, c);
            EXPECT_EQ(h.support_size(), k);
            EXPECT_TRUE(series_multiply(h, g).is_zero());
        }
    }
}

TEST(McCoyContent, BudgetExceededIsSkipped) {
    Zn z(6);
    const auto rep = verify_mccoy_content(z.r, z.m, build_free_monoid(1), window_n(3), VerifyOptions{1000});
    EXPECT_EQ(rep.outcome, Outcome::skipped);
    EXPECT_EQ(rep.instances_checked, 0u);
    EXPECT_EQ(rep.predicted_instances, 46656u);
}

TEST(McCoyContent, ZeroModuleRejected) {
    Zn z(1);
    EXPECT_THROW(verify_mccoy_content(z.r, z.m, build_free_monoid(1), window_n(2)), DegenerateInputError);
}

TEST(ExtendedPrimes, DomainAndPrimes) {
    Zn z5(5);
    const auto r5 = verify_extended_primes(z5.r, nullptr, build_free_monoid(1), window_n(3));
    expect_pass(r5);
    EXPECT_EQ(r5.payload["domain_transfer"]["domain"], true);
    EXPECT_EQ(r5.payload["domain_transfer"]["nonzero_pairs"], 124u * 124u);

    Zn z6(6);
    const auto r6 = verify_extended_primes(z6.r, z6.m, build_free_monoid(1), window_n(2));
    expect_pass(r6);
    EXPECT_EQ(r6.payload["domain_transfer"]["domain"], false);
    ASSERT_EQ(r6.payload["associated_transfer"].size(), 2u);
    // p = (3), m = 2: f . 2 = 0 iff both coefficients lie in (3): 2 * 2 series.
    EXPECT_EQ(r6.payload["associated_transfer"][1]["witness"], 2);
    EXPECT_EQ(r6.payload["associated_transfer"][1]["window_members"], 4);
}

TEST(ExtendedPrimes, HypothesisRequired) {
    Zn z(6);
    EXPECT_THROW(verify_extended_primes(z.r, z.m, build_cyclic_group(2), window_n(1)), HypothesisError);
}

TEST(SubmoduleTransfer, PrimaryAndPrimeTransfer) {
    const MonoidPtr n = build_free_monoid(1);
    Zn z4(4);
    const auto r4 = verify_submodule_transfer(Submodule::zero(z4.m), n, window_n(2));
    expect_pass(r4);
    EXPECT_EQ(r4.payload["primary_transfer"], "window-verified");
    EXPECT_EQ(r4.payload["prime_transfer"], "not asserted");

    Zn z6(6);
    const auto r6 = verify_submodule_transfer(submodule_generated(z6.m, std::vector<Index>{3}), n, window_n(2));
    expect_pass(r6);
    EXPECT_EQ(r6.payload["prime_transfer"], "window-verified");

    Zn z12(12);
    const auto r12 = verify_submodule_transfer(submodule_generated(z12.m, std::vector<Index>{4}), n, window_n(2));
    expect_pass(r12);
    EXPECT_EQ(r12.payload["primary_transfer"], "window-verified");
    ASSERT_FALSE(r12.payload["prime_violation_in_window"].is_null());
    // Canonical order puts c_0 first, so X^1-only series precede constants:
    // the least violation is r = x = 2X (r x = 4X^2 in (4)[N], 2 M not in (4)).
    EXPECT_EQ(r12.payload["prime_violation_in_window"]["f"]["text"], "2*X^1");
    EXPECT_EQ(r12.payload["prime_violation_in_window"]["g"]["text"], "2*X^1");
}

TEST(Regularity, FleetAgreement) {
    const MonoidPtr n = build_free_monoid(1);
    Zn z6(6);
    const auto r6 = verify_regularity(z6.r, z6.m, n, window_n(3));
    expect_pass(r6);
    EXPECT_EQ(r6.instances_checked, 216u);
    Zn z4(4);
    const auto r4 = verify_regularity(z4.r, z4.m, n, window_n(2));
    expect_pass(r4);
    EXPECT_EQ(r4.instances_checked, 16u);
    // Zero series is always a zero-divisor on a nonzero module.
    EXPECT_GE(r4.payload["zero_divisor_f"].get<int>(), 1);
}

TEST(ZeroDivisorTransfer, KnownValues) {
    const MonoidPtr n = build_free_monoid(1);
    Zn z6(6);
    const auto r6 = verify_zero_divisor_transfer(z6.r, z6.m, n, window_n(3));
    expect_pass(r6);
    EXPECT_EQ(r6.payload["degree"], 2);
    EXPECT_EQ(r6.instances_checked, 216u);

    Zn z4(4);
    const auto r4 = verify_zero_divisor_transfer(z4.r, z4.m, n, window_n(3));
    expect_pass(r4);
    EXPECT_EQ(r4.payload["degree"], 1);
    EXPECT_EQ(r4.payload["primal"], true);

    const RingPtr t = build_truncated_poly_ring(2, 2, 3);
    const auto rt = verify_zero_divisor_transfer(t, ring_as_module(t), n, window_n(2));
    expect_pass(rt);
    EXPECT_EQ(rt.payload["degree"], 1);
    EXPECT_EQ(rt.instances_checked, 4096u);
}

TEST(ZeroDivisorTransfer, WindowMonotone) {
    // The verdicts on the {0,1} window are the restriction of those on {0,1,2}.
    Zn z(12);
    const MonoidPtr n = build_free_monoid(1);
    std::map<std::string, bool> small;
    for_each_window_series(z.r, n, window_n(2),
                           [&](const Series& f) { small[f.to_string()] = is_zero_divisor_series(f, z.m).zero_divisor; });
    std::size_t seen = 0;
    for_each_window_series(z.r, n, window_n(3), [&](const Series& f) {
        auto it = small.find(f.to_string());
        if (it == small.end()) return;
        ++seen;
        EXPECT_EQ(it->second, is_zero_divisor_series(f, z.m).zero_divisor);
    });
    EXPECT_EQ(seen, small.size());
}

TEST(ZeroDivisorChain, FleetRings) {
    for (const RingPtr& r : {build_zmod(6), build_zmod(4), build_truncated_poly_ring(2, 2, 3)}) {
        const auto rep = verify_zero_divisor_chain(r);
        expect_pass(rep);
        EXPECT_EQ(rep.payload["very_few"], true);
    }
    EXPECT_EQ(verify_zero_divisor_chain(build_zmod(6)).payload["degree"], 2);
    EXPECT_EQ(verify_zero_divisor_chain(build_zmod(4)).payload["degree"], 1);
}
