#include <gtest/gtest.h>

#include "oracle.hpp"
#include "semimod/errors.hpp"
#include "semimod/series.hpp"
#include "semimod/window.hpp"

using namespace semimod;

namespace {

struct Z6 {
    RingPtr r = build_zmod(6);
    ModulePtr m = ring_as_module(r);
    MonoidPtr n = build_free_monoid(1);

    Series f(std::vector<Index> coeffs) const {
        std::vector<Term> t;
        for (std::size_t i = 0; i < coeffs.size(); ++i) t.push_back({MonoidElement{std::int64_t(i)}, coeffs[i]});
        return Series::over_ring(r, n, t);
    }
    Series g(std::vector<Index> coeffs) const {
        std::vector<Term> t;
        for (std::size_t i = 0; i < coeffs.size(); ++i) t.push_back({MonoidElement{std::int64_t(i)}, coeffs[i]});
        return Series::over_module(m, n, t);
    }
};

oracle::Poly to_poly(const Series& s) {
    oracle::Poly p;
    for (const Term& t : s.terms()) p[t.exponent[0]] = t.coefficient;
    return p;
}

oracle::Set as_set(const ElementSet& s) {
    const auto m = s.members();
    return {m.begin(), m.end()};
}

}  // namespace

TEST(Series, NormalizesTerms) {
    Z6 z;
    const Series s = Series::over_ring(z.r, z.n, {{MonoidElement{2}, 3}, {MonoidElement{0}, 0}, {MonoidElement{2}, 3}});
    EXPECT_TRUE(s.is_zero());
    const Series t = Series::over_ring(z.r, z.n, {{MonoidElement{2}, 1}, {MonoidElement{0}, 5}});
    ASSERT_EQ(t.support_size(), 2u);
    EXPECT_EQ(t.terms()[0].exponent, MonoidElement{0});
    EXPECT_EQ(t.coefficient_at(MonoidElement{2}), 1u);
    EXPECT_EQ(t.coefficient_at(MonoidElement{7}), 0u);
    EXPECT_EQ((t - t), Series::over_ring(z.r, z.n, {}));
    EXPECT_EQ(t.to_string(), "5*X^0 + 1*X^2");
}

TEST(Series, RejectsForeignExponents) {
    Z6 z;
    EXPECT_THROW(Series::over_ring(z.r, z.n, {{MonoidElement{-1}, 1}}), ValidationError);
    EXPECT_THROW(Series::over_ring(z.r, z.n, {{MonoidElement{0}, 9}}), ValidationError);
}

TEST(Multiply, KnownValues) {
    Z6 z;
    EXPECT_TRUE(series_multiply(z.f({2, 4}), z.f({3})).is_zero());
    EXPECT_EQ(series_multiply(z.f({1, 1}), z.f({1, 1})), z.f({1, 2, 1}));

    const MonoidPtr sat = build_saturating_monoid(2);
    const Series x2 = Series::monomial_over_ring(z.r, sat, 1, MonoidElement::index(2));
    const Series g = Series::over_module(z.m, sat, {{MonoidElement::index(0), 1}, {MonoidElement::index(1), 5}});
    EXPECT_TRUE(series_multiply(x2, g).is_zero());
}

TEST(Multiply, MatchesConvolutionOracle) {
    Z6 z;
    const auto ar = oracle::zmod(6);
    SupportWindow w{{MonoidElement{0}, MonoidElement{1}, MonoidElement{2}}, std::nullopt};
    const auto fs = window_series(z.r, z.n, w);
    for (std::size_t i = 0; i < fs.size(); i += 7)
        for (std::size_t j = 0; j < fs.size(); j += 5)
            ASSERT_EQ(to_poly(series_multiply(fs[i], fs[j])), oracle::poly_mul(ar, to_poly(fs[i]), to_poly(fs[j])));
}

TEST(Multiply, CyclicGroupWrapsExponents) {
    Z6 z;
    const MonoidPtr c3 = build_cyclic_group(3);
    const Series h = Series::over_ring(z.r, c3, {{MonoidElement::index(0), 1}, {MonoidElement::index(1), 1},
                                                 {MonoidElement::index(2), 1}});
    const Series g = Series::over_module(z.m, c3, {{MonoidElement::index(1), 1}, {MonoidElement::index(0), 5}});
    EXPECT_TRUE(series_multiply(h, g).is_zero());
}

TEST(Multiply, MismatchedMonoidsRejected) {
    Z6 z;
    const Series a = z.f({1});
    const Series b = Series::monomial_over_ring(z.r, build_free_monoid(2), 1, MonoidElement{0, 0});
    EXPECT_THROW(series_multiply(a, b), MismatchError);
    EXPECT_THROW(series_multiply(z.g({1}), z.f({1})), MismatchError);
}

TEST(Content, KnownValues) {
    Z6 z;
    EXPECT_TRUE(content_ideal(z.f({2, 3})).is_unit());
    EXPECT_EQ(content_ideal(z.f({})).size(), 1u);
    EXPECT_EQ(as_set(content_submodule(z.g({0, 2, 0, 4})).members()), (oracle::Set{0, 2, 4}));
    EXPECT_TRUE(std::holds_alternative<Submodule>(content(z.g({1}))));
}

TEST(DedekindMertens, KnownValues) {
    Z6 z;
    const DMResult a = dedekind_mertens_exponent(z.f({2, 2}), z.g({3}));
    EXPECT_EQ(a.k_min, 1u);
    EXPECT_TRUE(a.chain[0].lhs.is_zero());

    const RingPtr t = build_truncated_poly_ring(2, 2, 3);
    const ModulePtr tm = ring_as_module(t);
    const Index a_ = *t->find("a"), b_ = *t->find("b");
    const Series f = Series::over_ring(t, z.n, {{MonoidElement{0}, a_}, {MonoidElement{1}, b_}});
    const Series g = Series::over_module(tm, z.n, {{MonoidElement{0}, a_}, {MonoidElement{1}, b_}});
    const DMResult r = dedekind_mertens_exponent(f, g);
    ASSERT_EQ(r.k_min, 2u);
    ASSERT_EQ(r.chain.size(), 2u);
    EXPECT_FALSE(r.chain[0].equal);
    EXPECT_TRUE(r.chain[0].lhs.contains(*t->find("ab")));
    EXPECT_FALSE(r.chain[0].rhs.contains(*t->find("ab")));
    EXPECT_TRUE(r.chain[1].lhs.is_zero());
    EXPECT_TRUE(r.chain[1].rhs.is_zero());

    // Unit f: both sides are c(g) at k = 1.
    const DMResult u = dedekind_mertens_exponent(Series::monomial_over_ring(t, z.n, 1, MonoidElement{0}), g);
    EXPECT_EQ(u.k_min, 1u);
}

TEST(DedekindMertens, ChainMatchesIdealOracleOnTruncatedRing) {
    const RingPtr t = build_truncated_poly_ring(2, 2, 3);
    const oracle::TruncPoly tp(2, 2, 3);
    const auto ar = tp.arith();
    const ModulePtr tm = ring_as_module(t);
    const MonoidPtr n = build_free_monoid(1);
    SupportWindow w{{MonoidElement{0}, MonoidElement{1}}, std::nullopt};
    const auto fs = window_series(t, n, w);
    std::size_t checked = 0;
    for (std::size_t i = 0; i < fs.size(); i += 97)
        for (std::size_t j = 0; j < fs.size(); j += 89) {
            const Series& f = fs[i];
            const Series g = Series::over_module(tm, n, fs[j].terms());
            const DMResult r = dedekind_mertens_exponent(f, g);
            ASSERT_TRUE(r.k_min);
            EXPECT_LE(*r.k_min, g.support_size() + 1);
            std::vector<oracle::Elem> cf, cg, cfg;
            for (const Term& x : f.terms()) cf.push_back(x.coefficient);
            for (const Term& x : g.terms()) cg.push_back(x.coefficient);
            for (const Term& x : series_multiply(f, g).terms()) cfg.push_back(x.coefficient);
            const oracle::Set icf = oracle::linear_span(ar, cf);
            oracle::Set lhs = oracle::linear_span(ar, cg), rhs = oracle::linear_span(ar, cfg);
            for (const DMStep& s : r.chain) {
                lhs = oracle::ideal_product(ar, icf, lhs);
                if (s.k > 1) rhs = oracle::ideal_product(ar, icf, rhs);
                ASSERT_EQ(as_set(s.lhs.members()), lhs);
                ASSERT_EQ(as_set(s.rhs.members()), rhs);
                EXPECT_EQ(s.equal, lhs == rhs);
                EXPECT_EQ(s.equal, s.k == *r.k_min);
            }
            ++checked;
        }
    EXPECT_GT(checked, 100u);
}

TEST(DedekindMertens, RequiresHypotheses) {
    Z6 z;
    const MonoidPtr c2 = build_cyclic_group(2);
    EXPECT_THROW(dedekind_mertens_exponent(Series::monomial_over_ring(z.r, c2, 1, MonoidElement::index(0)),
                                           Series::monomial_over_module(z.m, c2, 1, MonoidElement::index(0))),
                 HypothesisError);
}

TEST(McCoy, KnownValues) {
    Z6 z;
    EXPECT_EQ(mccoy_witness(z.f({2, 2}), z.g({3})), 3u);
    EXPECT_EQ(mccoy_witness(z.f({3, 3}), z.g({2})), 2u);

    const RingPtr t = build_truncated_poly_ring(2, 2, 3);
    const ModulePtr tm = ring_as_module(t);
    const Index a = *t->find("a"), b = *t->find("b"), ab = *t->find("ab");
    const Series f = Series::over_ring(t, z.n, {{MonoidElement{0}, a}, {MonoidElement{1}, b}});
    const Series g = Series::monomial_over_module(tm, z.n, ab, MonoidElement{0});
    EXPECT_EQ(mccoy_witness(f, g), ab);
}

TEST(McCoy, PreconditionsChecked) {
    Z6 z;
    EXPECT_THROW(mccoy_witness(z.f({1}), z.g({1})), ValidationError);
    EXPECT_THROW(mccoy_witness(z.f({2}), z.g({})), ValidationError);
}

TEST(ZeroDivisorSeries, KnownValues) {
    Z6 z;
    const ZeroDivisorTest a = is_zero_divisor_series(z.f({2, 4}), z.m);
    EXPECT_TRUE(a.zero_divisor);
    EXPECT_EQ(a.witness, 3u);
    EXPECT_FALSE(is_zero_divisor_series(z.f({1, 2}), z.m).zero_divisor);
    EXPECT_TRUE(is_zero_divisor_series(z.f({}), z.m).zero_divisor);

    const RingPtr r4 = build_zmod(4);
    const ZeroDivisorTest c = is_zero_divisor_series(Series::monomial_over_ring(r4, z.n, 2, MonoidElement{0}),
                                                     ring_as_module(r4));
    EXPECT_TRUE(c.zero_divisor);
    EXPECT_EQ(c.witness, 2u);
}

TEST(ZeroDivisorSeries, AgreesWithCoefficientwiseOracle) {
    Z6 z;
    const auto ar = oracle::zmod(6);
    for (const auto& p : oracle::window(ar, 3)) {
        std::vector<Term> t;
        for (auto [e, c] : p) t.push_back({MonoidElement{e}, c});
        const Series f = Series::over_ring(z.r, z.n, t);
        bool expected = false;
        for (oracle::Elem m = 1; m < 6 && !expected; ++m) {
            bool kills = true;
            for (auto [e, c] : p) kills = kills && ar.mul(c, m) == 0;
            expected = kills;
        }
        EXPECT_EQ(is_zero_divisor_series(f, z.m).zero_divisor, expected) << f.to_string();
    }
}

TEST(ExtendedIdeal, Membership) {
    Z6 z;
    const ExtendedIdeal p{ideal_generated(z.r, std::vector<Index>{2}), z.n};
    EXPECT_TRUE(extended_ideal_membership(z.f({2, 4}), p));
    EXPECT_FALSE(extended_ideal_membership(z.f({2, 3}), p));
    EXPECT_TRUE(extended_ideal_membership(z.f({}), p));
}

TEST(Counterexamples, NonCancellative) {
    Z6 z;
    const MonoidPtr sat = build_saturating_monoid(2);
    const CancellationWitness w{MonoidElement::index(2), MonoidElement::index(0), MonoidElement::index(1)};
    const auto ce = build_noncancellative_counterexample(sat, w, z.m, 1);
    EXPECT_EQ(ce.f, Series::monomial_over_ring(z.r, sat, 1, MonoidElement::index(2)));
    EXPECT_EQ(ce.g, Series::over_module(z.m, sat, {{MonoidElement::index(0), 1}, {MonoidElement::index(1), 5}}));
    EXPECT_TRUE(series_multiply(ce.f, ce.g).is_zero());
    for (Index m = 1; m < 6; ++m) EXPECT_FALSE(series_act_on_element(ce.f, z.m, m).is_zero());

    const auto ce3 = build_noncancellative_counterexample(sat, w, z.m, 3);
    EXPECT_EQ(ce3.g, Series::over_module(z.m, sat, {{MonoidElement::index(0), 3}, {MonoidElement::index(1), 3}}));

    const CancellationWitness bad{MonoidElement::index(0), MonoidElement::index(0), MonoidElement::index(1)};
    EXPECT_THROW(build_noncancellative_counterexample(sat, bad, z.m, 1), ValidationError);
}

TEST(Counterexamples, Torsion) {
    Z6 z;
    for (std::size_t k = 2; k <= 4; ++k) {
        const MonoidPtr c = build_cyclic_group(k);
        const auto ce = build_torsion_counterexample(c, MonoidElement::index(1), MonoidElement::index(0), z.m, 1);
        EXPECT_EQ(ce.k, k);
        EXPECT_EQ(ce.h.support_size(), k);
        EXPECT_FALSE(ce.g.is_zero());
        EXPECT_TRUE(series_multiply(ce.h, ce.g).is_zero());
    }
    EXPECT_THROW(build_torsion_counterexample(build_cyclic_group(2), MonoidElement::index(1),
                                              MonoidElement::index(1), z.m, 1),
                 ValidationError);
}

TEST(Window, CardinalityAndOrder) {
    Z6 z;
    SupportWindow w{{MonoidElement{0}, MonoidElement{1}}, std::nullopt};
    const auto fs = window_series(z.r, z.n, w);
    ASSERT_EQ(fs.size(), 36u);
    EXPECT_EQ(window_cardinality(w, 6), 36u);
    EXPECT_TRUE(fs[0].is_zero());
    EXPECT_EQ(fs[1], z.f({0, 1}));
    EXPECT_EQ(fs[6], z.f({1}));

    w.max_support = 1;
    EXPECT_EQ(window_cardinality(w, 6), 11u);
    EXPECT_EQ(window_series(z.r, z.n, w).size(), 11u);

    SupportWindow big{{}, std::nullopt};
    for (int i = 0; i < 40; ++i) big.exponents.push_back(MonoidElement{i});
    EXPECT_EQ(window_cardinality(big, 64), std::numeric_limits<std::uint64_t>::max());

    SupportWindow dup{{MonoidElement{0}, MonoidElement{0}}, std::nullopt};
    EXPECT_THROW(validate_window(dup, *z.n), ValidationError);
}

TEST(Window, Defaults) {
    EXPECT_EQ(default_window(*build_free_monoid(1)).exponents.size(), 3u);
    EXPECT_EQ(default_window(*build_free_monoid(2)).exponents.size(), 6u);
    EXPECT_EQ(default_window(*build_cyclic_group(4)).exponents.size(), 4u);
}
