#include "oracle.hpp"

#include <halphen/bounds.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace halphen;

TEST(Castelnuovo, Examples)
{
	EXPECT_EQ(castelnuovo_bound(3, 3), 0);
	EXPECT_EQ(castelnuovo_bound(3, 4), 1);
	EXPECT_EQ(oracle::castelnuovo_sum(3, 4), 1);
	// 26 = 2*9 + 8: binom(2,2)*9 + 2*8
	EXPECT_EQ(oracle::castelnuovo_sum(10, 27), 25);
	EXPECT_EQ(castelnuovo_bound(10, 27), 25);
}

TEST(Castelnuovo, Errors)
{
	EXPECT_THROW(castelnuovo_bound(2, 5), validation_error);
	EXPECT_THROW(castelnuovo_bound(5, 4), validation_error);
}

TEST(Castelnuovo, MatchesSumOracle)
{
	for (std::int64_t r = 3; r <= 40; ++r)
		for (std::int64_t d = r; d <= 600; ++d)
			ASSERT_EQ(castelnuovo_bound(r, d), oracle::castelnuovo_sum(r, d)) << r << "," << d;
}

TEST(G0, SextupleQuadricDegree27)
{
	const auto b = g0_bound(6, 27, 2);
	EXPECT_EQ(b.value, 28);
	EXPECT_EQ(b.regime, Regime::g0);
	EXPECT_EQ(b.sharp, Sharpness::sharp); // eps = 8
	EXPECT_TRUE(b.valid_for_theorem);
	ASSERT_TRUE(b.threshold_d0.has_value());
	EXPECT_EQ(*b.threshold_d0, d0_threshold(6, 2));
	EXPECT_FALSE(b.d0_met);
}

TEST(G0, SextupleQuadricDegree28)
{
	// m = 3, eps = 0, max-term branch (2 - 8)/2 < 0
	const auto b = g0_bound(6, 28, 2);
	EXPECT_EQ(b.value, 30);
	EXPECT_EQ(oracle::g0_summands(oracle::small_params(6, 2), 28), 30);
	EXPECT_EQ(b.sharp, Sharpness::not_known_sharp);
}

TEST(G0, FourSpaceExceptionsFlagged)
{
	const auto b = g0_bound(4, 100, 3);
	EXPECT_EQ(b.value, oracle::g0_summands(oracle::small_params(4, 3), 100));
	EXPECT_EQ(b.value, 786);
	EXPECT_FALSE(b.valid_for_theorem);
	EXPECT_FALSE(g0_bound(4, 100, 15).valid_for_theorem);
	EXPECT_TRUE(g0_bound(4, 100, 4).valid_for_theorem);
	EXPECT_TRUE(g0_bound(5, 100, 3).valid_for_theorem);
}

TEST(G0, Routing)
{
	try {
		g0_bound(4, 13, 2);
		FAIL();
	} catch (const routing_error &e) {
		EXPECT_EQ(e.target(), "beta0_bound");
	}
	EXPECT_THROW(g0_bound(6, 9, 2), validation_error);
	EXPECT_NO_THROW(g0_bound(6, 10, 2));
}

TEST(G0, MatchesSummandOracle)
{
	for (int r = 4; r <= 14; ++r) {
		for (int i = 2; i <= 8; ++i) {
			const auto p = oracle::small_params(r, i);
			if (p.beta == 0 || p.s0 > 400)
				continue;
			const SurfaceParams surf = derive_surface(r, i);
			for (std::int64_t d = p.s0 + 1; d <= 3000; ++d)
				ASSERT_EQ(g0_value(with_degree(surf, d)), oracle::g0_summands(p, d)) << r << "," << i << "," << d;
		}
	}
}

TEST(Beta0, FourSpaceQuadric)
{
	// s0 = 4, 12 = 3*4 + 0
	const auto b = beta0_bound(4, 13, 2);
	EXPECT_EQ(b.value, 12);
	EXPECT_EQ(castelnuovo_bound(5, 13), 12);
	EXPECT_EQ(oracle::castelnuovo_sum(5, 13), 12);
	EXPECT_EQ(b.regime, Regime::beta_zero);
	EXPECT_FALSE(b.valid_for_theorem);
}

TEST(Beta0, FirstDegree)
{
	const BigInt s0 = derive_surface(5, 2).s0;
	const auto b = beta0_bound(5, s0 + 1, 2);
	EXPECT_EQ(b.value, 0);
	EXPECT_EQ(b.sharp, Sharpness::sharp);
	EXPECT_TRUE(b.valid_for_theorem);
}

TEST(Beta0, SharpnessFlag)
{
	EXPECT_EQ(beta0_bound(4, 13, 2).sharp, Sharpness::sharp);
	EXPECT_EQ(beta0_bound(9, 100, 3).sharp, Sharpness::sharp); // s0 = 36
	EXPECT_EQ(beta0_bound(4, 200, 5).sharp, Sharpness::not_known_sharp);
}

TEST(Beta0, Routing)
{
	try {
		beta0_bound(6, 27, 2);
		FAIL();
	} catch (const routing_error &e) {
		EXPECT_EQ(e.target(), "g0_bound");
	}
}

// beta0_bound(r, d, i) = G(s0 + 1; d) over the beta = 0 grid.
TEST(Beta0Property, EqualsCastelnuovoInHigherSpace)
{
	int cells = 0;
	for (std::int64_t r = 5; r <= 60; ++r) {
		for (std::int64_t i = 2; i <= 20; ++i) {
			const auto ctx = bound_context(r, i);
			const SurfaceParams &surf = ctx.surface;
			if (surf.beta_positive() || surf.s0 > 2000)
				continue;
			++cells;
			for (BigInt d = surf.s0 + 2; d <= surf.s0 + 2 + 3 * surf.s0; ++d)
				ASSERT_EQ(beta0_bound(ctx, d).value, castelnuovo_bound(surf.s0 + 1, d));
		}
	}
	EXPECT_GT(cells, 10);
}

TEST(Clifford, Examples)
{
	EXPECT_EQ(clifford_h0_upper({9, 1, 1, 6}), 9);
	EXPECT_EQ(clifford_h0_upper({4, 0, 3, 4}), 13);
	EXPECT_EQ(clifford_h0_upper({2, 5, 1, 4}), 2);
	EXPECT_THROW(clifford_h0_upper({0, 0, 1, 4}), validation_error);
	EXPECT_THROW(clifford_h0_upper({3, 0, 0, 4}), validation_error);
}

TEST(CliffordProperty, RationalSectionsAreNonSpecial)
{
	for (int s = 1; s <= 40; ++s)
		for (int j = 1; j <= 10; ++j)
			ASSERT_EQ(clifford_h0_upper({s, 0, j, 4}), 1 + j * s);
}

TEST(SectionsLower, Examples)
{
	// 15 - (3 + 3*3) + 0
	EXPECT_EQ(surface_sections_lower(4, 3, 0, 2), 3);
	for (std::int64_t i = 2; i <= 12; ++i) {
		const SurfaceParams s = derive_surface(4, i);
		if (!s.beta_positive())
			continue;
		const BigInt v = surface_sections_lower(4, s.s0, 0, i);
		EXPECT_EQ(v, s.beta - binomial(i + 1, 2));
		EXPECT_LT(v, 0);
		EXPECT_GT(surface_sections_lower(4, s.s0 - 1, 0, i), 0);
	}
}

TEST(SectionsLower, MatchesHandSum)
{
	// r=6, s=9, pi=3, i=3: binom(9,3) - (4 + 6*9) + min(3,5) + min(3,9) + min(3,14)
	EXPECT_EQ(surface_sections_lower(6, 9, 3, 3), 84 - 58 + 9);
}

// At s = s0, pi = c0 + 1 the lower bound is i - gamma > 0.
TEST(SectionsLowerProperty, OneAboveMaximalGenus)
{
	for (std::int64_t r = 4; r <= 40; ++r) {
		for (std::int64_t i = 2; i <= 20; ++i) {
			const SurfaceParams s = derive_surface(r, i);
			if (!s.beta_positive())
				continue;
			const BigInt v = surface_sections_lower(r, s.s0, s.c0 + 1, i);
			ASSERT_EQ(v, i - s.gamma) << r << "," << i;
			ASSERT_GT(v, 0);
		}
	}
}

TEST(ProjectionRange, Examples)
{
	// s0 = 9, c0 = 1, gamma = 0: both ends s0 - pi + 2
	EXPECT_EQ(projection_range(6, 2, 1), (Range<>{10, 10}));
	EXPECT_EQ(projection_range(6, 2, 0), (Range<>{9, 11}));
	// s0 = 7, c0 = 1, gamma = 1
	EXPECT_EQ(projection_range(4, 4, 1), (Range<>{7, 8}));
	EXPECT_THROW(projection_range(6, 2, 2), validation_error);
	EXPECT_THROW(projection_range(4, 2, 0), validation_error);
}

TEST(ProjectionRangeProperty, DegenerateWhenGammaZero)
{
	for (std::int64_t r = 4; r <= 30; ++r) {
		for (std::int64_t i = 2; i <= 15; ++i) {
			const SurfaceParams s = derive_surface(r, i);
			if (!s.beta_positive())
				continue;
			const auto range = projection_range(r, i, s.c0);
			EXPECT_EQ(range.high - range.low, s.gamma);
			EXPECT_EQ(range.high, s.s0 - s.c0 + 2);
		}
	}
}

TEST(SharpR6, Examples)
{
	const auto b27 = g_sharp_r6(27);
	EXPECT_EQ(b27.value, 28);
	EXPECT_EQ(b27.regime, Regime::r6_sharp);
	EXPECT_EQ(b27.sharp, Sharpness::sharp);
	EXPECT_EQ(g_sharp_r6(21).value, 15);
	EXPECT_EQ(g_sharp_r6(12).value, 3);
}

TEST(SharpR6, Routing)
{
	try {
		g_sharp_r6(28);
		FAIL();
	} catch (const routing_error &e) {
		EXPECT_EQ(e.target(), "g_interval");
	}
	EXPECT_THROW(g_sharp_r6(9), validation_error);
}

TEST(SharpR6Property, PlaneCurveGenusEqualsG0)
{
	const auto p = oracle::small_params(6, 2);
	for (std::int64_t d = 21; d <= 100000; d += 3) {
		const std::int64_t e = d / 3 - 1;
		const std::int64_t plane = e * (e - 1) / 2;
		const auto b = g_sharp_r6(d);
		ASSERT_EQ(b.value, plane);
		ASSERT_EQ(b.value, g0_bound(6, d, 2).value);
		if (d <= 3000) {
			ASSERT_EQ(plane, oracle::g0_summands(p, d));
		}
		const std::int64_t m = (d - 1) / 9, eps = (d - 1) % 9;
		ASSERT_EQ(plane, 9 * m * (m - 1) / 2 + m * (eps + 1) + (eps == 8 ? 1 : 0));
		ASSERT_TRUE(eps == 2 || eps == 5 || eps == 8);
	}
	EXPECT_TRUE(g_sharp_r6(100000 - 1).d0_met == false);
}

TEST(CandidatesR9, Degree198)
{
	// d - 1 = 197 = 10*18 + 17, G0 = 991
	const auto c = g_candidates_r9(9, 198);
	EXPECT_EQ(oracle::g0_summands(oracle::small_params(9, 2), 198), 991);
	EXPECT_EQ(c[0], 980);
	EXPECT_EQ(c[1], 981);
	EXPECT_EQ(c[2], 982);
	EXPECT_EQ(c[3], 991);
}

TEST(CandidatesR9, StructureAndRouting)
{
	for (std::int64_t r : {9, 12, 15, 18}) {
		const BigInt s0 = s0_quadric(r);
		for (std::int64_t m = 1; m <= 20; ++m) {
			const BigInt d = m * s0 + (s0 - 1) + 1;
			const auto c = g_candidates_r9(r, d);
			const BigInt g0 = g0_bound(r, d, 2).value;
			EXPECT_EQ(c[3], g0);
			EXPECT_EQ(c[1] - c[0], 1);
			EXPECT_EQ(c[2] - c[1], 1);
			EXPECT_EQ(c[3] - c[2], m - 1);
			EXPECT_EQ(c[3] - c[0], m + 1);
		}
	}
	EXPECT_THROW(g_candidates_r9(9, 200), routing_error);
	EXPECT_THROW(g_candidates_r9(6, 27), validation_error);
	EXPECT_THROW(g_candidates_r9(10, 200), validation_error);
}

TEST(Interval, Examples)
{
	EXPECT_EQ(g_interval(6, 28), (Range<>{27, 30}));
	try {
		g_interval(6, 27);
		FAIL();
	} catch (const routing_error &e) {
		EXPECT_EQ(e.target(), "g_sharp_r6");
	}
	try {
		g_interval(9, 198);
		FAIL();
	} catch (const routing_error &e) {
		EXPECT_EQ(e.target(), "g_candidates_r9");
	}
	EXPECT_THROW(g_interval(7, 100), validation_error);
}

TEST(IntervalProperty, WidthIsM)
{
	for (std::int64_t r : {6, 9, 12}) {
		const BigInt s0 = s0_quadric(r);
		for (BigInt d = s0 + 1; d <= 40 * s0; ++d) {
			const DerivedParams p = derive({r, d, 2});
			if (p.epsilon == p.s0 - 1)
				continue;
			const auto range = g_interval(r, d);
			ASSERT_EQ(range.high - range.low, p.m);
		}
	}
}

TEST(Asymptotic, Examples)
{
	EXPECT_EQ(asymptotic_coefficient(6, 2), Rational(1, 18));
	EXPECT_EQ(asymptotic_coefficient(4, 2), Rational(1, 8));
	EXPECT_EQ(asymptotic_coefficient(9, 2), Rational(1, 36));
	for (std::int64_t r = 4; r <= 200; ++r)
		EXPECT_NO_THROW(asymptotic_coefficient(r, 2)) << r;
	EXPECT_EQ(asymptotic_coefficient(4, 4), Rational(1, 14));
}

// max{0, floor((2c0 - (s0-1-eps))/2)} against the larger of the two branches
// computed by stepping.
TEST(G0Property, MaxBranch)
{
	for (std::int64_t r = 4; r <= 20; ++r) {
		for (std::int64_t i = 2; i <= 10; ++i) {
			const SurfaceParams s = derive_surface(r, i);
			if (!s.beta_positive() || s.s0 > 5000)
				continue;
			for (BigInt eps = 0; eps < s.s0; ++eps) {
				DerivedParams p = with_degree(s, s.s0 + 1 + eps);
				ASSERT_EQ(p.epsilon, eps);
				const std::int64_t x = BigInt(2 * s.c0 - (s.s0 - 1 - eps)).get_si();
				ASSERT_EQ(g0_max_term(p), std::max<std::int64_t>(0, oracle::floor_half(x)));
			}
		}
	}
}

TEST(G0Property, NonDecreasingInDegree)
{
	for (std::int64_t r = 4; r <= 12; ++r) {
		for (std::int64_t i = 2; i <= 8; ++i) {
			const SurfaceParams s = derive_surface(r, i);
			if (!s.beta_positive() || s.s0 > 2000)
				continue;
			BigInt prev = g0_value(with_degree(s, s.s0 + 1));
			ASSERT_GE(prev, 0);
			for (BigInt d = s.s0 + 2; d <= 10000; ++d) {
				const BigInt cur = g0_value(with_degree(s, d));
				ASSERT_GE(cur, prev) << r << "," << i << "," << d;
				prev = cur;
			}
		}
	}
}

TEST(G0Property, RandomInstancesMatchOracle)
{
	std::mt19937_64 rng(20261015);
	std::uniform_int_distribution<int> rdist(4, 25), idist(2, 9);
	int checked = 0;
	while (checked < 2000) {
		const int r = rdist(rng), i = idist(rng);
		const auto p = oracle::small_params(r, i);
		if (p.beta == 0 || p.s0 > 10000)
			continue;
		std::uniform_int_distribution<std::int64_t> ddist(p.s0 + 1, 40 * p.s0);
		const std::int64_t d = ddist(rng);
		ASSERT_EQ(g0_bound(r, d, i).value, oracle::g0_summands(p, d)) << r << "," << i << "," << d;
		++checked;
	}
}
