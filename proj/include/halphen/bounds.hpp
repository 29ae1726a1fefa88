#pragma once

// Genus and section bounds for curves in P^r not lying on hypersurfaces of
// degree <= i.

#include "core_params.hpp"
#include "threshold.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>

namespace halphen {

enum class Regime { classical, beta_zero, g0, r6_sharp, r9_candidates, interval };
enum class Sharpness { sharp, not_known_sharp, candidate_set };

constexpr std::string_view to_string(Regime r)
{
	switch (r) {
	case Regime::classical: return "classical";
	case Regime::beta_zero: return "beta_zero";
	case Regime::g0: return "g0";
	case Regime::r6_sharp: return "r6_sharp";
	case Regime::r9_candidates: return "r9_candidates";
	case Regime::interval: return "interval";
	}
	return "?";
}

constexpr std::string_view to_string(Sharpness s)
{
	switch (s) {
	case Sharpness::sharp: return "sharp";
	case Sharpness::not_known_sharp: return "not_known_sharp";
	case Sharpness::candidate_set: return "candidate_set";
	}
	return "?";
}

struct BoundResult {
	BigInt value;
	Regime regime = Regime::g0;
	Sharpness sharp = Sharpness::not_known_sharp;
	bool valid_for_theorem = true;
	/// Empty when d0 is too large to write out (see kMaxMaterializedS0).
	std::optional<BigInt> threshold_d0;
	bool d0_met = false;
};

struct SectionData {
	BigInt s;
	BigInt pi;
	BigInt j;
	std::int64_t r = 3;
};

template <typename T = BigInt>
struct Range {
	T low;
	T high;
	bool operator==(const Range &) const = default;
};

// ---------------------------------------------------------------------------
// Classical bound

/// Castelnuovo's bound G(r; d) = binom(m1, 2)(r-1) + m1*eps1 with d-1 = m1(r-1) + eps1.
inline BigInt castelnuovo_bound(const BigInt &r, const BigInt &d)
{
	detail::require(r >= 3, "castelnuovo_bound: r must be >= 3");
	detail::require(d >= r, "castelnuovo_bound: d must be >= r for a non-degenerate curve");
	auto [m1, eps1] = divmod_exact(d - 1, r - 1);
	return binomial(m1, 2) * (r - 1) + m1 * eps1;
}

// ---------------------------------------------------------------------------
// G0 and the beta = 0 bound

/// max{0, floor((2c0 - (s0 - 1 - eps)) / 2)}.
inline BigInt g0_max_term(const DerivedParams &p)
{
	BigInt branch = floor_div(2 * p.c0 - (p.s0 - 1 - p.epsilon), 2);
	return sgn(branch) > 0 ? branch : BigInt(0);
}

/// The closed form of G0 from already derived parameters (no validation).
inline BigInt g0_value(const DerivedParams &p)
{
	return binomial(p.m, 2) * p.s0 + p.m * (p.epsilon + p.c0) + binomial(p.gamma + 1, 2) + g0_max_term(p) - p.mu;
}

/// binom(m, 2)*s0 + m*eps (no validation).
inline BigInt beta0_value(const DerivedParams &p) { return binomial(p.m, 2) * p.s0 + p.m * p.epsilon; }

/// False for the r = 4 cases where the low-degree projection inequality fails.
constexpr bool g0_theorem_applies(std::int64_t r, std::int64_t i) { return !(r == 4 && (i < 4 || i == 15)); }

/// Everything a bound needs that depends on (r, i) only. Build once and reuse
/// when evaluating many degrees.
struct BoundContext {
	std::int64_t r = 0;
	std::int64_t i = 0;
	SurfaceParams surface;
	std::optional<BigInt> d0;
};

inline BoundContext bound_context(std::int64_t r, std::int64_t i)
{
	BoundContext ctx{r, i, derive_surface(r, i), std::nullopt};
	ctx.d0 = d0_threshold_if_materializable(r, i);
	return ctx;
}

namespace detail {

inline void attach_threshold(BoundResult &out, const BoundContext &ctx, const BigInt &d)
{
	out.threshold_d0 = ctx.d0;
	out.d0_met = ctx.d0 ? d > *ctx.d0 : d0_exceeded(ctx.r, ctx.i, d);
}

inline void attach_threshold(BoundResult &out, std::int64_t r, std::int64_t i, const BigInt &d)
{
	attach_threshold(out, bound_context(r, i), d);
}

inline DerivedParams require_curve_params(const SurfaceParams &surf, const BigInt &d)
{
	require(d >= surf.s0 + 1, "d must be >= s0 + 1");
	return with_degree(surf, d);
}

inline DerivedParams require_curve_params(std::int64_t r, const BigInt &d, std::int64_t i)
{
	return require_curve_params(derive_surface(r, i), d);
}

inline bool is_r6_sharp_case(std::int64_t r, std::int64_t i, const BigInt &eps)
{
	return r == 6 && i == 2 && (eps == 2 || eps == 5 || eps == 8);
}

} // namespace detail

inline BoundResult g0_bound(const BoundContext &ctx, const BigInt &d)
{
	if (!ctx.surface.beta_positive())
		throw routing_error("g0_bound: beta = 0 for (r, i)", "beta0_bound");
	const DerivedParams p = detail::require_curve_params(ctx.surface, d);

	BoundResult out;
	out.value = g0_value(p);
	out.regime = Regime::g0;
	out.sharp = detail::is_r6_sharp_case(ctx.r, ctx.i, p.epsilon) ? Sharpness::sharp : Sharpness::not_known_sharp;
	out.valid_for_theorem = g0_theorem_applies(ctx.r, ctx.i);
	detail::attach_threshold(out, ctx, d);
	return out;
}

inline BoundResult g0_bound(std::int64_t r, const BigInt &d, std::int64_t i) { return g0_bound(bound_context(r, i), d); }

inline BoundResult beta0_bound(const BoundContext &ctx, const BigInt &d)
{
	if (ctx.surface.beta_positive())
		throw routing_error("beta0_bound: beta > 0 for (r, i)", "g0_bound");
	const DerivedParams p = detail::require_curve_params(ctx.surface, d);

	BoundResult out;
	out.value = beta0_value(p);
	if (out.value != castelnuovo_bound(p.s0 + 1, d))
		throw std::logic_error("beta0_bound: value differs from the Castelnuovo bound in P^(s0+1)");
	out.regime = Regime::beta_zero;
	// Extremal curves are known for r = 4, i = 2 and for r >= 5, 2 <= i <= 3.
	const bool known = ctx.i == 2 || (ctx.r >= 5 && ctx.i <= 3);
	out.sharp = known ? Sharpness::sharp : Sharpness::not_known_sharp;
	out.valid_for_theorem = ctx.r >= 5;
	detail::attach_threshold(out, ctx, d);
	return out;
}

inline BoundResult beta0_bound(std::int64_t r, const BigInt &d, std::int64_t i)
{
	return beta0_bound(bound_context(r, i), d);
}

// ---------------------------------------------------------------------------
// Section counts

/// Upper bound on h^0(O_Sigma(j)) for an integral curve of degree s and genus pi.
inline BigInt clifford_h0_upper(const SectionData &sec)
{
	detail::require(sec.s >= 1, "clifford_h0_upper: s must be >= 1");
	detail::require(sec.j >= 1, "clifford_h0_upper: j must be >= 1");
	detail::require(sgn(sec.pi) >= 0, "clifford_h0_upper: pi must be >= 0");
	const BigInt js = sec.j * sec.s;
	const BigInt half = ceil_div(js, 2);
	return 1 + js - (sec.pi < half ? sec.pi : half);
}

/// c(j) = min{pi, ceil(j*s/2)}.
inline BigInt clifford_defect(const BigInt &s, const BigInt &pi, const BigInt &j)
{
	const BigInt half = ceil_div(j * s, 2);
	return pi < half ? pi : half;
}

/// Lower bound on h^0(I_S(i)) for a surface of degree s and sectional genus pi.
/// May be negative.
inline BigInt surface_sections_lower(std::int64_t r, const BigInt &s, const BigInt &pi, std::int64_t i)
{
	detail::require(r >= 2, "surface_sections_lower: r must be >= 2");
	detail::require(s >= 1, "surface_sections_lower: s must be >= 1");
	detail::require(sgn(pi) >= 0, "surface_sections_lower: pi must be >= 0");
	detail::require(i >= 1, "surface_sections_lower: i must be >= 1");
	BigInt out = binomial(r + i, i) - ((i + 1) + binomial(i + 1, 2) * s);
	for (std::int64_t j = 1; j <= i; ++j)
		out += clifford_defect(s, pi, BigInt(j));
	return out;
}

/// Admissible range of h^0(O_S(1)) for a degree-s0 surface of sectional genus pi
/// not on hypersurfaces of degree <= i.
inline Range<> projection_range(std::int64_t r, std::int64_t i, const BigInt &pi)
{
	const SurfaceParams surf = derive_surface(r, i);
	if (!surf.beta_positive())
		throw validation_error("projection_range: requires beta > 0");
	detail::require(sgn(pi) >= 0, "projection_range: pi must be >= 0");
	detail::require(pi <= surf.c0, "projection_range: pi must be <= c0");
	const BigInt high = surf.s0 - pi + 2;
	return {high - i * (surf.c0 - pi) - surf.gamma, high};
}

// ---------------------------------------------------------------------------
// Quadric case (i = 2, 3 | r)

namespace detail {

inline void require_quadric_r(std::int64_t r, std::int64_t r_min, const char *msg)
{
	require(r >= r_min && r % 3 == 0, msg);
}

} // namespace detail

/// Sharp value of G(6; d, 2) for 3 | d: binom(d/3 - 1, 2).
inline BoundResult g_sharp_r6(const BigInt &d)
{
	const SurfaceParams surf = derive_surface(6, 2);
	detail::require(d >= surf.s0 + 1, "g_sharp_r6: d must be >= s0 + 1 = 10");
	if (sgn(BigInt(d % 3)) != 0)
		throw routing_error("g_sharp_r6: d is not divisible by 3", "g_interval");
	const DerivedParams p = with_degree(surf, d);

	BoundResult out;
	out.value = binomial(BigInt(d / 3 - 1), 2);
	const BigInt nu = p.epsilon == 8 ? 1 : 0;
	if (out.value != 9 * binomial(p.m, 2) + p.m * (p.epsilon + 1) + nu || out.value != g0_value(p))
		throw std::logic_error("g_sharp_r6: closed forms disagree");
	out.regime = Regime::r6_sharp;
	out.sharp = Sharpness::sharp;
	out.valid_for_theorem = true;
	detail::attach_threshold(out, 6, 2, d);
	return out;
}

/// The four admissible values of G(r; d, 2) when eps = s0 - 1, ascending.
inline std::array<BigInt, 4> g_candidates_r9(std::int64_t r, const BigInt &d)
{
	detail::require_quadric_r(r, 9, "g_candidates_r9: r must be >= 9 and divisible by 3");
	const DerivedParams p = detail::require_curve_params(r, d, 2);
	if (p.epsilon != p.s0 - 1)
		throw routing_error("g_candidates_r9: eps != s0 - 1", "g_interval");
	const BigInt g0 = g0_value(p);
	return {g0 - p.m - 1, g0 - p.m, g0 - p.m + 1, g0};
}

/// G0 - m <= G(r; d, 2) <= G0 for 0 <= eps < s0 - 1.
inline Range<> g_interval(std::int64_t r, const BigInt &d)
{
	detail::require_quadric_r(r, 6, "g_interval: r must be >= 6 and divisible by 3");
	const DerivedParams p = detail::require_curve_params(r, d, 2);
	if (p.epsilon == p.s0 - 1)
		throw routing_error("g_interval: eps = s0 - 1", r == 6 ? "g_sharp_r6" : "g_candidates_r9");
	const BigInt g0 = g0_value(p);
	return {g0 - p.m, g0};
}

/// Leading coefficient of d^2 in G0: 1/(2 s0).
inline Rational asymptotic_coefficient(std::int64_t r, std::int64_t i)
{
	const SurfaceParams surf = derive_surface(r, i);
	Rational out(BigInt(1), 2 * surf.s0);
	out.canonicalize();
	if (i == 2) {
		Rational expected = r % 3 == 0 ? Rational(BigInt(3), BigInt(r) * (r + 3))
		                               : Rational(BigInt(3), BigInt(r - 1) * (r + 4));
		expected.canonicalize();
		if (out != expected)
			throw std::logic_error("asymptotic_coefficient: quadric closed form mismatch");
	}
	return out;
}

} // namespace halphen
