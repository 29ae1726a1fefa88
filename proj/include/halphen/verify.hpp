#pragma once

// Exhaustive numeric checks of the inequalities, identities and case tables
// behind the bounds. Each suite returns a VerificationReport.

#include "bounds.hpp"
#include "core_params.hpp"
#include "json_util.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace halphen {

struct CaseRecord {
	std::vector<std::pair<std::string, BigInt>> inputs;
	std::string expected;
	std::string got;
	BigInt margin;

	bool operator==(const CaseRecord &) const = default;
};

struct VerificationReport {
	std::string suite;
	std::uint64_t cases_total = 0;
	std::vector<CaseRecord> failures;
	/// Cases where a non-strict inequality holds with margin exactly 0.
	std::vector<CaseRecord> witnesses;

	std::uint64_t cases_failed() const { return failures.size(); }
	bool passed() const { return failures.empty(); }

	bool operator==(const VerificationReport &) const = default;
};

struct AppendixCase {
	std::int64_t r = 4;
	std::int64_t i = 2;
	BigInt s0;
	BigInt c0;
	BigInt gamma;
	/// s0 - 2(c0 + gamma + 1)
	BigInt value;
	/// binom(r+i, i) - (i+1)(i^2+2i+2)/2 + i*beta - gamma(i+1)(i-1); equals binom(i+1, 2) * value.
	BigInt general_form;

	bool operator==(const AppendixCase &) const = default;
};

namespace detail {

using Inputs = std::vector<std::pair<std::string, BigInt>>;

class ReportBuilder {
public:
	explicit ReportBuilder(std::string suite) { report_.suite = std::move(suite); }

	/// Records an inequality `margin >= 0` (or `> 0` when strict).
	void inequality(Inputs inputs, std::string expected, std::string got, const BigInt &margin, bool strict)
	{
		++report_.cases_total;
		const bool ok = strict ? sgn(margin) > 0 : sgn(margin) >= 0;
		if (!ok)
			report_.failures.push_back({std::move(inputs), std::move(expected), std::move(got), margin});
		else if (!strict && sgn(margin) == 0)
			report_.witnesses.push_back({std::move(inputs), std::move(expected), std::move(got), margin});
	}

	void equality(Inputs inputs, std::string expected, const BigInt &want, const BigInt &got)
	{
		++report_.cases_total;
		if (want != got)
			report_.failures.push_back({std::move(inputs), std::move(expected) + " = " + want.get_str(), got.get_str(),
			                            BigInt(got - want)});
	}

	void merge(VerificationReport other)
	{
		report_.cases_total += other.cases_total;
		std::move(other.failures.begin(), other.failures.end(), std::back_inserter(report_.failures));
		std::move(other.witnesses.begin(), other.witnesses.end(), std::back_inserter(report_.witnesses));
	}

	VerificationReport finish() &&
	{
		auto by_inputs = [](const CaseRecord &a, const CaseRecord &b) { return a.inputs < b.inputs; };
		std::stable_sort(report_.failures.begin(), report_.failures.end(), by_inputs);
		std::stable_sort(report_.witnesses.begin(), report_.witnesses.end(), by_inputs);
		return std::move(report_);
	}

private:
	VerificationReport report_;
};

inline Inputs ri(std::int64_t r, std::int64_t i) { return {{"r", BigInt(r)}, {"i", BigInt(i)}}; }

} // namespace detail

// ---------------------------------------------------------------------------
// Polynomials from the r >= 5 and r = 4 reductions

/// p(i) = i^4 + 14i^3 - 109i^2 + 274i - 120
inline BigInt poly_p(const BigInt &i) { return (((i + 14) * i - 109) * i + 274) * i - 120; }

/// q(i) = i^4 - 26i^3 + 23i^2 + 50i - 24
inline BigInt poly_q(const BigInt &i) { return (((i - 26) * i + 23) * i + 50) * i - 24; }

// ---------------------------------------------------------------------------
// Appendix inequality s0 <= 2R - 4

inline AppendixCase verify_appendix_inequality(std::int64_t r, std::int64_t i)
{
	const SurfaceParams surf = derive_surface(r, i);
	if (!surf.beta_positive())
		throw validation_error("verify_appendix_inequality: requires beta > 0");

	AppendixCase out{r, i, surf.s0, surf.c0, surf.gamma, surf.s0 - 2 * (surf.c0 + surf.gamma + 1), 0};
	const BigInt bi(i);
	out.general_form = binomial(r + i, i) - (bi + 1) * (bi * bi + 2 * bi + 2) / 2 + bi * surf.beta -
	                   surf.gamma * (bi + 1) * (bi - 1);
	if ((sgn(out.general_form) >= 0) != (sgn(out.value) >= 0))
		throw std::logic_error("verify_appendix_inequality: equivalent forms disagree in sign");
	return out;
}

/// r = 4 degrees with beta > 0 and i <= 25.
inline constexpr std::array<std::int64_t, 16> kAppendixR4Degrees{3, 4, 6, 7, 8, 9, 11, 12, 15, 16, 18, 19, 20, 21, 23, 24};

/// Values of s0 - 2(c0 + gamma + 1) as printed for those degrees.
inline constexpr std::array<std::int64_t, 16> kAppendixR4Printed{-2, 1, 4, 6, 4, 0, 13, 2, -1, 18, 29, 35, 29, 19, 50, 27};

inline std::vector<AppendixCase> appendix_r4_table()
{
	std::vector<AppendixCase> out;
	out.reserve(kAppendixR4Degrees.size());
	for (auto i : kAppendixR4Degrees)
		out.push_back(verify_appendix_inequality(4, i));
	return out;
}

// ---------------------------------------------------------------------------
// Suites

/// 2c0 < s0 for every beta > 0 grid point, plus the chain used to prove it.
inline VerificationReport verify_stima_numeric(std::int64_t r_max, std::int64_t i_max)
{
	detail::require(r_max >= 4, "verify_stima_numeric: r_max must be >= 4");
	detail::require(i_max >= 2, "verify_stima_numeric: i_max must be >= 2");
	detail::ReportBuilder b("stima");

	for (std::int64_t i = 2; i <= i_max; ++i) {
		const BigInt bi(i);
		const BigInt tri = binomial(i + 1, 2);
		const BigInt lhs = bi * tri + (bi + 1) + tri;
		const BigInt rhs = binomial(4 + i, i);
		b.inequality({{"i", bi}}, "i*T + (i+1) + T < binom(4+i, i)", lhs.get_str() + " vs " + rhs.get_str(),
		             rhs - lhs, true);

		const BigInt cubic_lhs = 12 * bi * bi + 12 * bi + 24;
		const BigInt cubic_rhs = (4 + bi) * (3 + bi) * (2 + bi);
		b.inequality({{"i", bi}}, "12i^2 + 12i + 24 < (4+i)(3+i)(2+i)",
		             cubic_lhs.get_str() + " vs " + cubic_rhs.get_str(), cubic_rhs - cubic_lhs, true);
	}

	for (std::int64_t r = 4; r <= r_max; ++r) {
		for (std::int64_t i = 2; i <= i_max; ++i) {
			const SurfaceParams p = derive_surface(r, i);
			if (!p.beta_positive())
				continue;
			const std::string got = "c0=" + p.c0.get_str() + ", s0=" + p.s0.get_str();
			b.inequality(detail::ri(r, i), "2*c0 <= i+1", got, BigInt(i + 1 - 2 * p.c0), false);
			b.inequality(detail::ri(r, i), "2*c0 < s0", got, BigInt(p.s0 - 2 * p.c0), true);
		}
	}
	return std::move(b).finish();
}

/// s0 - 2(c0+gamma+1) >= 0 for r >= 5, and the p(i) >= 0 sufficiency.
inline VerificationReport verify_r5_appendix_poly(std::int64_t i_max, std::int64_t r_max = 60)
{
	detail::require(i_max >= 2, "verify_r5_appendix_poly: i_max must be >= 2");
	detail::ReportBuilder b("appendix-r5");

	constexpr std::array<std::int64_t, 6> printed_p{120, 180, 384, 900, 1920, 3660};
	for (std::int64_t i = 2; i <= 7; ++i)
		b.equality({{"i", BigInt(i)}}, "p(i)", BigInt(printed_p[static_cast<std::size_t>(i - 2)]), poly_p(BigInt(i)));

	for (std::int64_t i = 2; i <= i_max; ++i) {
		const BigInt v = poly_p(BigInt(i));
		b.inequality({{"i", BigInt(i)}}, "p(i) >= 0", v.get_str(), v, false);
	}

	for (std::int64_t r = 5; r <= r_max; ++r) {
		for (std::int64_t i = 2; i <= i_max; ++i) {
			if (!derive_surface(r, i).beta_positive())
				continue;
			const AppendixCase c = verify_appendix_inequality(r, i);
			b.inequality(detail::ri(r, i), "s0 - 2(c0+gamma+1) >= 0", c.value.get_str(), c.value, false);
			b.equality(detail::ri(r, i), "binom(i+1,2) * (s0 - 2(c0+gamma+1))", BigInt(binomial(i + 1, 2) * c.value),
			           c.general_form);
		}
	}
	return std::move(b).finish();
}

/// The printed r = 4 table, q(i) >= 0 for 26 <= i <= q_max, and the direct
/// inequality for r = 4, i >= 4, i != 15.
inline VerificationReport verify_r4_appendix(std::int64_t i_max = 30, std::int64_t q_max = 200)
{
	detail::ReportBuilder b("appendix-r4");

	const auto table = appendix_r4_table();
	for (std::size_t k = 0; k < table.size(); ++k)
		b.equality(detail::ri(4, table[k].i), "printed s0 - 2(c0+gamma+1)", BigInt(kAppendixR4Printed[k]),
		           table[k].value);

	for (std::int64_t i = 26; i <= q_max; ++i) {
		const BigInt v = poly_q(BigInt(i));
		b.inequality({{"i", BigInt(i)}}, "q(i) >= 0", v.get_str(), v, false);
	}

	for (std::int64_t i = 4; i <= i_max; ++i) {
		if (i == 15 || !derive_surface(4, i).beta_positive())
			continue;
		const AppendixCase c = verify_appendix_inequality(4, i);
		b.inequality(detail::ri(4, i), "s0 - 2(c0+gamma+1) >= 0", c.value.get_str(), c.value, false);
	}
	return std::move(b).finish();
}

/// Everything behind s0 <= 2R - 4.
inline VerificationReport verify_appendix_suite(std::int64_t r_max = 60, std::int64_t i_max = 30)
{
	detail::ReportBuilder b("appendix");
	b.merge(verify_r4_appendix(i_max));
	b.merge(verify_r5_appendix_poly(i_max, r_max));

	// p - q = 40i^3 - 132i^2 + 224i - 96
	for (std::int64_t i = 0; i <= 4; ++i) {
		const BigInt bi(i);
		b.equality({{"i", bi}}, "40i^3 - 132i^2 + 224i - 96", ((40 * bi - 132) * bi + 224) * bi - 96,
		           poly_p(bi) - poly_q(bi));
	}
	return std::move(b).finish();
}

/// binom(d/3-1, 2) = d^2/18 - d/2 + 1 = 9 binom(m,2) + m(eps+1) + nu = G0(6; d, 2) for 3 | d.
inline VerificationReport verify_r6_sharpness_identity(std::int64_t d_max)
{
	detail::require(d_max >= 21, "verify_r6_sharpness_identity: d_max must be >= 21");
	detail::ReportBuilder b("r6");
	const SurfaceParams surf = derive_surface(6, 2);

	for (std::int64_t d = 21; d <= d_max; d += 3) {
		const BigInt bd(d);
		const DerivedParams p = with_degree(surf, bd);
		const BigInt plane = binomial(BigInt(d / 3 - 1), 2);

		// d^2/18 - d/2 + 1 = (d^2 - 9d + 18)/18, exact only when 18 divides the numerator.
		const auto [quadratic, rem] = divmod_exact(bd * bd - 9 * bd + 18, BigInt(18));
		const BigInt nu = p.epsilon == 8 ? 1 : 0;
		const BigInt item4 = 9 * binomial(p.m, 2) + p.m * (p.epsilon + 1) + nu;
		const BigInt g0 = g0_value(p);

		detail::Inputs in{{"d", bd}};
		b.equality(in, "remainder of (d^2 - 9d + 18)/18", BigInt(0), rem);
		b.equality(in, "d^2/18 - d/2 + 1", plane, quadratic);
		b.equality(in, "9 binom(m,2) + m(eps+1) + nu", plane, item4);
		b.equality(in, "G0(6; d, 2)", plane, g0);
	}
	return std::move(b).finish();
}

namespace detail {

/// sigma values checked below s0: all of them when few, else both ends.
/// The lower bound is affine and decreasing in sigma at pi = 0, so the
/// upper end decides positivity.
inline constexpr std::int64_t kSigmaExhaustiveLimit = 512;
inline constexpr std::int64_t kSigmaEndSample = 64;

} // namespace detail

inline VerificationReport verify_remark_r1(std::int64_t r_max, std::int64_t i_max)
{
	detail::require(r_max >= 4, "verify_remark_r1: r_max must be >= 4");
	detail::require(i_max >= 2, "verify_remark_r1: i_max must be >= 2");
	detail::ReportBuilder b("remark-r1");

	for (std::int64_t r = 4; r <= r_max; ++r) {
		for (std::int64_t i = 2; i <= i_max; ++i) {
			const SurfaceParams p = derive_surface(r, i);
			const BigInt at_s0 = surface_sections_lower(r, p.s0, 0, i);
			const BigInt want = p.beta_positive() ? BigInt(p.beta - binomial(i + 1, 2)) : BigInt(0);
			b.equality(detail::ri(r, i), p.beta_positive() ? "beta - binom(i+1,2)" : "0", want, at_s0);

			auto check_sigma = [&](const BigInt &sigma) {
				const BigInt v = surface_sections_lower(r, sigma, 0, i);
				detail::Inputs in = detail::ri(r, i);
				in.emplace_back("sigma", sigma);
				b.inequality(std::move(in), "lower bound > 0 for sigma < s0", v.get_str(), v, true);
			};
			if (p.s0 - 1 <= detail::kSigmaExhaustiveLimit) {
				for (BigInt sigma = 1; sigma < p.s0; ++sigma)
					check_sigma(sigma);
			} else {
				for (BigInt sigma = 1; sigma <= detail::kSigmaEndSample; ++sigma)
					check_sigma(sigma);
				for (BigInt sigma = p.s0 - detail::kSigmaEndSample; sigma < p.s0; ++sigma)
					check_sigma(sigma);
			}
		}
	}
	return std::move(b).finish();
}

// ---------------------------------------------------------------------------
// Serialization

namespace detail {

inline Json record_to_json(const CaseRecord &c)
{
	Json inputs = Json::object();
	for (const auto &[k, v] : c.inputs)
		inputs[k] = to_json_integer(v);
	Json out = Json::object();
	out["inputs"] = std::move(inputs);
	out["expected"] = c.expected;
	out["got"] = c.got;
	out["margin"] = to_json_integer(c.margin);
	return out;
}

} // namespace detail

inline Json to_json(const VerificationReport &rep)
{
	Json out = Json::object();
	out["suite"] = rep.suite;
	out["cases_total"] = rep.cases_total;
	out["cases_failed"] = rep.cases_failed();
	out["failures"] = Json::array();
	for (const auto &c : rep.failures)
		out["failures"].push_back(detail::record_to_json(c));
	out["witnesses"] = Json::array();
	for (const auto &c : rep.witnesses)
		out["witnesses"].push_back(detail::record_to_json(c));
	return out;
}

inline Json to_json(const AppendixCase &c)
{
	Json out = Json::object();
	out["r"] = c.r;
	out["i"] = c.i;
	out["s0"] = to_json_integer(c.s0);
	out["c0"] = to_json_integer(c.c0);
	out["gamma"] = to_json_integer(c.gamma);
	out["value"] = to_json_integer(c.value);
	return out;
}

} // namespace halphen
