#pragma once

// Bound tables over (r, i, d) grids and their CSV / JSON encodings.

#include "bounds.hpp"
#include "core_params.hpp"
#include "json_util.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace halphen {

struct SweepRow {
	std::int64_t r = 0;
	std::int64_t i = 0;
	BigInt d;
	BigInt alpha, beta, s0, m, epsilon, c0, gamma;
	int mu = 0;
	BigInt g_castelnuovo;
	std::optional<BigInt> g0;
	std::optional<BigInt> g_beta0;
	Regime regime = Regime::g0;
	bool valid_for_theorem = true;
	bool d0_met = false;

	bool operator==(const SweepRow &) const = default;
};

/// Inclusive integer range [lo, hi].
struct IntRange {
	std::int64_t lo = 0;
	std::int64_t hi = -1;

	bool empty() const { return lo > hi; }
};

struct SweepGrid {
	IntRange r, i, d;
};

struct SweepResult {
	std::vector<SweepRow> rows;
	/// Grid points with d <= s0, which carry no bound.
	std::uint64_t skipped = 0;
};

namespace detail {

struct SweepCell {
	std::vector<SweepRow> rows;
	std::uint64_t skipped = 0;
};

inline SweepCell sweep_cell(std::int64_t r, std::int64_t i, const IntRange &d_range)
{
	SweepCell cell;
	const SurfaceParams surf = derive_surface(r, i);
	const BigInt first_valid = surf.s0 + 1;

	BigInt start(d_range.lo);
	if (start < first_valid) {
		const BigInt last_skipped = BigInt(d_range.hi) < surf.s0 ? BigInt(d_range.hi) : surf.s0;
		cell.skipped = BigInt(last_skipped - start + 1).get_ui();
		start = first_valid;
	}
	if (start > d_range.hi)
		return cell;

	// d fits in 64 bits here, so an unmaterializable d0 is never exceeded.
	const std::optional<BigInt> d0 = d0_threshold_if_materializable(r, i);
	const bool beta_positive = surf.beta_positive();
	const bool valid = beta_positive ? g0_theorem_applies(r, i) : r >= 5;

	for (std::int64_t d = start.get_si(); d <= d_range.hi; ++d) {
		const BigInt bd(d);
		const DerivedParams p = with_degree(surf, bd);
		SweepRow row;
		row.r = r;
		row.i = i;
		row.d = bd;
		row.alpha = p.alpha;
		row.beta = p.beta;
		row.s0 = p.s0;
		row.m = p.m;
		row.epsilon = p.epsilon;
		row.c0 = p.c0;
		row.gamma = p.gamma;
		row.mu = p.mu;
		row.g_castelnuovo = castelnuovo_bound(BigInt(r), bd);
		if (beta_positive)
			row.g0 = g0_value(p);
		else
			row.g_beta0 = beta0_value(p);
		row.regime = beta_positive ? Regime::g0 : Regime::beta_zero;
		row.valid_for_theorem = valid;
		row.d0_met = d0 && bd > *d0;
		cell.rows.push_back(std::move(row));
		if (d == d_range.hi)
			break;
	}
	return cell;
}

} // namespace detail

/// One row per (r, i, d) with d > s0, in lexicographic order. `threads` only
/// changes how cells are scheduled; the output is identical for any value.
inline SweepResult sweep(const SweepGrid &grid, unsigned threads = 1)
{
	if (grid.r.empty() || grid.i.empty() || grid.d.empty())
		throw validation_error("sweep: empty grid");
	detail::require(grid.r.lo >= 4, "sweep: r must be >= 4");
	detail::require(grid.i.lo >= 2, "sweep: i must be >= 2");
	detail::require(grid.d.lo >= 1, "sweep: d must be >= 1");

	struct Key {
		std::int64_t r, i;
	};
	std::vector<Key> keys;
	for (std::int64_t r = grid.r.lo; r <= grid.r.hi; ++r)
		for (std::int64_t i = grid.i.lo; i <= grid.i.hi; ++i)
			keys.push_back({r, i});

	std::vector<detail::SweepCell> cells(keys.size());
	std::atomic<std::size_t> next{0};
	auto work = [&] {
		for (std::size_t k = next++; k < keys.size(); k = next++)
			cells[k] = detail::sweep_cell(keys[k].r, keys[k].i, grid.d);
	};

	threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(keys.size(), 1)));
	if (threads == 1) {
		work();
	} else {
		std::vector<std::jthread> pool;
		for (unsigned t = 0; t < threads; ++t)
			pool.emplace_back(work);
	}

	SweepResult out;
	for (auto &cell : cells) {
		out.skipped += cell.skipped;
		std::move(cell.rows.begin(), cell.rows.end(), std::back_inserter(out.rows));
	}
	return out;
}

// ---------------------------------------------------------------------------
// CSV

inline constexpr std::string_view kSweepCsvHeader =
	"r,i,d,alpha,beta,s0,m,epsilon,c0,gamma,mu,G_castelnuovo,G0,G_beta0,regime,valid_for_theorem,d0_met";

inline std::string emit_csv(const std::vector<SweepRow> &rows)
{
	std::string out(kSweepCsvHeader);
	out += '\n';
	auto opt = [](const std::optional<BigInt> &v) { return v ? v->get_str() : std::string(); };
	auto flag = [](bool b) { return b ? "true" : "false"; };
	for (const auto &row : rows) {
		out += std::to_string(row.r) + ',' + std::to_string(row.i) + ',' + row.d.get_str() + ',' +
		       row.alpha.get_str() + ',' + row.beta.get_str() + ',' + row.s0.get_str() + ',' + row.m.get_str() +
		       ',' + row.epsilon.get_str() + ',' + row.c0.get_str() + ',' + row.gamma.get_str() + ',' +
		       std::to_string(row.mu) + ',' + row.g_castelnuovo.get_str() + ',' + opt(row.g0) + ',' +
		       opt(row.g_beta0) + ',' + std::string(to_string(row.regime)) + ',' + flag(row.valid_for_theorem) +
		       ',' + flag(row.d0_met) + '\n';
	}
	return out;
}

// ---------------------------------------------------------------------------
// JSON

inline Json to_json(const SweepRow &row)
{
	Json o = Json::object();
	o["r"] = row.r;
	o["i"] = row.i;
	o["d"] = to_json_integer(row.d);
	o["alpha"] = to_json_integer(row.alpha);
	o["beta"] = to_json_integer(row.beta);
	o["s0"] = to_json_integer(row.s0);
	o["m"] = to_json_integer(row.m);
	o["epsilon"] = to_json_integer(row.epsilon);
	o["c0"] = to_json_integer(row.c0);
	o["gamma"] = to_json_integer(row.gamma);
	o["mu"] = row.mu;
	o["G_castelnuovo"] = to_json_integer(row.g_castelnuovo);
	o["G0"] = to_json_integer(row.g0);
	o["G_beta0"] = to_json_integer(row.g_beta0);
	o["regime"] = std::string(to_string(row.regime));
	o["valid_for_theorem"] = row.valid_for_theorem;
	o["d0_met"] = row.d0_met;
	return o;
}

/// A JSON array, one compact object per line.
inline std::string emit_json(const std::vector<SweepRow> &rows)
{
	if (rows.empty())
		return "[]";
	std::string out = "[\n";
	for (std::size_t k = 0; k < rows.size(); ++k) {
		out += to_json(rows[k]).dump();
		out += k + 1 < rows.size() ? ",\n" : "\n";
	}
	out += "]";
	return out;
}

inline Regime parse_regime(std::string_view s)
{
	for (auto r : {Regime::classical, Regime::beta_zero, Regime::g0, Regime::r6_sharp, Regime::r9_candidates,
	               Regime::interval})
		if (to_string(r) == s)
			return r;
	throw validation_error("unknown regime: " + std::string(s));
}

inline SweepRow sweep_row_from_json(const Json &o)
{
	auto opt = [](const Json &j) { return j.is_null() ? std::optional<BigInt>() : integer_from_json(j); };
	SweepRow row;
	row.r = o.at("r").get<std::int64_t>();
	row.i = o.at("i").get<std::int64_t>();
	row.d = integer_from_json(o.at("d"));
	row.alpha = integer_from_json(o.at("alpha"));
	row.beta = integer_from_json(o.at("beta"));
	row.s0 = integer_from_json(o.at("s0"));
	row.m = integer_from_json(o.at("m"));
	row.epsilon = integer_from_json(o.at("epsilon"));
	row.c0 = integer_from_json(o.at("c0"));
	row.gamma = integer_from_json(o.at("gamma"));
	row.mu = o.at("mu").get<int>();
	row.g_castelnuovo = integer_from_json(o.at("G_castelnuovo"));
	row.g0 = opt(o.at("G0"));
	row.g_beta0 = opt(o.at("G_beta0"));
	row.regime = parse_regime(o.at("regime").get<std::string>());
	row.valid_for_theorem = o.at("valid_for_theorem").get<bool>();
	row.d0_met = o.at("d0_met").get<bool>();
	return row;
}

inline std::vector<SweepRow> parse_json_rows(std::string_view text)
{
	const Json doc = Json::parse(text);
	if (!doc.is_array())
		throw validation_error("sweep JSON must be an array");
	std::vector<SweepRow> rows;
	rows.reserve(doc.size());
	for (const auto &o : doc)
		rows.push_back(sweep_row_from_json(o));
	return rows;
}

} // namespace halphen
