#pragma once

// Command-line front end. `run` is the whole program; tools/halphen.cpp only
// forwards argv to it.
//
// Exit status: 0 success, 1 verification failure, 2 usage or validation error.

#include "bounds.hpp"
#include "core_params.hpp"
#include "json_util.hpp"
#include "sweep_io.hpp"
#include "verify.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace halphen::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parses "A..B" (inclusive) or a single integer "A".
inline IntRange parse_range(const std::string &text)
{
	auto to_int = [&](const std::string &s) -> std::int64_t {
		std::size_t used = 0;
		std::int64_t v = 0;
		try {
			v = std::stoll(s, &used);
		} catch (const std::exception &) {
			used = 0;
		}
		if (s.empty() || used != s.size())
			throw validation_error("bad range '" + text + "': expected A..B");
		return v;
	};
	const auto dots = text.find("..");
	if (dots == std::string::npos) {
		const auto v = to_int(text);
		return {v, v};
	}
	return {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
}

inline BigInt parse_integer(const std::string &name, const std::string &text)
{
	BigInt out;
	if (text.empty() || out.set_str(text, 10) != 0)
		throw validation_error("--" + name + ": not an integer: '" + text + "'");
	return out;
}

namespace detail {

inline void print(std::ostream &out, const Json &doc, const std::string &format)
{
	if (format == "text") {
		for (const auto &[k, v] : doc.items())
			out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
		return;
	}
	out << doc.dump(2) << '\n';
}

inline Json bound_json(const BoundResult &b)
{
	Json o = Json::object();
	o["value"] = to_json_integer(b.value);
	o["regime"] = std::string(to_string(b.regime));
	o["sharp"] = std::string(to_string(b.sharp));
	o["valid_for_theorem"] = b.valid_for_theorem;
	o["threshold_d0"] = to_json_integer(b.threshold_d0);
	o["d0_met"] = b.d0_met;
	return o;
}

inline Json params_json(std::int64_t r, std::int64_t i, const std::optional<BigInt> &d)
{
	Json o = Json::object();
	o["r"] = r;
	o["i"] = i;
	const SurfaceParams surf = derive_surface(r, i);
	std::optional<DerivedParams> full;
	if (d) {
		full = with_degree(surf, *d);
		o["d"] = to_json_integer(*d);
	}
	o["alpha"] = to_json_integer(surf.alpha);
	o["beta"] = to_json_integer(surf.beta);
	o["s0"] = to_json_integer(surf.s0);
	if (full) {
		o["m"] = to_json_integer(full->m);
		o["epsilon"] = to_json_integer(full->epsilon);
	}
	o["c0"] = to_json_integer(surf.c0);
	o["gamma"] = to_json_integer(surf.gamma);
	o["mu"] = surf.mu;
	return o;
}

inline std::string appendix_text(const std::vector<AppendixCase> &rows)
{
	std::ostringstream os;
	os << std::setw(4) << "i" << std::setw(6) << "s0" << std::setw(6) << "c0" << std::setw(7) << "gamma"
	   << std::setw(7) << "value" << '\n';
	for (const auto &c : rows)
		os << std::setw(4) << c.i << std::setw(6) << c.s0.get_str() << std::setw(6) << c.c0.get_str()
		   << std::setw(7) << c.gamma.get_str() << std::setw(7) << c.value.get_str() << '\n';
	return os.str();
}

struct Options {
	// params / bound
	std::int64_t r = 0;
	std::int64_t i = 0;
	std::string d, s, pi, j;
	std::string kind;
	// verify
	std::string suite = "all";
	std::int64_t r_max = 60;
	std::int64_t i_max = 30;
	std::int64_t d_max = 100000;
	// sweep
	std::string r_range, i_range, d_range;
	unsigned threads = 1;
	std::string format;
};

class Runner {
public:
	Runner(std::ostream &out, std::ostream &err) : out_(out), err_(err) {}

	int params(CLI::App &cmd)
	{
		std::optional<BigInt> d;
		if (cmd.count("--d"))
			d = parse_integer("d", opt_.d);
		print(out_, params_json(opt_.r, opt_.i, d), format_or("json"));
		return kExitOk;
	}

	int bound(CLI::App &cmd)
	{
		auto need = [&](const char *flag) {
			if (!cmd.count(flag))
				throw validation_error(std::string("bound --kind ") + opt_.kind + " requires " + flag);
		};
		auto big = [&](const char *flag, const std::string &value) {
			need(flag);
			return parse_integer(flag + 2, value);
		};

		Json o = Json::object();
		o["kind"] = opt_.kind;
		const std::string &k = opt_.kind;
		if (k == "castelnuovo") {
			need("--r");
			const BigInt d = big("--d", opt_.d);
			o["r"] = opt_.r;
			o["d"] = to_json_integer(d);
			o["value"] = to_json_integer(castelnuovo_bound(BigInt(opt_.r), d));
			o["regime"] = std::string(to_string(Regime::classical));
			o["sharp"] = std::string(to_string(Sharpness::sharp));
		} else if (k == "g0" || k == "beta0") {
			need("--r");
			need("--i");
			const BigInt d = big("--d", opt_.d);
			o["r"] = opt_.r;
			o["i"] = opt_.i;
			o["d"] = to_json_integer(d);
			o.update(bound_json(k == "g0" ? g0_bound(opt_.r, d, opt_.i) : beta0_bound(opt_.r, d, opt_.i)));
		} else if (k == "r6") {
			const BigInt d = big("--d", opt_.d);
			o["r"] = 6;
			o["i"] = 2;
			o["d"] = to_json_integer(d);
			o.update(bound_json(g_sharp_r6(d)));
		} else if (k == "r9" || k == "interval") {
			need("--r");
			const BigInt d = big("--d", opt_.d);
			o["r"] = opt_.r;
			o["i"] = 2;
			o["d"] = to_json_integer(d);
			if (k == "r9") {
				Json list = Json::array();
				for (const auto &v : g_candidates_r9(opt_.r, d))
					list.push_back(to_json_integer(v));
				o["candidates"] = std::move(list);
				o["regime"] = std::string(to_string(Regime::r9_candidates));
				o["sharp"] = std::string(to_string(Sharpness::candidate_set));
			} else {
				const auto range = g_interval(opt_.r, d);
				o["low"] = to_json_integer(range.low);
				o["high"] = to_json_integer(range.high);
				o["regime"] = std::string(to_string(Regime::interval));
				o["sharp"] = std::string(to_string(Sharpness::not_known_sharp));
			}
			const auto d0 = d0_threshold_if_materializable(opt_.r, 2);
			o["threshold_d0"] = to_json_integer(d0);
			o["d0_met"] = d0 ? d > *d0 : d0_exceeded(opt_.r, 2, d);
		} else if (k == "clifford") {
			SectionData sec{big("--s", opt_.s), big("--pi", opt_.pi), big("--j", opt_.j), opt_.r ? opt_.r : 3};
			o["s"] = to_json_integer(sec.s);
			o["pi"] = to_json_integer(sec.pi);
			o["j"] = to_json_integer(sec.j);
			o["value"] = to_json_integer(clifford_h0_upper(sec));
		} else if (k == "suff") {
			need("--r");
			need("--i");
			const BigInt s = big("--s", opt_.s);
			const BigInt pi = big("--pi", opt_.pi);
			o["r"] = opt_.r;
			o["i"] = opt_.i;
			o["s"] = to_json_integer(s);
			o["pi"] = to_json_integer(pi);
			o["value"] = to_json_integer(surface_sections_lower(opt_.r, s, pi, opt_.i));
		} else if (k == "projection") {
			need("--r");
			need("--i");
			const BigInt pi = big("--pi", opt_.pi);
			const auto range = projection_range(opt_.r, opt_.i, pi);
			o["r"] = opt_.r;
			o["i"] = opt_.i;
			o["pi"] = to_json_integer(pi);
			o["low"] = to_json_integer(range.low);
			o["high"] = to_json_integer(range.high);
		} else if (k == "d0") {
			need("--r");
			need("--i");
			o["r"] = opt_.r;
			o["i"] = opt_.i;
			o["threshold_d0"] = to_json_integer(d0_threshold(opt_.r, opt_.i));
		} else if (k == "asymptotic") {
			need("--r");
			need("--i");
			const Rational c = asymptotic_coefficient(opt_.r, opt_.i);
			o["r"] = opt_.r;
			o["i"] = opt_.i;
			o["coefficient"] = c.get_str();
			o["numerator"] = to_json_integer(c.get_num());
			o["denominator"] = to_json_integer(c.get_den());
		}
		print(out_, o, format_or("json"));
		return kExitOk;
	}

	int verify()
	{
		std::vector<VerificationReport> reports;
		const auto &s = opt_.suite;
		if (s == "stima" || s == "all")
			reports.push_back(verify_stima_numeric(opt_.r_max, opt_.i_max));
		if (s == "appendix" || s == "all")
			reports.push_back(verify_appendix_suite(opt_.r_max, opt_.i_max));
		if (s == "r6" || s == "all")
			reports.push_back(verify_r6_sharpness_identity(opt_.d_max));
		if (s == "remark-r1" || s == "all")
			reports.push_back(verify_remark_r1(opt_.r_max, opt_.i_max));

		bool ok = true;
		for (const auto &rep : reports)
			ok = ok && rep.passed();

		if (format_or("json") == "text") {
			for (const auto &rep : reports)
				out_ << rep.suite << ": " << (rep.passed() ? "PASS" : "FAIL") << " (" << rep.cases_total
				     << " cases, " << rep.cases_failed() << " failed, " << rep.witnesses.size() << " witnesses)\n";
		} else if (reports.size() == 1) {
			out_ << to_json(reports.front()).dump(2) << '\n';
		} else {
			Json all = Json::array();
			for (const auto &rep : reports)
				all.push_back(to_json(rep));
			out_ << all.dump(2) << '\n';
		}
		return ok ? kExitOk : kExitVerificationFailed;
	}

	int sweep()
	{
		const SweepGrid grid{parse_range(opt_.r_range), parse_range(opt_.i_range), parse_range(opt_.d_range)};
		const SweepResult res = halphen::sweep(grid, opt_.threads);
		if (format_or("csv") == "json")
			out_ << emit_json(res.rows) << '\n';
		else
			out_ << emit_csv(res.rows);
		err_ << "rows: " << res.rows.size() << ", skipped (d <= s0): " << res.skipped << '\n';
		return kExitOk;
	}

	int appendix_table()
	{
		const auto rows = appendix_r4_table();
		const std::string fmt = format_or("text");
		if (fmt == "json") {
			Json all = Json::array();
			for (const auto &c : rows)
				all.push_back(to_json(c));
			out_ << all.dump(2) << '\n';
		} else if (fmt == "csv") {
			out_ << "r,i,s0,c0,gamma,value\n";
			for (const auto &c : rows)
				out_ << c.r << ',' << c.i << ',' << c.s0.get_str() << ',' << c.c0.get_str() << ','
				     << c.gamma.get_str() << ',' << c.value.get_str() << '\n';
		} else {
			out_ << appendix_text(rows);
		}
		return kExitOk;
	}

	Options &options() { return opt_; }

private:
	std::string format_or(const char *fallback) const { return opt_.format.empty() ? fallback : opt_.format; }

	std::ostream &out_;
	std::ostream &err_;
	Options opt_;
};

} // namespace detail

inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
	detail::Runner runner(out, err);
	auto &o = runner.options();

	CLI::App app{"Genus bounds for curves in P^r off hypersurfaces of degree <= i", "halphen"};
	app.require_subcommand(1);

	auto *params = app.add_subcommand("params", "Print the derived division parameters");
	params->add_option("--r", o.r, "Ambient dimension")->required();
	params->add_option("--i", o.i, "Hypersurface degree")->required();
	params->add_option("--d", o.d, "Curve degree");
	params->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

	auto *bound = app.add_subcommand("bound", "Evaluate a bound");
	bound->add_option("--kind", o.kind)
		->required()
		->check(CLI::IsMember({"castelnuovo", "g0", "beta0", "clifford", "suff", "d0", "r6", "r9", "interval",
	                           "projection", "asymptotic"}));
	bound->add_option("--r", o.r);
	bound->add_option("--i", o.i);
	bound->add_option("--d", o.d);
	bound->add_option("--s", o.s, "Surface degree");
	bound->add_option("--pi", o.pi, "Sectional genus");
	bound->add_option("--j", o.j, "Twist");
	bound->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

	auto *verify = app.add_subcommand("verify", "Run numeric verification suites");
	verify->add_option("--suite", o.suite, "stima|appendix|r6|remark-r1|all")
		->check(CLI::IsMember({"stima", "appendix", "r6", "remark-r1", "all"}));
	verify->add_option("--r-max", o.r_max)->capture_default_str();
	verify->add_option("--i-max", o.i_max)->capture_default_str();
	verify->add_option("--d-max", o.d_max)->capture_default_str();
	verify->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

	auto *sweep = app.add_subcommand("sweep", "Tabulate bounds over an (r, i, d) grid");
	sweep->add_option("--r", o.r_range, "A..B")->required();
	sweep->add_option("--i", o.i_range, "A..B")->required();
	sweep->add_option("--d", o.d_range, "A..B")->required();
	sweep->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));
	sweep->add_option("--threads", o.threads)->capture_default_str();

	auto *table = app.add_subcommand("appendix-table", "Print the r = 4 case table");
	table->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "csv"}));

	std::vector<const char *> argv{"halphen"};
	for (const auto &a : args)
		argv.push_back(a.c_str());

	try {
		app.parse(static_cast<int>(argv.size()), argv.data());
	} catch (const CLI::CallForHelp &e) {
		return app.exit(e, out, err);
	} catch (const CLI::ParseError &e) {
		err << "error: " << e.what() << '\n' << "run with --help for usage\n";
		return kExitUsage;
	}

	try {
		if (params->parsed())
			return runner.params(*params);
		if (bound->parsed())
			return runner.bound(*bound);
		if (verify->parsed())
			return runner.verify();
		if (sweep->parsed())
			return runner.sweep();
		if (table->parsed())
			return runner.appendix_table();
	} catch (const std::invalid_argument &e) {
		err << "error: " << e.what() << '\n';
		return kExitUsage;
	} catch (const std::exception &e) {
		err << "internal error: " << e.what() << '\n';
		return kExitVerificationFailed;
	}
	return kExitUsage;
}

} // namespace halphen::cli
