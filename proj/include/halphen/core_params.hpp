#pragma once

// Exact integer primitives and the derived quantities obtained by Euclidean
// division from a (r, d, i) instance.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace halphen {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised when an argument lies outside the domain of an operation.
class validation_error : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

/// Raised when the instance belongs to a different bound's hypotheses.
/// `target()` names the operation the caller should use instead.
class routing_error : public std::invalid_argument {
public:
	routing_error(const std::string &what, std::string target)
		: std::invalid_argument(what + " (use " + target + ")"), target_(std::move(target)) {}

	const std::string &target() const noexcept { return target_; }

private:
	std::string target_;
};

inline std::string to_string(const BigInt &v) { return v.get_str(); }

inline BigInt binomial(const BigInt &n, const BigInt &k)
{
	if (sgn(n) < 0 || sgn(k) < 0)
		throw validation_error("binomial: arguments must be non-negative");
	if (k > n)
		return 0;
	if (!k.fits_ulong_p())
		throw validation_error("binomial: k too large");
	BigInt out;
	mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k.get_ui());
	return out;
}

inline BigInt binomial(std::int64_t n, std::int64_t k) { return binomial(BigInt(n), BigInt(k)); }

template <typename T = BigInt>
struct DivMod {
	T quotient;
	T remainder;
	bool operator==(const DivMod &) const = default;
};

/// Euclidean division with 0 <= remainder < divisor.
inline DivMod<> divmod_exact(const BigInt &a, const BigInt &b)
{
	if (sgn(b) == 0)
		throw validation_error("division by zero");
	if (sgn(b) < 0)
		throw validation_error("divmod_exact: divisor must be positive");
	DivMod<> out;
	mpz_fdiv_qr(out.quotient.get_mpz_t(), out.remainder.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
	return out;
}

/// floor(a / b) for b > 0, rounding toward negative infinity for negative a.
inline BigInt floor_div(const BigInt &a, const BigInt &b) { return divmod_exact(a, b).quotient; }

/// ceil(a / b) for b > 0.
inline BigInt ceil_div(const BigInt &a, const BigInt &b)
{
	BigInt out;
	mpz_cdiv_q(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
	return out;
}

struct ProblemInstance {
	std::int64_t r = 0;
	BigInt d = 1;
	std::int64_t i = 0;
};

/// Quantities that depend on (r, i) only.
struct SurfaceParams {
	BigInt alpha;
	BigInt beta;
	BigInt s0;
	BigInt c0;
	BigInt gamma;
	int mu = 0;

	bool beta_positive() const { return sgn(beta) > 0; }
};

struct DerivedParams : SurfaceParams {
	BigInt m;
	BigInt epsilon;
};

namespace detail {

inline void require(bool ok, const char *msg)
{
	if (!ok)
		throw validation_error(msg);
}

} // namespace detail

/// binom(r+i, i) - (i+1): the number the surface-degree division starts from.
inline BigInt hypersurface_excess(std::int64_t r, std::int64_t i)
{
	return binomial(r + i, i) - (i + 1);
}

/// Divisions depending on (r, i): alpha, beta, s0, c0, gamma and mu.
inline SurfaceParams derive_surface(std::int64_t r, std::int64_t i)
{
	detail::require(r >= 4, "derive: r must be >= 4");
	detail::require(i >= 2, "derive: i must be >= 2");

	const BigInt tri = binomial(i + 1, 2);
	SurfaceParams p;
	auto [alpha, beta] = divmod_exact(hypersurface_excess(r, i), tri);
	p.alpha = std::move(alpha);
	p.beta = std::move(beta);
	p.s0 = p.beta_positive() ? BigInt(p.alpha + 1) : p.alpha;

	auto [c0, gamma] = divmod_exact(tri - p.beta, BigInt(i));
	p.c0 = std::move(c0);
	p.gamma = std::move(gamma);
	p.mu = p.gamma <= 1 ? 0 : 1;
	return p;
}

/// Splits d - 1 = m*s0 + epsilon.
inline DerivedParams with_degree(const SurfaceParams &surf, const BigInt &d)
{
	detail::require(d >= 1, "derive: d must be >= 1");
	DerivedParams p;
	static_cast<SurfaceParams &>(p) = surf;
	auto [m, eps] = divmod_exact(d - 1, surf.s0);
	p.m = std::move(m);
	p.epsilon = std::move(eps);
	return p;
}

inline DerivedParams derive(const ProblemInstance &inst)
{
	return with_degree(derive_surface(inst.r, inst.i), inst.d);
}

/// s0(r, 2) = r(r+3)/6 when 3 divides r.
inline BigInt s0_quadric(std::int64_t r)
{
	detail::require(r >= 6, "s0_quadric: r must be >= 6");
	detail::require(r % 3 == 0, "s0_quadric: r must be divisible by 3");
	return BigInt(r) * (r + 3) / 6;
}

} // namespace halphen
