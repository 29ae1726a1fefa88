#pragma once

// Degree threshold d0(r, i) beyond which the large-degree bounds are proven.
//
//   d0 = max{ 2(s0+1)/(r-2) * prod_{j=1}^{r-2} [(r-1)!(s0+1)]^{1/(r-1-j)},
//             2^{s0+4}, 12(s0+2)^4 }
//
// The product collapses to X^H with X = (r-1)!(s0+1) and H the (r-2)-th
// harmonic number. That term is irrational in general; it is enclosed with
// MPFR directed rounding and the threshold is rounded up, never down.

#include "core_params.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <optional>

namespace halphen {

/// Largest s0 for which d0 is materialized as an integer (2^{s0+4} has s0+5 bits).
inline constexpr unsigned long kMaxMaterializedS0 = 1UL << 20;

namespace detail {

class MpfrValue {
public:
	explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
	~MpfrValue() { mpfr_clear(v_); }
	MpfrValue(const MpfrValue &) = delete;
	MpfrValue &operator=(const MpfrValue &) = delete;

	mpfr_ptr get() { return v_; }
	mpfr_srcptr get() const { return v_; }

private:
	mpfr_t v_;
};

/// floor() of a lower or upper enclosure of 2(s0+1)/(r-2) * X^H at `prec` bits.
inline BigInt product_term_floor(std::int64_t r, const BigInt &s0, mpfr_prec_t prec, mpfr_rnd_t rnd)
{
	BigInt x;
	mpz_fac_ui(x.get_mpz_t(), static_cast<unsigned long>(r - 1));
	x *= s0 + 1;

	MpfrValue base(prec), acc(prec), root(prec);
	mpfr_set_z(base.get(), x.get_mpz_t(), rnd);
	mpfr_set_ui(acc.get(), 1, rnd);
	for (std::int64_t k = 1; k <= r - 2; ++k) {
		mpfr_rootn_ui(root.get(), base.get(), static_cast<unsigned long>(k), rnd);
		mpfr_mul(acc.get(), acc.get(), root.get(), rnd);
	}
	BigInt scale = 2 * (s0 + 1);
	mpfr_mul_z(acc.get(), acc.get(), scale.get_mpz_t(), rnd);
	mpfr_div_ui(acc.get(), acc.get(), static_cast<unsigned long>(r - 2), rnd);

	BigInt out;
	mpfr_get_z(out.get_mpz_t(), acc.get(), MPFR_RNDD);
	return out;
}

} // namespace detail

/// Smallest integer strictly above the first (irrational) term of d0. When
/// the enclosure cannot separate an integer boundary the result may exceed
/// the exact answer by one, never fall below it.
inline BigInt d0_product_term_bound(std::int64_t r, const BigInt &s0)
{
	BigInt x;
	mpz_fac_ui(x.get_mpz_t(), static_cast<unsigned long>(r - 1));
	x *= s0 + 1;

	// log2 of X^H plus the scale factor bounds the bits needed for unit accuracy.
	double harmonic = 0;
	for (std::int64_t k = 1; k <= r - 2; ++k)
		harmonic += 1.0 / static_cast<double>(k);
	const auto magnitude = static_cast<mpfr_prec_t>(harmonic * static_cast<double>(mpz_sizeinbase(x.get_mpz_t(), 2))) +
	                       static_cast<mpfr_prec_t>(mpz_sizeinbase(s0.get_mpz_t(), 2));
	mpfr_prec_t prec = std::max<mpfr_prec_t>(64, magnitude + 64);
	const mpfr_prec_t max_prec = std::max<mpfr_prec_t>(prec, 1) * 16;

	BigInt hi;
	for (;; prec *= 2) {
		BigInt lo = detail::product_term_floor(r, s0, prec, MPFR_RNDD);
		hi = detail::product_term_floor(r, s0, prec, MPFR_RNDU);
		if (lo == hi || prec >= max_prec)
			break;
	}
	return hi + 1;
}

/// d0(r, i). Throws validation_error if s0 is too large to write 2^{s0+4} out.
inline BigInt d0_threshold(std::int64_t r, std::int64_t i)
{
	const SurfaceParams surf = derive_surface(r, i);
	if (surf.s0 > kMaxMaterializedS0)
		throw validation_error("d0_threshold: s0 = " + to_string(surf.s0) + " is too large to materialize 2^(s0+4)");
	const unsigned long s0 = surf.s0.get_ui();

	BigInt pow2;
	mpz_ui_pow_ui(pow2.get_mpz_t(), 2, s0 + 4);
	BigInt quartic = 12 * BigInt(s0 + 2) * BigInt(s0 + 2) * BigInt(s0 + 2) * BigInt(s0 + 2);

	BigInt out = d0_product_term_bound(r, surf.s0);
	if (pow2 + 1 > out)
		out = pow2 + 1;
	if (quartic + 1 > out)
		out = quartic + 1;
	return out;
}

inline std::optional<BigInt> d0_threshold_if_materializable(std::int64_t r, std::int64_t i)
{
	if (derive_surface(r, i).s0 > kMaxMaterializedS0)
		return std::nullopt;
	return d0_threshold(r, i);
}

/// d > d0(r, i), decided without materializing d0 when 2^{s0+4} already exceeds d.
inline bool d0_exceeded(std::int64_t r, std::int64_t i, const BigInt &d)
{
	const SurfaceParams surf = derive_surface(r, i);
	if (sgn(d) <= 0)
		return false;
	// d > 2^{s0+4} needs at least s0+5 bits.
	if (BigInt(mpz_sizeinbase(d.get_mpz_t(), 2)) < surf.s0 + 5)
		return false;
	return d > d0_threshold(r, i);
}

} // namespace halphen
