#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace qcong {

/* Arbitrary-precision integers and exact rationals. Rationals are kept in
 * lowest terms with a positive denominator (the gmp canonical form). */
using Integer = mpz_class;
using Rational = mpq_class;

/* num/den as a canonical rational; den may be negative on input. */
Rational make_rational(const Integer& num, const Integer& den);

/* Mathematical floor, correct for negative values: floor(-7/2) = -4. */
Integer rational_floor(const Rational& x);

/* All positive divisors of n, strictly increasing. Rejects n < 1. */
std::vector<std::int64_t> divisors(std::int64_t n);

/* Distinct prime divisors of n, increasing. Trial division; the levels in
 * this library are tiny. */
std::vector<std::int64_t> prime_divisors(std::int64_t n);

bool is_squarefree(std::int64_t n);

/* Euler totient. */
std::int64_t euler_phi(std::int64_t n);

/* The index [SL2(Z) : Gamma_0(N)] = N * prod_{p|N} (1 + 1/p), exact. */
std::int64_t index_gamma0(std::int64_t n);

/* S_n = { x^2 mod n : gcd(x, n) = 1 }, canonical residues in [0, n),
 * increasing. S_1 = {0}. */
std::vector<std::int64_t> square_classes(std::int64_t n);

/* Extended Kronecker symbol (a|d), defined for all integers; (a|0) is 1
 * exactly when a = +-1. */
int kronecker(const Integer& a, const Integer& d);
int kronecker(std::int64_t a, std::int64_t d);

/* Canonical residue of a modulo m, in [0, m). Requires m >= 1. */
std::int64_t mod_canonical(std::int64_t a, std::int64_t m);

/* gcd(|a|, |b|); gcd(0, b) = |b|. */
Integer gcd_abs(const Integer& a, const Integer& b);

}  // namespace qcong
