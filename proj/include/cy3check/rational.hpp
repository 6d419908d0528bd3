#pragma once

#include <gmpxx.h>

#include <string>

namespace cy3 {

/// Exact arithmetic backbone: arbitrary-precision rationals and integers.
using QQ = mpq_class;
using ZZ = mpz_class;

/// floor / ceil of a rational as an exact integer.
ZZ floor_z(const QQ& q);
ZZ ceil_z(const QQ& q);

/// Nearest integer n with q - n in (-1/2, 1/2]  (used for period reduction).
ZZ round_half_into(const QQ& q);

/// Parse "p", "-p", "p/q" (arbitrary precision).  Throws std::invalid_argument
/// on malformed input or zero denominator.
QQ parse_rational(const std::string& text);

/// Canonical "p/q" (or "p" when integral).
std::string format_rational(const QQ& q);

bool is_integer(const QQ& q);

/// Exact integer value; throws std::invalid_argument when q is not integral.
ZZ to_integer(const QQ& q);

/// Largest integer k with k*step <= q, resp. smallest k with k*step >= q.
/// step must be positive.
ZZ floor_div_step(const QQ& q, const QQ& step);
ZZ ceil_div_step(const QQ& q, const QQ& step);

QQ abs_q(const QQ& q);

}  // namespace cy3
