#pragma once

#include <gmpxx.h>

#include <string>

#include "liecert/error.hpp"

namespace liecert {

// All arithmetic in the library is exact. mpq_class keeps values in lowest
// terms with positive denominator as long as every value is built through a
// canonicalizing path; the helpers below are those paths.
using Int = mpz_class;
using Rat = mpq_class;

// Throws UsageError on zero denominator.
Rat make_rat(const Int& num, const Int& den);

// Accepts "p" or "p/q" with optional leading sign. Throws UsageError on
// malformed input or zero denominator.
Rat parse_rat(const std::string& s);

// "p/q" in lowest terms, "/q" omitted when the denominator is 1.
std::string rat_str(const Rat& r);

bool is_integer(const Rat& r);

// Largest integer <= r.
Int floor_rat(const Rat& r);

// Smallest integer >= r.
Int ceil_rat(const Rat& r);

}  // namespace liecert
