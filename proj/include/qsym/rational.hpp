#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qsym {

/// Exact rational scalar used throughout the library.
using Rational = mpq_class;

/// Formats q as "num/den", always with an explicit denominator.
inline std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// acc += a * b without allocating a temporary per call.
inline void add_product(Rational& acc, const Rational& a, const Rational& b) {
  thread_local mpq_class scratch;
  mpq_mul(scratch.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
  mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), scratch.get_mpq_t());
}

}  // namespace qsym
