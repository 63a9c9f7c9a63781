#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace kmsph {

using Int = mpz_class;
using Rat = mpq_class;
using ZVec = std::vector<Int>;
using ZMat = std::vector<ZVec>;
using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// "p" when integral, "p/q" otherwise.
std::string rat_string(const Rat& q);

// Accepts "p" and "p/q" with optional leading minus; rejects everything else.
Rat parse_rat(const std::string& text);

QVec to_qvec(const ZVec& v);
// Errors with InvariantViolation if any entry has a denominator.
ZVec to_zvec_exact(const QVec& v, const std::string& what);

}  // namespace kmsph
