#pragma once

// Exact rational scalar (GMP mpq_class) wired into Eigen dense types.
// All linear algebra in this library runs over these; there is no
// floating point anywhere.

#include <Eigen/Dense>
#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace hilbkit {

using Rational = mpq_class;
using Integer = mpz_class;

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

/// Reduced fraction with positive denominator.
inline Rational frac(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("frac: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
inline Rational rational_from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("rational_from_string: empty");
  mpq_class q;
  if (q.set_str(std::string(s), 10) != 0)
    throw std::invalid_argument("rational_from_string: bad literal '" + std::string(s) + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("rational_from_string: zero denominator in '" + std::string(s) + "'");
  q.canonicalize();
  return q;
}

/// Always renders as "p/q", e.g. "1/1", "-3/2".
inline std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace hilbkit
