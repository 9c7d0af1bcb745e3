#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <stdexcept>
#include <string>
#include <string_view>

namespace Eigen {

// Exact rational scalar for dense Eigen types. All engine arithmetic runs on
// mpq_class; there is no floating point anywhere in the inference path.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;

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

namespace natex {

using Rational = mpq_class;
using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};
class ParseError : public Error {
  using Error::Error;
};
class DimensionError : public Error {
  using Error::Error;
};
class CapExceeded : public Error {
  using Error::Error;
};
class InconsistentAssessment : public Error {
  using Error::Error;
};
class IncoherentGenerators : public Error {
  using Error::Error;
};
class CertificateError : public Error {
  using Error::Error;
};

/// Parses "p", "-p" or "p/q" (decimal digits, q > 0) into a rational in
/// lowest terms. Rejects anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical form: lowest terms, sign on the numerator, "/q" omitted when
/// q == 1. parse_rational(to_string(x)) == x byte-exactly.
std::string to_string(const Rational& value);

/// Three-way lexicographic comparison of equal-length rational vectors.
int lex_compare(const RatVec& a, const RatVec& b);

}  // namespace natex
