#ifndef DGMFD_SCALAR_HPP
#define DGMFD_SCALAR_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace dgmfd {

/// Exact rational number. All arithmetic in the engine is exact; there is no
/// floating point anywhere.
using Rational = mpq_class;

Rational rationalFromString(const std::string& s);
std::string rationalToString(const Rational& r);

/// A monomial in the base variables x1..xm, stored as a dense exponent
/// vector. Trailing zero exponents are trimmed so that "x1^2" means the same
/// monomial regardless of how many variables the ambient ring has.
struct BaseMonomial {
  std::vector<unsigned> exps;

  BaseMonomial() = default;
  explicit BaseMonomial(std::vector<unsigned> e);

  unsigned totalDegree() const;
  bool isOne() const { return exps.empty(); }
  bool operator==(const BaseMonomial& o) const { return exps == o.exps; }
  bool operator<(const BaseMonomial& o) const;

  static BaseMonomial one() { return BaseMonomial(); }
  static BaseMonomial var(int i);

  BaseMonomial operator*(const BaseMonomial& o) const;
  /// Exact division; the caller guarantees divisibility.
  BaseMonomial dividedBy(const BaseMonomial& o) const;
  bool divides(const BaseMonomial& o) const;

  std::string str() const;
};

/// An element of the exact coefficient ring: a multivariate polynomial over Q
/// in the named variables x1..xm, with m = 0 giving plain rationals. The
/// representation is a canonical normal form (sorted monomials, no zero
/// terms), so equality is normal-form comparison.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int n);                       // NOLINT: implicit by design
  Scalar(const Rational& r);           // NOLINT
  static Scalar variable(int i);       // x_{i+1}
  static Scalar fromTerms(std::map<BaseMonomial, Rational> terms);

  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  /// Constant term (the coefficient of the monomial 1).
  Rational constantValue() const;
  /// Throws unless the scalar is constant.
  Rational asRational() const;

  const std::map<BaseMonomial, Rational>& terms() const { return terms_; }
  int totalDegree() const;  // -1 for the zero polynomial
  int numVariablesUsed() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  bool operator==(const Scalar& o) const { return terms_ == o.terms_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const { return terms_ < o.terms_; }

  /// Formal partial derivative with respect to x_{i+1}.
  Scalar derivative(int i) const;
  /// Full evaluation at a rational point (pads missing coordinates with 0).
  Rational evaluate(const std::vector<Rational>& point) const;
  /// Substitute x_{i+1} := values[i] (polynomial composition).
  Scalar substitute(const std::vector<Scalar>& values) const;

  /// Exact division; throws if the division leaves a remainder. This is the
  /// step that makes fraction-free (Bareiss) elimination work over the
  /// polynomial ring.
  Scalar dividedExactlyBy(const Scalar& d) const;

  std::string str() const;

 private:
  std::map<BaseMonomial, Rational> terms_;
  void addTerm(const BaseMonomial& m, const Rational& c);
};

inline Scalar operator*(const Rational& r, const Scalar& s) { return Scalar(r) * s; }

}  // namespace dgmfd

#endif
