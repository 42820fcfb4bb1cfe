#ifndef DGMFD_GRADED_HPP
#define DGMFD_GRADED_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dgmfd/matrix.hpp"

namespace dgmfd {

/// A finite Z-graded vector space with named, ordered bases. The canonical
/// basis order is degrees ascending, labels lexicographic within a degree;
/// every matrix in the engine is relative to this order, which makes all
/// outputs reproducible bit-for-bit.
class GradedVectorSpace {
 public:
  GradedVectorSpace() = default;
  explicit GradedVectorSpace(std::map<int, std::vector<std::string>> basis);

  bool isZero() const { return basis_.empty(); }
  int dim(int degree) const;
  int totalDim() const;
  const std::vector<std::string>& labels(int degree) const;
  const std::map<int, std::vector<std::string>>& support() const { return basis_; }
  std::vector<int> degrees() const;
  int minDegree() const;
  int maxDegree() const;

  bool operator==(const GradedVectorSpace& o) const { return basis_ == o.basis_; }

  /// Flat index over all degrees in canonical order.
  int flatDim() const { return totalDim(); }
  int flatIndex(int degree, int indexInDegree) const;
  std::pair<int, int> unflatten(int flatIndex) const;

  GradedVectorSpace shifted(int s) const;  // V[s]^k = V^{k+s}
  GradedVectorSpace dual() const;          // labels get a trailing '
  static GradedVectorSpace directSum(const GradedVectorSpace& a, const GradedVectorSpace& b);
  static GradedVectorSpace tensor(const GradedVectorSpace& a, const GradedVectorSpace& b);
  static GradedVectorSpace line(int degree, const std::string& label);

 private:
  std::map<int, std::vector<std::string>> basis_;
};

/// A degree-homogeneous block map between graded spaces. Blocks exist
/// exactly for source degrees where both the source and the shifted target
/// component are nonzero.
class GradedMap {
 public:
  GradedMap() = default;
  GradedMap(GradedVectorSpace source, GradedVectorSpace target, int degreeShift);

  static GradedMap identity(const GradedVectorSpace& v);
  static GradedMap zero(const GradedVectorSpace& source, const GradedVectorSpace& target, int shift);

  const GradedVectorSpace& source() const { return source_; }
  const GradedVectorSpace& target() const { return target_; }
  int degreeShift() const { return shift_; }

  /// Block from source degree k to target degree k+shift. Returns a zero
  /// matrix of the right shape when absent.
  Matrix block(int k) const;
  void setBlock(int k, Matrix m);
  void setEntry(int k, int row, int col, const Scalar& v);

  bool isZero() const;
  bool operator==(const GradedMap& o) const;

  GradedMap compose(const GradedMap& inner) const;  // this after inner
  GradedMap operator+(const GradedMap& o) const;
  GradedMap operator-(const GradedMap& o) const;
  GradedMap scaled(const Scalar& s) const;

  /// Koszul-signed dual: <f'(w), v> = (-1)^{|f||w|} <w, f(v)>.
  GradedMap dualMap() const;
  GradedMap shifted(int s) const;

  std::vector<Scalar> applyToBasis(int degree, int index) const;

 private:
  GradedVectorSpace source_, target_;
  int shift_ = 0;
  std::map<int, Matrix> blocks_;
};

/// Koszul tensor product of maps: (f (x) g)(a (x) b) = (-1)^{|g||a|} f(a) (x) g(b).
GradedMap tensorMap(const GradedMap& f, const GradedMap& g);
GradedMap directSumMap(const GradedMap& f, const GradedMap& g);

/// The canonical isomorphism (A (x) B)' -> B' (x) A' with the sign-correct
/// pairing, and the double-dual identification V -> V''.
GradedMap tensorDualSwap(const GradedVectorSpace& a, const GradedVectorSpace& b);
GradedMap doubleDualIso(const GradedVectorSpace& v);

/// Symmetric power in the graded sense: odd-degree generators square to
/// zero, even ones do not. Returns the space together with the projection
/// data needed by callers (word labels are "[a b c]").
GradedVectorSpace symmetricPower(const GradedVectorSpace& v, int n);

/// A cochain complex presented one degree at a time. Degrees may be
/// unbounded below (function algebras have unbounded-below support with
/// finite-dimensional graded pieces), so consumers always work on an
/// explicit degree window.
class CochainComplex {
 public:
  virtual ~CochainComplex() = default;
  virtual int dimension(int t) const = 0;
  virtual std::vector<std::string> basisLabels(int t) const;
  /// Differential component d^t : C^t -> C^{t+1}, shape dim(t+1) x dim(t).
  virtual Matrix differential(int t) const = 0;

  /// d o d = 0 on the materialized window; throws on violation.
  void checkDifferential(int t0, int t1) const;
};

/// Finite complex built from a graded space and a degree +1 map.
class FiniteComplex : public CochainComplex {
 public:
  FiniteComplex(GradedVectorSpace space, GradedMap d);
  int dimension(int t) const override { return space_.dim(t); }
  std::vector<std::string> basisLabels(int t) const override;
  Matrix differential(int t) const override { return d_.block(t); }
  const GradedVectorSpace& space() const { return space_; }
  const GradedMap& map() const { return d_; }

 private:
  GradedVectorSpace space_;
  GradedMap d_;
};

/// Lazily presented complex with memoized components.
class LazyComplex : public CochainComplex {
 public:
  LazyComplex(std::function<int(int)> dim, std::function<Matrix(int)> diff,
              std::function<std::vector<std::string>(int)> labels = nullptr);
  int dimension(int t) const override;
  std::vector<std::string> basisLabels(int t) const override;
  Matrix differential(int t) const override;

 private:
  std::function<int(int)> dim_;
  std::function<Matrix(int)> diff_;
  std::function<std::vector<std::string>(int)> labels_;
  mutable std::map<int, int> dimCache_;
  mutable std::map<int, Matrix> diffCache_;
};

struct CohomologyAtDegree {
  int dimension = 0;
  /// Columns are representative cocycles in the degree-t basis.
  Matrix representatives;
};

/// dim ker(d^t) - rank(d^{t-1}) with explicit representatives; requires the
/// three neighbouring components to be rational-entried and finite.
CohomologyAtDegree cohomologyAtDegree(const CochainComplex& c, int t);

/// A chain map between two complexes, presented blockwise.
struct ChainMap {
  const CochainComplex* source = nullptr;
  const CochainComplex* target = nullptr;
  std::function<Matrix(int)> block;  // dim_target(t) x dim_source(t)

  /// First degree in [t0,t1] where the chain identity fails, if any.
  std::optional<int> firstChainDefect(int t0, int t1) const;
};

/// Standard mapping cone: Cone(f)^t = B^t + A^{t+1}, d(b,a) = (d_B b + f a, -d_A a).
/// Rejects maps that are not chain maps on the inspected window.
std::shared_ptr<CochainComplex> mappingCone(const ChainMap& f, int checkT0, int checkT1);

/// Exact H ranks of a complex over a window, as a degree -> dim map.
std::map<int, int> cohomologyRanks(const CochainComplex& c, int t0, int t1);
bool acyclicOnWindow(const CochainComplex& c, int t0, int t1);

/// Contraction data (delta_i, eta_i) for a finite exact sequence
/// 0 -> K^0 -> ... -> K^b -> 0, satisfying exactly
///   eta_i o eta_{i+1} = 0,  eta_0 o delta_0 = id,
///   delta_i o eta_i + eta_{i+1} o delta_{i+1} = id.
struct ContractionData {
  std::vector<Matrix> delta;  // delta[i] : K^i -> K^{i+1}, i = 0..b-1
  std::vector<Matrix> eta;    // eta[i]   : K^{i+1} -> K^i, i = 0..b-1
  bool identitiesHold() const;
};

/// Builds the contraction by downward induction: split the last surjection,
/// then iteratively split ker delta_{r+1} and correct by the projector
/// P_{r+1} = id - eta_{r+1} o delta_{r+1}. Splitting choices come from
/// column-pivoted exact elimination, so the output is deterministic.
/// Throws std::invalid_argument("not exact at position i ...") otherwise.
ContractionData buildContraction(const std::vector<Matrix>& d);

}  // namespace dgmfd

#endif
