#ifndef DGMFD_BUNDLE_HPP
#define DGMFD_BUNDLE_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dgmfd/graded.hpp"
#include "dgmfd/super.hpp"

namespace dgmfd {

/// The base of a bundle: affineDim = 0 is the point; otherwise affine
/// m-space with the polynomial ring in x1..xm as its function algebra.
struct BaseSpec {
  int affineDim = 0;
  bool isPoint() const { return affineDim == 0; }
  bool operator==(const BaseSpec& o) const { return affineDim == o.affineDim; }
};

/// Deterministic rational sample points used whenever a rank over an affine
/// base has to be certified by evaluation: the origin, the standard unit
/// points, the all-ones point, consecutive primes, and negative integers.
std::vector<std::vector<Rational>> deterministicSampleSet(int affineDim);

/// Sparse vector in the fibre of L (flat basis indexing, Scalar entries).
using FibreVector = std::map<int, Scalar>;

struct RelationCheck {
  std::string relation;  // e.g. "lambda1(lambda0)=0"
  std::string word;      // offending input word, when any
  bool pass = true;
  std::string detail;    // first offending entry, for failures
};

struct StructureReport {
  bool ok = true;
  std::vector<RelationCheck> checks;
  std::string summary() const;
};

/// A bundle of positively graded curved L-infinity[1] algebras: a base, a
/// graded fibre L concentrated in degrees [1,b], and Taylor coefficients
/// lambda_n : S^n L -> L of degree +1 for n = 0..b-1 (higher ones vanish by
/// degree bookkeeping), squaring to zero as a coderivation.
class CurvedBundle {
 public:
  CurvedBundle(BaseSpec base, GradedVectorSpace fibre);

  const BaseSpec& base() const { return base_; }
  const GradedVectorSpace& fibre() const { return fibre_; }
  int amplitude() const { return fibre_.isZero() ? 1 : fibre_.maxDegree(); }

  /// Sets the coefficient of `out` (flat index) in lambda_{|word|}(word).
  /// The word must be canonically sorted.
  void setLambda(const SymWord& word, int outFlat, const Scalar& coeff);
  void setLambda0(int outFlat, const Scalar& coeff) { setLambda({}, outFlat, coeff); }
  /// lambda_{|w|}(w) for an arbitrary (unsorted) word, with Koszul sign.
  FibreVector lambda(const SymWord& word) const;
  const std::map<SymWord, FibreVector>& lambdaTable(int n) const;
  int maxLambdaIndex() const { return static_cast<int>(lambda_.size()) - 1; }

  /// The full coderivation applied to a word: a formal sum of words.
  std::map<SymWord, Scalar> coderivation(const SymWord& word) const;

  /// The generator table of the function algebra Gamma(SL^v): one xi per
  /// fibre basis vector, degree negated.
  const GeneratorTablePtr& functionTable() const { return table_; }
  int xiGen(int fibreFlat) const { return fibreFlat; }
  int fibreIndexOfGen(int genId) const { return genId; }

  /// The homological vector field Q = lambda-transpose, as a degree +1
  /// derivation on the function algebra given by its values on generators.
  SuperDerivation dualDerivation() const;

  AlgebraElement algebraScalar(const Scalar& s) const {
    return AlgebraElement::scalar(table_, s);
  }

 private:
  BaseSpec base_;
  GradedVectorSpace fibre_;
  std::vector<std::map<SymWord, FibreVector>> lambda_;
  GeneratorTablePtr table_;
};

StructureReport validateStructure(const CurvedBundle& b);

struct ClassicalPoint {
  std::vector<Rational> coords;
};

/// Checks lambda_0(p) = 0 exactly.
bool isClassicalPoint(const CurvedBundle& b, const ClassicalPoint& p);

/// The tangent complex 0 -> T_p M -> L^1|_p -> ... -> L^b|_p -> 0 at a
/// classical point, with the Jacobian of lambda_0 followed by lambda_1|_p.
/// T_p M sits in degree 0, L^k in degree k.
FiniteComplex tangentComplexAt(const CurvedBundle& b, const ClassicalPoint& p);

/// A morphism of bundles: a polynomial base map f : M -> N together with
/// Taylor coefficients phi_n : S^n L -> f*E for n >= 1. Linear when
/// phi_n = 0 for all n >= 2.
class LinftyMorphism {
 public:
  LinftyMorphism(std::shared_ptr<const CurvedBundle> source,
                 std::shared_ptr<const CurvedBundle> target, std::vector<Scalar> baseMap);

  const CurvedBundle& source() const { return *source_; }
  const CurvedBundle& target() const { return *target_; }
  std::shared_ptr<const CurvedBundle> sourcePtr() const { return source_; }
  std::shared_ptr<const CurvedBundle> targetPtr() const { return target_; }
  const std::vector<Scalar>& baseMap() const { return baseMap_; }

  void setPhi(const SymWord& word, int outFlat, const Scalar& coeff);
  FibreVector phi(const SymWord& word) const;  // Koszul-sorted evaluation
  int maxPhiIndex() const { return static_cast<int>(phi_.size()); }
  const std::map<SymWord, FibreVector>& phiTable(int n) const;
  bool isLinear() const;

  /// phi_1 as a graded map L -> E with function entries.
  GradedMap phi1Map() const;
  /// Jacobian of the base map, an (m_N x m_M) matrix of Scalars.
  Matrix baseJacobian() const;
  /// Pullback of base functions: substitute y := f(x).
  Scalar pullbackBase(const Scalar& s) const;
  /// Pullback morphism on function algebras: eta^c -> sum <eta^c, phi_n(w)> xi^w.
  AlgebraElement pullbackGenerator(int targetGenId) const;
  AlgebraElement pullback(const AlgebraElement& targetElement) const;

  /// Coalgebra-morphism compatibility with the two coderivations, checked
  /// exactly on every word where the relation is nonvacuous.
  StructureReport validate() const;

  static LinftyMorphism identity(std::shared_ptr<const CurvedBundle> b);
  static LinftyMorphism compose(const LinftyMorphism& outer, const LinftyMorphism& inner);

 private:
  std::shared_ptr<const CurvedBundle> source_, target_;
  std::vector<Scalar> baseMap_;
  std::vector<std::map<SymWord, FibreVector>> phi_;  // index n-1 holds phi_n
};

struct Classification {
  bool lociValid = false;
  bool correspondenceRespected = false;
  bool fibration = false;
  bool linear = false;
  bool weakEquivalence = false;
  std::string scope;  // certification scope statement
  std::vector<std::string> notes;
  bool acyclicLinearFibration() const { return fibration && linear && weakEquivalence; }
};

/// Classification relative to the supplied classical loci. Submersion and
/// surjectivity over affine bases are certified at the supplied points plus
/// the deterministic sample set; the scope field says so.
Classification classifyMorphism(const LinftyMorphism& phi,
                                const std::vector<ClassicalPoint>& lociSource,
                                const std::vector<ClassicalPoint>& lociTarget,
                                const std::vector<std::pair<int, int>>& correspondence);

}  // namespace dgmfd

#endif
