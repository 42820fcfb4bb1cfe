#ifndef DGMFD_SUPER_HPP
#define DGMFD_SUPER_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dgmfd/graded.hpp"
#include "dgmfd/matrix.hpp"
#include "dgmfd/scalar.hpp"

namespace dgmfd {

/// The sign convention in force everywhere: transposing homogeneous a, b
/// introduces (-1)^{p(a)p(b)}. Parity is degree mod 2 unless a generator
/// says otherwise (wedge and form letters carry shifted parities).
struct GeneratorInfo {
  std::string name;
  int degree = 0;
  int parity = 0;  // 0 even, 1 odd
  int arity = 0;   // secondary weight: form degree / poly-vector arity
};

class GeneratorTable {
 public:
  int add(const std::string& name, int degree, std::optional<int> parity = std::nullopt,
          int arity = 0);
  int size() const { return static_cast<int>(gens_.size()); }
  const GeneratorInfo& info(int id) const { return gens_[id]; }
  int find(const std::string& name) const;  // -1 if absent

 private:
  std::vector<GeneratorInfo> gens_;
  std::map<std::string, int> byName_;
};

using GeneratorTablePtr = std::shared_ptr<const GeneratorTable>;

/// A monomial in the super generators: sorted letter ids, repeats allowed
/// only for even letters. The empty monomial is 1.
struct SuperMonomial {
  std::vector<int> letters;
  bool operator<(const SuperMonomial& o) const { return letters < o.letters; }
  bool operator==(const SuperMonomial& o) const { return letters == o.letters; }
  bool isOne() const { return letters.empty(); }
};

/// Sorts an arbitrary letter sequence into canonical order, returning the
/// Koszul sign, or nullopt when an odd letter repeats (the product is zero).
std::optional<std::pair<int, SuperMonomial>> koszulSort(const GeneratorTable& table,
                                                        std::vector<int> letters);

int monomialDegree(const GeneratorTable& table, const SuperMonomial& m);
int monomialParity(const GeneratorTable& table, const SuperMonomial& m);
int monomialArity(const GeneratorTable& table, const SuperMonomial& m);
std::string monomialName(const GeneratorTable& table, const SuperMonomial& m);

/// An element of the graded-commutative algebra Scalar (x) S(generators):
/// finitely many monomials with polynomial coefficients.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(GeneratorTablePtr table) : table_(std::move(table)) {}
  static AlgebraElement scalar(GeneratorTablePtr table, const Scalar& s);
  static AlgebraElement generator(GeneratorTablePtr table, int id);
  static AlgebraElement monomialTerm(GeneratorTablePtr table, const SuperMonomial& m, const Scalar& c);

  const GeneratorTablePtr& table() const { return table_; }
  const std::map<SuperMonomial, Scalar>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  /// Internal degree when homogeneous; throws if mixed.
  int degree() const;
  int parity() const;
  bool isHomogeneous() const;
  AlgebraElement degreeComponent(int t) const;
  /// Component with the given number of secondary-weight letters.
  AlgebraElement arityComponent(int a) const;

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(const AlgebraElement& o) const;
  AlgebraElement operator*(const Scalar& s) const;
  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

  void addTerm(const SuperMonomial& m, const Scalar& c);
  /// Coefficient of a monomial (zero scalar when absent).
  Scalar coefficient(const SuperMonomial& m) const;

  /// Left partial derivative with respect to a generator (degree -deg(gen),
  /// parity that of the generator).
  AlgebraElement partialDerivative(int genId) const;

  /// Substitute base variables and generators; `genImages` must cover every
  /// generator that occurs. Used for pullbacks along algebra morphisms.
  AlgebraElement substituted(const std::vector<Scalar>& baseImages,
                             const std::map<int, AlgebraElement>& genImages,
                             GeneratorTablePtr targetTable) const;

  std::string str() const;

 private:
  GeneratorTablePtr table_;
  std::map<SuperMonomial, Scalar> terms_;
};

inline AlgebraElement operator*(const Scalar& s, const AlgebraElement& a) { return a * s; }

/// A derivation of the algebra, determined by its values on the base
/// variables x_i and on the super generators, extended by the graded
/// Leibniz rule.
class SuperDerivation {
 public:
  SuperDerivation() = default;
  SuperDerivation(GeneratorTablePtr table, int degree, int parityOverride = -1);

  int degree() const { return degree_; }
  int parity() const { return parity_; }
  const GeneratorTablePtr& table() const { return table_; }

  void setBaseValue(int var, AlgebraElement v);
  void setGenValue(int genId, AlgebraElement v);
  AlgebraElement baseValue(int var) const;
  AlgebraElement genValue(int genId) const;

  AlgebraElement apply(const AlgebraElement& a) const;

  SuperDerivation operator+(const SuperDerivation& o) const;
  SuperDerivation operator-(const SuperDerivation& o) const;
  SuperDerivation scaled(const Scalar& s) const;
  /// Left multiplication g*X (still a derivation; Koszul handled in apply).
  SuperDerivation leftMultiplied(const AlgebraElement& g) const;
  bool isZero() const;
  bool operator==(const SuperDerivation& o) const;

  /// Graded commutator [a, b] = a b - (-1)^{p(a)p(b)} b a.
  static SuperDerivation commutator(const SuperDerivation& a, const SuperDerivation& b);

 private:
  GeneratorTablePtr table_;
  int degree_ = 0;
  int parity_ = 0;
  std::map<int, AlgebraElement> baseValues_;
  std::map<int, AlgebraElement> genValues_;
};

/// All monomials of the given internal degree whose letters satisfy the
/// predicate (defaults to all). Requires every eligible letter to have
/// strictly negative degree so the enumeration is finite.
std::vector<SuperMonomial> enumerateMonomials(const GeneratorTable& table, int degree,
                                              const std::function<bool(int)>& letterOk = nullptr);

/// Symmetric words in the basis of a graded space (flat indices, canonical
/// sorted order, odd letters at most once).
using SymWord = std::vector<int>;
std::vector<SymWord> enumerateSymWords(const GradedVectorSpace& v, int n);
int wordDegree(const GradedVectorSpace& v, const SymWord& w);
std::string wordName(const GradedVectorSpace& v, const SymWord& w);
/// Canonical sort of fibre-index words by (degree, label) with Koszul sign.
std::optional<std::pair<int, SymWord>> sortWord(const GradedVectorSpace& v, SymWord w);

}  // namespace dgmfd

#endif
