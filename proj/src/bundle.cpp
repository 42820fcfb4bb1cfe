#include "dgmfd/bundle.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace dgmfd {

std::vector<std::vector<Rational>> deterministicSampleSet(int affineDim) {
  std::vector<std::vector<Rational>> pts;
  if (affineDim == 0) {
    pts.push_back({});
    return pts;
  }
  static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
  std::vector<Rational> origin(affineDim, Rational(0));
  pts.push_back(origin);
  for (int i = 0; i < affineDim; ++i) {
    auto p = origin;
    p[i] = 1;
    pts.push_back(p);
  }
  pts.emplace_back(affineDim, Rational(1));
  std::vector<Rational> pr(affineDim), neg(affineDim);
  for (int i = 0; i < affineDim; ++i) {
    pr[i] = primes[i % 8];
    neg[i] = -(i + 1);
  }
  pts.push_back(pr);
  pts.push_back(neg);
  return pts;
}

namespace {

GeneratorTablePtr makeFunctionTable(const GradedVectorSpace& fibre) {
  auto t = std::make_shared<GeneratorTable>();
  for (int i = 0; i < fibre.totalDim(); ++i) {
    auto [deg, idx] = fibre.unflatten(i);
    t->add(fibre.labels(deg)[idx] + "'", -deg);
  }
  return t;
}

int extractionSign(const GradedVectorSpace& v, const SymWord& w, unsigned mask) {
  // Koszul sign of reordering w so the masked positions come first, both
  // parts keeping their relative order.
  int sign = 1;
  int unchosenOddBefore = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    bool odd = (v.unflatten(w[i]).first % 2) != 0;
    if (mask & (1u << i)) {
      if (odd && (unchosenOddBefore % 2)) sign = -sign;
    } else if (odd) {
      ++unchosenOddBefore;
    }
  }
  return sign;
}

/// Sum over unordered partitions of the word's positions into nonempty
/// blocks: sign * outer(block values). Blocks are ordered by least position;
/// the Koszul sign is the cost of that rearrangement of letters.
FibreVector partitionCompose(const GradedVectorSpace& sourceFibre,
                             const GradedVectorSpace& midFibre, const SymWord& word,
                             const std::function<FibreVector(const SymWord&)>& blockFn,
                             const std::function<FibreVector(const SymWord&)>& outerFn) {
  FibreVector out;
  const size_t n = word.size();
  if (n == 0) {
    for (auto& [a, c] : outerFn({}))
      if (!c.isZero()) out[a] += c;
    return out;
  }
  std::vector<std::vector<int>> blocks;
  std::vector<int> remaining(n);
  for (size_t i = 0; i < n; ++i) remaining[i] = static_cast<int>(i);

  std::function<void(std::vector<int>)> rec = [&](std::vector<int> rest) {
    if (rest.empty()) {
      // Koszul sign of rearranging the letters into block order.
      std::vector<int> arranged;
      for (auto& b : blocks)
        for (int pos : b) arranged.push_back(pos);
      int sign = 1;
      for (size_t i = 0; i < arranged.size(); ++i)
        for (size_t j = i + 1; j < arranged.size(); ++j)
          if (arranged[i] > arranged[j]) {
            bool oi = (sourceFibre.unflatten(word[arranged[i]]).first % 2) != 0;
            bool oj = (sourceFibre.unflatten(word[arranged[j]]).first % 2) != 0;
            if (oi && oj) sign = -sign;
          }
      // Evaluate blocks, expand the product of fibre vectors.
      struct Partial {
        SymWord midWord;
        int sign;
        Scalar coeff;
      };
      std::vector<Partial> partials{{{}, sign, Scalar(1)}};
      for (auto& b : blocks) {
        SymWord sub;
        for (int pos : b) sub.push_back(word[pos]);
        auto sorted = sortWord(sourceFibre, sub);
        if (!sorted) return;
        FibreVector val = blockFn(sorted->second);
        std::vector<Partial> next;
        for (auto& part : partials)
          for (auto& [a, c] : val) {
            if (c.isZero()) continue;
            Partial np = part;
            np.midWord.push_back(a);
            np.sign *= sorted->first;
            np.coeff = np.coeff * c;
            next.push_back(std::move(np));
          }
        partials = std::move(next);
        if (partials.empty()) return;
      }
      for (auto& part : partials) {
        auto sortedMid = sortWord(midFibre, part.midWord);
        if (!sortedMid) continue;
        FibreVector res = outerFn(sortedMid->second);
        for (auto& [a, c] : res) {
          Scalar v = c * part.coeff * Scalar(part.sign * sortedMid->first);
          if (!v.isZero()) {
            out[a] += v;
            if (out[a].isZero()) out.erase(a);
          }
        }
      }
      return;
    }
    // The block containing the first remaining position, plus any subset of
    // the rest.
    int head = rest[0];
    std::vector<int> tail(rest.begin() + 1, rest.end());
    unsigned subsets = 1u << tail.size();
    for (unsigned m = 0; m < subsets; ++m) {
      std::vector<int> block{head}, nextRest;
      for (size_t i = 0; i < tail.size(); ++i)
        if (m & (1u << i))
          block.push_back(tail[i]);
        else
          nextRest.push_back(tail[i]);
      blocks.push_back(block);
      rec(nextRest);
      blocks.pop_back();
    }
  };
  rec(remaining);
  return out;
}

}  // namespace

CurvedBundle::CurvedBundle(BaseSpec base, GradedVectorSpace fibre)
    : base_(base), fibre_(std::move(fibre)) {
  if (!fibre_.isZero()) {
    if (fibre_.minDegree() < 1)
      throw std::invalid_argument("fibres must be concentrated in positive degrees");
  }
  lambda_.resize(std::max(1, fibre_.isZero() ? 1 : amplitude()));
  table_ = makeFunctionTable(fibre_);
}

void CurvedBundle::setLambda(const SymWord& word, int outFlat, const Scalar& coeff) {
  auto sorted = sortWord(fibre_, word);
  if (!sorted || sorted->second != word)
    throw std::invalid_argument("setLambda expects a canonical word");
  int n = static_cast<int>(word.size());
  if (n >= static_cast<int>(lambda_.size()))
    throw std::invalid_argument("lambda_" + std::to_string(n) + " vanishes by degree bookkeeping");
  int outDeg = fibre_.unflatten(outFlat).first;
  if (outDeg != wordDegree(fibre_, word) + 1)
    throw std::invalid_argument("lambda must have degree +1");
  if (base_.isPoint() && !coeff.isConstant())
    throw std::invalid_argument("non-constant coefficient over the point base");
  auto& table = lambda_[n];
  if (coeff.isZero()) {
    auto it = table.find(word);
    if (it != table.end()) {
      it->second.erase(outFlat);
      if (it->second.empty()) table.erase(it);
    }
    return;
  }
  table[word][outFlat] = coeff;
}

FibreVector CurvedBundle::lambda(const SymWord& word) const {
  auto sorted = sortWord(fibre_, word);
  if (!sorted) return {};
  int n = static_cast<int>(word.size());
  if (n >= static_cast<int>(lambda_.size())) return {};
  auto it = lambda_[n].find(sorted->second);
  if (it == lambda_[n].end()) return {};
  FibreVector out;
  for (auto& [a, c] : it->second) out[a] = c * Scalar(sorted->first);
  return out;
}

const std::map<SymWord, FibreVector>& CurvedBundle::lambdaTable(int n) const {
  static const std::map<SymWord, FibreVector> empty;
  if (n < 0 || n >= static_cast<int>(lambda_.size())) return empty;
  return lambda_[n];
}

std::map<SymWord, Scalar> CurvedBundle::coderivation(const SymWord& word) const {
  std::map<SymWord, Scalar> out;
  const size_t n = word.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    SymWord chosen, rest;
    for (size_t i = 0; i < n; ++i)
      if (mask & (1u << i))
        chosen.push_back(word[i]);
      else
        rest.push_back(word[i]);
    int esign = extractionSign(fibre_, word, mask);
    FibreVector val = lambda(chosen);
    for (auto& [a, c] : val) {
      SymWord w = rest;
      w.insert(w.begin(), a);
      auto sorted = sortWord(fibre_, w);
      if (!sorted) continue;
      Scalar v = c * Scalar(esign * sorted->first);
      auto& acc = out[sorted->second];
      acc += v;
      if (acc.isZero()) out.erase(sorted->second);
    }
  }
  return out;
}

SuperDerivation CurvedBundle::dualDerivation() const {
  SuperDerivation q(table_, 1);
  for (int a = 0; a < fibre_.totalDim(); ++a) {
    AlgebraElement val(table_);
    for (int n = 0; n < static_cast<int>(lambda_.size()); ++n)
      for (auto& [w, fv] : lambda_[n]) {
        auto it = fv.find(a);
        if (it == fv.end() || it->second.isZero()) continue;
        val.addTerm(SuperMonomial{w}, it->second);
      }
    q.setGenValue(xiGen(a), val);
  }
  return q;
}

std::string StructureReport::summary() const {
  std::ostringstream os;
  for (auto& c : checks) {
    os << (c.pass ? "pass" : "FAIL") << "  " << c.relation;
    if (!c.word.empty()) os << "  at " << c.word;
    if (!c.pass && !c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  return os.str();
}

StructureReport validateStructure(const CurvedBundle& b) {
  StructureReport rep;
  const auto& fibre = b.fibre();
  // Grading bounds.
  {
    RelationCheck c;
    c.relation = "fibre concentrated in degrees [1,b]";
    c.pass = fibre.isZero() || fibre.minDegree() >= 1;
    rep.checks.push_back(c);
  }
  // Degree bookkeeping of each lambda_n is enforced at construction; record it.
  {
    RelationCheck c;
    c.relation = "deg(lambda_n) = +1 and lambda_n = 0 for n >= b";
    c.pass = true;
    rep.checks.push_back(c);
  }
  const int bAmp = fibre.isZero() ? 1 : fibre.maxDegree();
  auto relationName = [](int n) -> std::string {
    if (n == 0) return "lambda1(lambda0)=0";
    if (n == 1) return "lambda2(lambda0,x)+lambda1^2(x)=0";
    return "sum_{i+j=n+1} lambda_i lambda_j = 0 on S^" + std::to_string(n);
  };
  for (int n = 0;; ++n) {
    bool anyWord = false;
    for (auto& w : enumerateSymWords(fibre, n)) {
      if (wordDegree(fibre, w) > bAmp - 2) continue;  // residual lives in L^{deg+2}
      anyWord = true;
      FibreVector residual;
      for (auto& [w2, c] : b.coderivation(w)) {
        for (auto& [a, v] : b.lambda(w2)) {
          residual[a] += v * c;
          if (residual[a].isZero()) residual.erase(a);
        }
      }
      RelationCheck c;
      c.relation = relationName(n);
      c.word = wordName(fibre, w);
      c.pass = residual.empty();
      if (!c.pass) {
        auto& [a, v] = *residual.begin();
        auto [d, i] = fibre.unflatten(a);
        c.detail = "entry " + fibre.labels(d)[i] + ": " + v.str();
        rep.ok = false;
      }
      rep.checks.push_back(c);
    }
    if (n > 0 && !anyWord) break;
  }
  for (auto& c : rep.checks) rep.ok = rep.ok && c.pass;
  return rep;
}

bool isClassicalPoint(const CurvedBundle& b, const ClassicalPoint& p) {
  if (static_cast<int>(p.coords.size()) != b.base().affineDim) return false;
  for (auto& [a, c] : b.lambda({}))
    if (c.evaluate(p.coords) != 0) return false;
  return true;
}

FiniteComplex tangentComplexAt(const CurvedBundle& b, const ClassicalPoint& p) {
  if (!isClassicalPoint(b, p)) throw std::invalid_argument("not a classical point");
  const auto& fibre = b.fibre();
  const int m = b.base().affineDim;
  std::map<int, std::vector<std::string>> basis;
  if (m > 0) {
    std::vector<std::string> t;
    for (int i = 0; i < m; ++i) t.push_back("dx" + std::to_string(i + 1));
    basis[0] = t;
  }
  for (auto& [d, l] : fibre.support()) basis[d] = l;
  GradedVectorSpace space(basis);
  GradedMap d(space, space, 1);
  if (m > 0 && fibre.dim(1) > 0) {
    Matrix jac(fibre.dim(1), m);
    FibreVector l0 = b.lambda({});
    for (auto& [a, c] : l0) {
      auto [deg, idx] = fibre.unflatten(a);
      if (deg != 1) continue;
      for (int i = 0; i < m; ++i) jac.at(idx, i) = Scalar(c.derivative(i).evaluate(p.coords));
    }
    d.setBlock(0, std::move(jac));
  }
  for (int k = 1; k < (fibre.isZero() ? 1 : fibre.maxDegree()); ++k) {
    if (fibre.dim(k) == 0 || fibre.dim(k + 1) == 0) continue;
    Matrix blk(fibre.dim(k + 1), fibre.dim(k));
    for (int i = 0; i < fibre.dim(k); ++i) {
      FibreVector v = b.lambda({fibre.flatIndex(k, i)});
      for (auto& [a, c] : v) {
        auto [deg, idx] = fibre.unflatten(a);
        if (deg == k + 1) blk.at(idx, i) = Scalar(c.evaluate(p.coords));
      }
    }
    d.setBlock(k, std::move(blk));
  }
  return FiniteComplex(space, d);
}

LinftyMorphism::LinftyMorphism(std::shared_ptr<const CurvedBundle> source,
                               std::shared_ptr<const CurvedBundle> target,
                               std::vector<Scalar> baseMap)
    : source_(std::move(source)), target_(std::move(target)), baseMap_(std::move(baseMap)) {
  if (static_cast<int>(baseMap_.size()) != target_->base().affineDim)
    throw std::invalid_argument("base map must have one polynomial per target variable");
  phi_.resize(1);
}

void LinftyMorphism::setPhi(const SymWord& word, int outFlat, const Scalar& coeff) {
  if (word.empty()) throw std::invalid_argument("phi_0 does not exist");
  auto sorted = sortWord(source_->fibre(), word);
  if (!sorted || sorted->second != word)
    throw std::invalid_argument("setPhi expects a canonical word");
  int outDeg = target_->fibre().unflatten(outFlat).first;
  if (outDeg != wordDegree(source_->fibre(), word))
    throw std::invalid_argument("phi must have degree 0");
  size_t n = word.size();
  if (phi_.size() < n) phi_.resize(n);
  auto& table = phi_[n - 1];
  if (coeff.isZero()) {
    auto it = table.find(word);
    if (it != table.end()) {
      it->second.erase(outFlat);
      if (it->second.empty()) table.erase(it);
    }
    return;
  }
  table[word][outFlat] = coeff;
}

FibreVector LinftyMorphism::phi(const SymWord& word) const {
  if (word.empty()) return {};
  auto sorted = sortWord(source_->fibre(), word);
  if (!sorted) return {};
  size_t n = word.size();
  if (n > phi_.size()) return {};
  auto it = phi_[n - 1].find(sorted->second);
  if (it == phi_[n - 1].end()) return {};
  FibreVector out;
  for (auto& [a, c] : it->second) out[a] = c * Scalar(sorted->first);
  return out;
}

const std::map<SymWord, FibreVector>& LinftyMorphism::phiTable(int n) const {
  static const std::map<SymWord, FibreVector> empty;
  if (n < 1 || n > static_cast<int>(phi_.size())) return empty;
  return phi_[n - 1];
}

bool LinftyMorphism::isLinear() const {
  for (size_t n = 2; n <= phi_.size(); ++n)
    if (!phi_[n - 1].empty()) return false;
  return true;
}

GradedMap LinftyMorphism::phi1Map() const {
  GradedMap f(source_->fibre(), target_->fibre(), 0);
  for (auto& [w, fv] : phiTable(1)) {
    auto [sd, si] = source_->fibre().unflatten(w[0]);
    for (auto& [a, c] : fv) {
      auto [td, ti] = target_->fibre().unflatten(a);
      if (td == sd) f.setEntry(sd, ti, si, c);
    }
  }
  return f;
}

Matrix LinftyMorphism::baseJacobian() const {
  const int mN = target_->base().affineDim;
  const int mM = source_->base().affineDim;
  Matrix j(mN, mM);
  for (int r = 0; r < mN; ++r)
    for (int c = 0; c < mM; ++c) j.at(r, c) = baseMap_[r].derivative(c);
  return j;
}

Scalar LinftyMorphism::pullbackBase(const Scalar& s) const { return s.substitute(baseMap_); }

AlgebraElement LinftyMorphism::pullbackGenerator(int targetGenId) const {
  int a = target_->fibreIndexOfGen(targetGenId);
  AlgebraElement out(source_->functionTable());
  for (size_t n = 1; n <= phi_.size(); ++n)
    for (auto& [w, fv] : phi_[n - 1]) {
      auto it = fv.find(a);
      if (it == fv.end() || it->second.isZero()) continue;
      out.addTerm(SuperMonomial{w}, it->second);
    }
  return out;
}

AlgebraElement LinftyMorphism::pullback(const AlgebraElement& targetElement) const {
  std::map<int, AlgebraElement> genImages;
  for (int g = 0; g < target_->functionTable()->size(); ++g)
    genImages[g] = pullbackGenerator(g);
  return targetElement.substituted(baseMap_, genImages, source_->functionTable());
}

StructureReport LinftyMorphism::validate() const {
  StructureReport rep;
  const auto& L = source_->fibre();
  const auto& E = target_->fibre();
  const int bE = E.isZero() ? 1 : E.maxDegree();
  auto blockFn = [&](const SymWord& w) { return phi(w); };
  auto outerFn = [&](const SymWord& w) {
    FibreVector raw = target_->lambda(w);
    FibreVector out;
    for (auto& [a, c] : raw) out[a] = pullbackBase(c);
    return out;
  };
  for (int n = 0;; ++n) {
    bool anyWord = false;
    for (auto& w : enumerateSymWords(L, n)) {
      if (wordDegree(L, w) > bE - 1) continue;
      anyWord = true;
      // LHS: pr_E Phi(lambda-hat(w)).
      FibreVector lhs;
      for (auto& [w2, c] : source_->coderivation(w))
        for (auto& [a, v] : phi(w2)) {
          lhs[a] += v * c;
          if (lhs[a].isZero()) lhs.erase(a);
        }
      // RHS: pr_E mu-hat(Phi-hat(w)).
      FibreVector rhs = partitionCompose(L, E, w, blockFn, outerFn);
      FibreVector diff = lhs;
      for (auto& [a, c] : rhs) {
        diff[a] -= c;
        if (diff[a].isZero()) diff.erase(a);
      }
      RelationCheck c;
      c.relation = n == 0 ? "phi1(lambda0)=mu0" : ("morphism compatibility on S^" + std::to_string(n));
      c.word = wordName(L, w);
      c.pass = diff.empty();
      if (!c.pass) {
        auto& [a, v] = *diff.begin();
        auto [d, i] = E.unflatten(a);
        c.detail = "entry " + E.labels(d)[i] + ": " + v.str();
      }
      rep.checks.push_back(c);
    }
    if (n > 0 && !anyWord) break;
  }
  rep.ok = true;
  for (auto& c : rep.checks) rep.ok = rep.ok && c.pass;
  return rep;
}

LinftyMorphism LinftyMorphism::identity(std::shared_ptr<const CurvedBundle> b) {
  std::vector<Scalar> baseMap;
  for (int i = 0; i < b->base().affineDim; ++i) baseMap.push_back(Scalar::variable(i));
  LinftyMorphism out(b, b, std::move(baseMap));
  for (int i = 0; i < b->fibre().totalDim(); ++i) out.setPhi({i}, i, Scalar(1));
  return out;
}

LinftyMorphism LinftyMorphism::compose(const LinftyMorphism& outer, const LinftyMorphism& inner) {
  if (&outer.source() != &inner.target())
    throw std::invalid_argument("compose: middle bundles differ");
  std::vector<Scalar> baseMap;
  for (auto& f : outer.baseMap()) baseMap.push_back(inner.pullbackBase(f));
  LinftyMorphism out(inner.sourcePtr(), outer.targetPtr(), std::move(baseMap));
  const auto& L = inner.source().fibre();
  const auto& Emid = inner.target().fibre();
  const int bOut = outer.target().fibre().isZero() ? 1 : outer.target().fibre().maxDegree();
  auto blockFn = [&](const SymWord& w) { return inner.phi(w); };
  auto outerFn = [&](const SymWord& w) {
    FibreVector raw = outer.phi(w);
    FibreVector res;
    for (auto& [a, c] : raw) res[a] = inner.pullbackBase(c);
    return res;
  };
  for (int n = 1;; ++n) {
    bool anyWord = false;
    for (auto& w : enumerateSymWords(L, n)) {
      if (wordDegree(L, w) > bOut) continue;
      anyWord = true;
      FibreVector v = partitionCompose(L, Emid, w, blockFn, outerFn);
      for (auto& [a, c] : v) out.setPhi(w, a, c);
    }
    if (!anyWord) break;
  }
  return out;
}

namespace {

bool fullRankAtPoints(const Matrix& m, int wantRank,
                      const std::vector<std::vector<Rational>>& pts) {
  for (auto& p : pts)
    if (m.evaluated(p).rank() != wantRank) return false;
  return true;
}

}  // namespace

Classification classifyMorphism(const LinftyMorphism& phi,
                                const std::vector<ClassicalPoint>& lociSource,
                                const std::vector<ClassicalPoint>& lociTarget,
                                const std::vector<std::pair<int, int>>& correspondence) {
  Classification out;
  const auto& src = phi.source();
  const auto& tgt = phi.target();

  out.lociValid = true;
  for (auto& p : lociSource)
    if (!isClassicalPoint(src, p)) {
      out.lociValid = false;
      out.notes.push_back("a supplied source point is not classical");
    }
  for (auto& q : lociTarget)
    if (!isClassicalPoint(tgt, q)) {
      out.lociValid = false;
      out.notes.push_back("a supplied target point is not classical");
    }

  // Correspondence: a bijection respected by f.
  out.correspondenceRespected = correspondence.size() == lociSource.size() &&
                                correspondence.size() == lociTarget.size();
  std::vector<bool> hit(lociTarget.size(), false);
  for (auto& [i, j] : correspondence) {
    if (i < 0 || j < 0 || i >= static_cast<int>(lociSource.size()) ||
        j >= static_cast<int>(lociTarget.size()) || hit[j]) {
      out.correspondenceRespected = false;
      break;
    }
    hit[j] = true;
    for (int c = 0; c < tgt.base().affineDim; ++c)
      if (phi.baseMap()[c].evaluate(lociSource[i].coords) != lociTarget[j].coords[c]) {
        out.correspondenceRespected = false;
        out.notes.push_back("f does not map a source point to its partner");
      }
  }

  // Fibration: f a submersion and phi_1 degreewise surjective; over affine
  // bases both ranks are certified at the supplied points and at the
  // deterministic sample set.
  auto pts = deterministicSampleSet(src.base().affineDim);
  for (auto& p : lociSource) pts.push_back(p.coords);
  bool submersion = true;
  if (tgt.base().affineDim > 0)
    submersion = fullRankAtPoints(phi.baseJacobian(), tgt.base().affineDim, pts);
  if (!submersion) out.notes.push_back("'f is a submersion' fails");
  bool surjective = true;
  GradedMap p1 = phi.phi1Map();
  for (auto& [d, l] : tgt.fibre().support()) {
    Matrix blk = p1.block(d);
    if (!fullRankAtPoints(blk, static_cast<int>(l.size()), pts)) {
      surjective = false;
      out.notes.push_back("phi_1 not surjective in degree " + std::to_string(d));
    }
  }
  out.fibration = submersion && surjective;
  out.linear = phi.isLinear();
  out.scope = "classification relative to the supplied classical loci; affine ranks certified "
              "at supplied points and the deterministic sample set";

  // Weak equivalence: correspondence respected and the tangent-complex map a
  // quasi-isomorphism at every supplied pair (mapping cone acyclicity).
  out.weakEquivalence = out.lociValid && out.correspondenceRespected;
  if (out.weakEquivalence) {
    for (auto& [i, j] : correspondence) {
      FiniteComplex tcM = tangentComplexAt(src, lociSource[i]);
      FiniteComplex tcN = tangentComplexAt(tgt, lociTarget[j]);
      const auto& p = lociSource[i];
      Matrix jac = phi.baseJacobian().evaluated(p.coords);
      ChainMap f{&tcM, &tcN, [&, jac](int t) {
                   if (t == 0) return jac;
                   Matrix blk = p1.block(t);
                   return blk.evaluated(p.coords);
                 }};
      int lo = 0, hi = std::max(src.fibre().isZero() ? 1 : src.fibre().maxDegree(),
                                tgt.fibre().isZero() ? 1 : tgt.fibre().maxDegree()) + 1;
      try {
        auto cone = mappingCone(f, lo - 1, hi);
        if (!acyclicOnWindow(*cone, lo - 1, hi)) {
          out.weakEquivalence = false;
          out.notes.push_back("tangent complexes not quasi-isomorphic at a supplied pair");
        }
      } catch (const std::invalid_argument&) {
        out.weakEquivalence = false;
        out.notes.push_back("(f_*, phi_1) is not a chain map of tangent complexes");
      }
    }
  }
  return out;
}

}  // namespace dgmfd
