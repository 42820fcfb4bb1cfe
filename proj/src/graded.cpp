#include "dgmfd/graded.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dgmfd {

GradedVectorSpace::GradedVectorSpace(std::map<int, std::vector<std::string>> basis) {
  for (auto& [deg, labels] : basis) {
    if (labels.empty()) continue;
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 1; i < sorted.size(); ++i)
      if (sorted[i] == sorted[i - 1])
        throw std::invalid_argument("duplicate basis label '" + sorted[i] + "' in degree " +
                                    std::to_string(deg));
    basis_.emplace(deg, std::move(sorted));
  }
}

int GradedVectorSpace::dim(int degree) const {
  auto it = basis_.find(degree);
  return it == basis_.end() ? 0 : static_cast<int>(it->second.size());
}

int GradedVectorSpace::totalDim() const {
  int n = 0;
  for (auto& [d, l] : basis_) n += static_cast<int>(l.size());
  return n;
}

const std::vector<std::string>& GradedVectorSpace::labels(int degree) const {
  static const std::vector<std::string> empty;
  auto it = basis_.find(degree);
  return it == basis_.end() ? empty : it->second;
}

std::vector<int> GradedVectorSpace::degrees() const {
  std::vector<int> out;
  for (auto& [d, l] : basis_) out.push_back(d);
  return out;
}

int GradedVectorSpace::minDegree() const {
  if (basis_.empty()) throw std::logic_error("minDegree of zero space");
  return basis_.begin()->first;
}

int GradedVectorSpace::maxDegree() const {
  if (basis_.empty()) throw std::logic_error("maxDegree of zero space");
  return basis_.rbegin()->first;
}

int GradedVectorSpace::flatIndex(int degree, int indexInDegree) const {
  int off = 0;
  for (auto& [d, l] : basis_) {
    if (d == degree) return off + indexInDegree;
    off += static_cast<int>(l.size());
  }
  throw std::logic_error("flatIndex: degree not in support");
}

std::pair<int, int> GradedVectorSpace::unflatten(int flatIndex) const {
  for (auto& [d, l] : basis_) {
    if (flatIndex < static_cast<int>(l.size())) return {d, flatIndex};
    flatIndex -= static_cast<int>(l.size());
  }
  throw std::logic_error("unflatten out of range");
}

GradedVectorSpace GradedVectorSpace::shifted(int s) const {
  std::map<int, std::vector<std::string>> b;
  for (auto& [d, l] : basis_) b[d - s] = l;
  GradedVectorSpace v;
  v.basis_ = std::move(b);
  return v;
}

GradedVectorSpace GradedVectorSpace::dual() const {
  std::map<int, std::vector<std::string>> b;
  for (auto& [d, l] : basis_) {
    std::vector<std::string> dl;
    for (auto& s : l) dl.push_back(s + "'");
    b[-d] = std::move(dl);
  }
  return GradedVectorSpace(std::move(b));
}

GradedVectorSpace GradedVectorSpace::directSum(const GradedVectorSpace& a, const GradedVectorSpace& b) {
  std::map<int, std::vector<std::string>> out;
  for (auto& [d, l] : a.basis_) out[d] = l;
  for (auto& [d, l] : b.basis_) {
    auto& v = out[d];
    v.insert(v.end(), l.begin(), l.end());
  }
  return GradedVectorSpace(std::move(out));
}

GradedVectorSpace GradedVectorSpace::tensor(const GradedVectorSpace& a, const GradedVectorSpace& b) {
  std::map<int, std::vector<std::string>> out;
  for (auto& [da, la] : a.basis_)
    for (auto& [db, lb] : b.basis_)
      for (auto& x : la)
        for (auto& y : lb) out[da + db].push_back("(" + x + "," + y + ")");
  return GradedVectorSpace(std::move(out));
}

GradedVectorSpace GradedVectorSpace::line(int degree, const std::string& label) {
  return GradedVectorSpace({{degree, {label}}});
}

GradedMap::GradedMap(GradedVectorSpace source, GradedVectorSpace target, int degreeShift)
    : source_(std::move(source)), target_(std::move(target)), shift_(degreeShift) {}

GradedMap GradedMap::identity(const GradedVectorSpace& v) {
  GradedMap f(v, v, 0);
  for (int d : v.degrees()) f.blocks_[d] = Matrix::identity(v.dim(d));
  return f;
}

GradedMap GradedMap::zero(const GradedVectorSpace& source, const GradedVectorSpace& target, int shift) {
  return GradedMap(source, target, shift);
}

Matrix GradedMap::block(int k) const {
  auto it = blocks_.find(k);
  if (it != blocks_.end()) return it->second;
  return Matrix::zero(target_.dim(k + shift_), source_.dim(k));
}

void GradedMap::setBlock(int k, Matrix m) {
  if (m.rows() != target_.dim(k + shift_) || m.cols() != source_.dim(k))
    throw std::invalid_argument("block shape mismatch at degree " + std::to_string(k));
  if (m.rows() == 0 || m.cols() == 0) return;
  if (m.isZero()) {
    blocks_.erase(k);
    return;
  }
  blocks_[k] = std::move(m);
}

void GradedMap::setEntry(int k, int row, int col, const Scalar& v) {
  auto it = blocks_.find(k);
  if (it == blocks_.end()) {
    Matrix m = Matrix::zero(target_.dim(k + shift_), source_.dim(k));
    m.at(row, col) = v;
    setBlock(k, std::move(m));
  } else {
    it->second.at(row, col) = v;
  }
}

bool GradedMap::isZero() const {
  for (auto& [k, m] : blocks_)
    if (!m.isZero()) return false;
  return true;
}

bool GradedMap::operator==(const GradedMap& o) const {
  if (!(source_ == o.source_) || !(target_ == o.target_) || shift_ != o.shift_) return false;
  std::set<int> keys;
  for (auto& [k, m] : blocks_) keys.insert(k);
  for (auto& [k, m] : o.blocks_) keys.insert(k);
  for (int k : keys)
    if (!(block(k) == o.block(k))) return false;
  return true;
}

GradedMap GradedMap::compose(const GradedMap& inner) const {
  if (!(inner.target_ == source_)) throw std::logic_error("compose: middle spaces differ");
  GradedMap out(inner.source_, target_, shift_ + inner.shift_);
  for (int k : inner.source_.degrees()) {
    Matrix b = block(k + inner.shift_) * inner.block(k);
    if (b.rows() && b.cols()) out.setBlock(k, std::move(b));
  }
  return out;
}

GradedMap GradedMap::operator+(const GradedMap& o) const {
  GradedMap out(source_, target_, shift_);
  for (int k : source_.degrees()) {
    Matrix b = block(k) + o.block(k);
    if (b.rows() && b.cols()) out.setBlock(k, std::move(b));
  }
  return out;
}

GradedMap GradedMap::operator-(const GradedMap& o) const {
  return *this + o.scaled(Scalar(-1));
}

GradedMap GradedMap::scaled(const Scalar& s) const {
  GradedMap out(source_, target_, shift_);
  for (auto& [k, m] : blocks_) out.setBlock(k, m * s);
  return out;
}

GradedMap GradedMap::dualMap() const {
  // <f'(w), v> = (-1)^{|f||w|} <w, f(v)>: block from (target degree -(k+shift))'
  // is the signed transpose of the degree-k block.
  GradedMap out(target_.dual(), source_.dual(), shift_);
  for (auto& [k, m] : blocks_) {
    int wdeg = k + shift_;  // dual generator degree is -wdeg
    int sign = ((shift_ % 2 != 0) && (wdeg % 2 != 0)) ? -1 : 1;
    out.setBlock(-wdeg, m.transpose() * Scalar(sign));
  }
  return out;
}

GradedMap GradedMap::shifted(int s) const {
  GradedMap out(source_.shifted(s), target_.shifted(s), shift_);
  for (auto& [k, m] : blocks_) out.setBlock(k - s, m);
  return out;
}

std::vector<Scalar> GradedMap::applyToBasis(int degree, int index) const {
  Matrix b = block(degree);
  std::vector<Scalar> out(b.rows());
  for (int r = 0; r < b.rows(); ++r) out[r] = b.at(r, index);
  return out;
}

namespace {

// Index maps between tensor bases: the canonical order of a tensor space is
// (degree asc, label lex) which is not the nested-loop order, so we locate
// labels explicitly.
int labelIndex(const GradedVectorSpace& v, int degree, const std::string& label) {
  const auto& l = v.labels(degree);
  auto it = std::lower_bound(l.begin(), l.end(), label);
  if (it == l.end() || *it != label) throw std::logic_error("label not found: " + label);
  return static_cast<int>(it - l.begin());
}

}  // namespace

GradedMap tensorMap(const GradedMap& f, const GradedMap& g) {
  GradedVectorSpace src = GradedVectorSpace::tensor(f.source(), g.source());
  GradedVectorSpace tgt = GradedVectorSpace::tensor(f.target(), g.target());
  GradedMap out(src, tgt, f.degreeShift() + g.degreeShift());
  std::map<int, Matrix> acc;
  for (int k : src.degrees()) acc[k] = Matrix::zero(tgt.dim(k + out.degreeShift()), src.dim(k));
  for (auto& [da, la] : f.source().support()) {
    Matrix fb = f.block(da);
    for (auto& [db, lb] : g.source().support()) {
      Matrix gb = g.block(db);
      const auto& lta = f.target().labels(da + f.degreeShift());
      const auto& ltb = g.target().labels(db + g.degreeShift());
      // (f (x) g)(a (x) b) = (-1)^{|g||a|} f(a) (x) g(b)
      int sign = ((g.degreeShift() % 2 != 0) && (da % 2 != 0)) ? -1 : 1;
      for (size_t ia = 0; ia < la.size(); ++ia)
        for (size_t ib = 0; ib < lb.size(); ++ib) {
          int col = labelIndex(src, da + db, "(" + la[ia] + "," + lb[ib] + ")");
          for (int ra = 0; ra < fb.rows(); ++ra) {
            if (fb.at(ra, static_cast<int>(ia)).isZero()) continue;
            for (int rb = 0; rb < gb.rows(); ++rb) {
              if (gb.at(rb, static_cast<int>(ib)).isZero()) continue;
              int tdeg = da + f.degreeShift() + db + g.degreeShift();
              int row = labelIndex(tgt, tdeg, "(" + lta[ra] + "," + ltb[rb] + ")");
              acc[da + db].at(row, col) +=
                  fb.at(ra, static_cast<int>(ia)) * gb.at(rb, static_cast<int>(ib)) * Scalar(sign);
            }
          }
        }
    }
  }
  for (auto& [k, m] : acc) out.setBlock(k, std::move(m));
  return out;
}

GradedMap directSumMap(const GradedMap& f, const GradedMap& g) {
  if (f.degreeShift() != g.degreeShift()) throw std::logic_error("directSumMap: shifts differ");
  GradedVectorSpace src = GradedVectorSpace::directSum(f.source(), g.source());
  GradedVectorSpace tgt = GradedVectorSpace::directSum(f.target(), g.target());
  GradedMap out(src, tgt, f.degreeShift());
  std::map<int, Matrix> acc;
  for (int k : src.degrees()) acc[k] = Matrix::zero(tgt.dim(k + out.degreeShift()), src.dim(k));
  auto emplacePart = [&](const GradedMap& part) {
    for (int k : part.source().degrees()) {
      Matrix b = part.block(k);
      if (b.isZero()) continue;
      const auto& slab = part.source().labels(k);
      const auto& tlab = part.target().labels(k + part.degreeShift());
      for (int c = 0; c < b.cols(); ++c) {
        int col = labelIndex(src, k, slab[c]);
        for (int r = 0; r < b.rows(); ++r) {
          if (b.at(r, c).isZero()) continue;
          int row = labelIndex(tgt, k + part.degreeShift(), tlab[r]);
          acc[k].at(row, col) += b.at(r, c);
        }
      }
    }
  };
  emplacePart(f);
  emplacePart(g);
  for (auto& [k, m] : acc) out.setBlock(k, std::move(m));
  return out;
}

GradedMap tensorDualSwap(const GradedVectorSpace& a, const GradedVectorSpace& b) {
  GradedVectorSpace src = GradedVectorSpace::tensor(a, b).dual();
  GradedVectorSpace tgt = GradedVectorSpace::tensor(b.dual(), a.dual());
  GradedMap out(src, tgt, 0);
  std::map<int, Matrix> acc;
  for (int k : src.degrees()) acc[k] = Matrix::zero(tgt.dim(k), src.dim(k));
  for (auto& [da, la] : a.support())
    for (auto& [db, lb] : b.support())
      for (auto& x : la)
        for (auto& y : lb) {
          int col = labelIndex(src, -(da + db), "(" + x + "," + y + ")'");
          int row = labelIndex(tgt, -(da + db), "(" + y + "'," + x + "')");
          // pairing sign: (-1)^{|a||b|} from transposing the two factors
          int sign = ((da % 2 != 0) && (db % 2 != 0)) ? -1 : 1;
          acc[-(da + db)].at(row, col) += Scalar(sign);
        }
  for (auto& [k, m] : acc) out.setBlock(k, std::move(m));
  return out;
}

GradedMap doubleDualIso(const GradedVectorSpace& v) {
  GradedVectorSpace dd = v.dual().dual();
  GradedMap out(v, dd, 0);
  for (auto& [d, l] : v.support()) out.setBlock(d, Matrix::identity(static_cast<int>(l.size())));
  return out;
}

GradedVectorSpace symmetricPower(const GradedVectorSpace& v, int n) {
  if (n == 0) return GradedVectorSpace::line(0, "[]");
  // Multisets of basis elements, odd-degree letters at most once.
  struct Gen {
    int degree;
    std::string label;
  };
  std::vector<Gen> gens;
  for (auto& [d, l] : v.support())
    for (auto& s : l) gens.push_back({d, s});
  std::map<int, std::vector<std::string>> out;
  std::vector<int> word;
  std::function<void(size_t, int, int)> rec = [&](size_t start, int remaining, int degree) {
    if (remaining == 0) {
      std::string lab = "[";
      for (size_t i = 0; i < word.size(); ++i) lab += (i ? " " : "") + gens[word[i]].label;
      lab += "]";
      out[degree].push_back(lab);
      return;
    }
    for (size_t g = start; g < gens.size(); ++g) {
      bool odd = gens[g].degree % 2 != 0;
      if (odd && !word.empty() && static_cast<size_t>(word.back()) == g) continue;
      word.push_back(static_cast<int>(g));
      rec(odd ? g + 1 : g, remaining - 1, degree + gens[g].degree);
      word.pop_back();
    }
  };
  rec(0, n, 0);
  return GradedVectorSpace(std::move(out));
}

std::vector<std::string> CochainComplex::basisLabels(int t) const {
  std::vector<std::string> out;
  for (int i = 0; i < dimension(t); ++i) out.push_back("e" + std::to_string(t) + "_" + std::to_string(i));
  return out;
}

void CochainComplex::checkDifferential(int t0, int t1) const {
  for (int t = t0; t < t1; ++t) {
    Matrix dd = differential(t + 1) * differential(t);
    if (!dd.isZero())
      throw std::logic_error("differential does not square to zero at degree " + std::to_string(t));
  }
}

FiniteComplex::FiniteComplex(GradedVectorSpace space, GradedMap d)
    : space_(std::move(space)), d_(std::move(d)) {
  if (d_.degreeShift() != 1) throw std::invalid_argument("complex differential must have shift +1");
  if (!space_.isZero())
    checkDifferential(space_.minDegree() - 1, space_.maxDegree() + 1);
}

std::vector<std::string> FiniteComplex::basisLabels(int t) const { return space_.labels(t); }

LazyComplex::LazyComplex(std::function<int(int)> dim, std::function<Matrix(int)> diff,
                         std::function<std::vector<std::string>(int)> labels)
    : dim_(std::move(dim)), diff_(std::move(diff)), labels_(std::move(labels)) {}

int LazyComplex::dimension(int t) const {
  auto it = dimCache_.find(t);
  if (it != dimCache_.end()) return it->second;
  int d = dim_(t);
  dimCache_[t] = d;
  return d;
}

std::vector<std::string> LazyComplex::basisLabels(int t) const {
  if (labels_) return labels_(t);
  return CochainComplex::basisLabels(t);
}

Matrix LazyComplex::differential(int t) const {
  auto it = diffCache_.find(t);
  if (it != diffCache_.end()) return it->second;
  Matrix m = diff_(t);
  diffCache_[t] = m;
  return m;
}

CohomologyAtDegree cohomologyAtDegree(const CochainComplex& c, int t) {
  Matrix dt = c.differential(t);
  Matrix dprev = c.differential(t - 1);
  Matrix kernel = dt.kernelBasis();
  int rankPrev = dprev.rank();
  CohomologyAtDegree out;
  out.dimension = kernel.cols() - rankPrev;
  // Representatives: kernel vectors that add new pivots after the image.
  Matrix aug = dprev.hstack(kernel);
  std::vector<int> pivots;
  aug.rref(&pivots);
  std::vector<int> chosen;
  for (int p : pivots)
    if (p >= dprev.cols()) chosen.push_back(p - dprev.cols());
  Matrix reps(kernel.rows(), static_cast<int>(chosen.size()));
  for (size_t j = 0; j < chosen.size(); ++j)
    for (int i = 0; i < kernel.rows(); ++i) reps.at(i, static_cast<int>(j)) = kernel.at(i, chosen[j]);
  out.representatives = std::move(reps);
  return out;
}

std::optional<int> ChainMap::firstChainDefect(int t0, int t1) const {
  for (int t = t0; t <= t1; ++t) {
    Matrix lhs = target->differential(t) * block(t);
    Matrix rhs = block(t + 1) * source->differential(t);
    if (!(lhs == rhs)) return t;
  }
  return std::nullopt;
}

namespace {

class ConeComplex : public CochainComplex {
 public:
  ConeComplex(const CochainComplex* a, const CochainComplex* b, std::function<Matrix(int)> f)
      : a_(a), b_(b), f_(std::move(f)) {}
  int dimension(int t) const override { return b_->dimension(t) + a_->dimension(t + 1); }
  Matrix differential(int t) const override {
    Matrix db = b_->differential(t);
    Matrix da = a_->differential(t + 1);
    Matrix ft = f_(t + 1);
    int nb = b_->dimension(t), na = a_->dimension(t + 1);
    Matrix m(b_->dimension(t + 1) + a_->dimension(t + 2), nb + na);
    for (int i = 0; i < db.rows(); ++i)
      for (int j = 0; j < db.cols(); ++j) m.at(i, j) = db.at(i, j);
    for (int i = 0; i < ft.rows(); ++i)
      for (int j = 0; j < ft.cols(); ++j) m.at(i, nb + j) = ft.at(i, j);
    for (int i = 0; i < da.rows(); ++i)
      for (int j = 0; j < da.cols(); ++j) m.at(db.rows() + i, nb + j) = -da.at(i, j);
    return m;
  }

 private:
  const CochainComplex* a_;
  const CochainComplex* b_;
  std::function<Matrix(int)> f_;
};

}  // namespace

std::shared_ptr<CochainComplex> mappingCone(const ChainMap& f, int checkT0, int checkT1) {
  if (auto bad = f.firstChainDefect(checkT0, checkT1))
    throw std::invalid_argument("not a chain map at degree " + std::to_string(*bad));
  return std::make_shared<ConeComplex>(f.source, f.target, f.block);
}

std::map<int, int> cohomologyRanks(const CochainComplex& c, int t0, int t1) {
  std::map<int, int> out;
  for (int t = t0; t <= t1; ++t) out[t] = cohomologyAtDegree(c, t).dimension;
  return out;
}

bool acyclicOnWindow(const CochainComplex& c, int t0, int t1) {
  for (auto& [t, h] : cohomologyRanks(c, t0, t1))
    if (h != 0) return false;
  return true;
}

bool ContractionData::identitiesHold() const {
  int b = static_cast<int>(delta.size());
  for (int i = 0; i + 1 < b; ++i)
    if (!(eta[i] * eta[i + 1]).isZero()) return false;
  if (!(eta[0] * delta[0] == Matrix::identity(delta[0].cols()))) return false;
  for (int i = 0; i < b; ++i) {
    Matrix lhs = delta[i] * eta[i];
    if (i + 1 < b) lhs = lhs + eta[i + 1] * delta[i + 1];
    if (!(lhs == Matrix::identity(delta[i].rows()))) return false;
  }
  return true;
}

ContractionData buildContraction(const std::vector<Matrix>& d) {
  const int b = static_cast<int>(d.size());
  if (b == 0) throw std::invalid_argument("empty sequence");
  // Exactness check by ranks.
  for (int i = 0; i <= b; ++i) {
    int dimK = i == 0 ? d[0].cols() : d[i - 1].rows();
    int rankIn = i == 0 ? 0 : d[i - 1].rank();
    int kerOut = i == b ? dimK : dimK - d[i].rank();
    if (rankIn != kerOut)
      throw std::invalid_argument("not exact at position " + std::to_string(i) +
                                  " (rank defect " + std::to_string(kerOut - rankIn) + ")");
  }
  for (int i = 0; i + 1 < b; ++i)
    if (!(d[i + 1] * d[i]).isZero())
      throw std::invalid_argument("not a complex: d_" + std::to_string(i + 1) + " d_" +
                                  std::to_string(i) + " != 0");

  ContractionData out;
  out.delta = d;
  out.eta.assign(b, Matrix());
  // eta_{b-1}: a right inverse of the last surjection.
  Matrix prevEta = d[b - 1].rightInverse().value();
  out.eta[b - 1] = prevEta;
  for (int r = b - 2; r >= 0; --r) {
    // P_{r+1} = id - eta_{r+1} delta_{r+1} projects onto ker delta_{r+1}.
    Matrix p = Matrix::identity(d[r + 1].cols()) - out.eta[r + 1] * d[r + 1];
    Matrix z = d[r + 1].kernelBasis();
    // Solve delta_r X = z columnwise (exactness guarantees solvability), then
    // eta_r = X o (coordinates of P in the kernel basis).
    Matrix x = d[r].solve(z).value();
    Matrix coords = z.solve(p).value();
    out.eta[r] = x * coords;
  }
  if (!out.identitiesHold()) throw std::logic_error("contraction identities failed");
  return out;
}

}  // namespace dgmfd
