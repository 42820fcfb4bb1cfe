#include "dgmfd/super.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dgmfd {

int GeneratorTable::add(const std::string& name, int degree, std::optional<int> parity, int arity) {
  if (byName_.count(name)) throw std::invalid_argument("duplicate generator " + name);
  GeneratorInfo g;
  g.name = name;
  g.degree = degree;
  g.parity = parity ? (*parity & 1) : (((degree % 2) + 2) % 2);
  g.arity = arity;
  gens_.push_back(g);
  byName_[name] = static_cast<int>(gens_.size()) - 1;
  return static_cast<int>(gens_.size()) - 1;
}

int GeneratorTable::find(const std::string& name) const {
  auto it = byName_.find(name);
  return it == byName_.end() ? -1 : it->second;
}

std::optional<std::pair<int, SuperMonomial>> koszulSort(const GeneratorTable& table,
                                                        std::vector<int> letters) {
  // Insertion sort, counting transpositions past odd letters.
  int sign = 1;
  for (size_t i = 1; i < letters.size(); ++i) {
    int v = letters[i];
    size_t j = i;
    while (j > 0 && letters[j - 1] > v) {
      if (table.info(letters[j - 1]).parity && table.info(v).parity) sign = -sign;
      letters[j] = letters[j - 1];
      --j;
    }
    letters[j] = v;
  }
  for (size_t i = 1; i < letters.size(); ++i)
    if (letters[i] == letters[i - 1] && table.info(letters[i]).parity) return std::nullopt;
  return std::make_pair(sign, SuperMonomial{std::move(letters)});
}

int monomialDegree(const GeneratorTable& table, const SuperMonomial& m) {
  int d = 0;
  for (int l : m.letters) d += table.info(l).degree;
  return d;
}

int monomialParity(const GeneratorTable& table, const SuperMonomial& m) {
  int p = 0;
  for (int l : m.letters) p ^= table.info(l).parity;
  return p;
}

int monomialArity(const GeneratorTable& table, const SuperMonomial& m) {
  int a = 0;
  for (int l : m.letters) a += table.info(l).arity;
  return a;
}

std::string monomialName(const GeneratorTable& table, const SuperMonomial& m) {
  if (m.isOne()) return "1";
  std::string s;
  for (size_t i = 0; i < m.letters.size(); ++i)
    s += (i ? "." : "") + table.info(m.letters[i]).name;
  return s;
}

AlgebraElement AlgebraElement::scalar(GeneratorTablePtr table, const Scalar& s) {
  AlgebraElement a(std::move(table));
  a.addTerm(SuperMonomial{}, s);
  return a;
}

AlgebraElement AlgebraElement::generator(GeneratorTablePtr table, int id) {
  AlgebraElement a(std::move(table));
  a.addTerm(SuperMonomial{{id}}, Scalar(1));
  return a;
}

AlgebraElement AlgebraElement::monomialTerm(GeneratorTablePtr table, const SuperMonomial& m,
                                            const Scalar& c) {
  AlgebraElement a(std::move(table));
  a.addTerm(m, c);
  return a;
}

void AlgebraElement::addTerm(const SuperMonomial& m, const Scalar& c) {
  if (c.isZero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

Scalar AlgebraElement::coefficient(const SuperMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

int AlgebraElement::degree() const {
  if (terms_.empty()) throw std::logic_error("degree of zero element");
  int d = monomialDegree(*table_, terms_.begin()->first);
  for (auto& [m, c] : terms_)
    if (monomialDegree(*table_, m) != d) throw std::logic_error("inhomogeneous element");
  return d;
}

int AlgebraElement::parity() const {
  if (terms_.empty()) throw std::logic_error("parity of zero element");
  int p = monomialParity(*table_, terms_.begin()->first);
  for (auto& [m, c] : terms_)
    if (monomialParity(*table_, m) != p) throw std::logic_error("mixed parity element");
  return p;
}

bool AlgebraElement::isHomogeneous() const {
  if (terms_.empty()) return true;
  int d = monomialDegree(*table_, terms_.begin()->first);
  for (auto& [m, c] : terms_)
    if (monomialDegree(*table_, m) != d) return false;
  return true;
}

AlgebraElement AlgebraElement::degreeComponent(int t) const {
  AlgebraElement out(table_);
  for (auto& [m, c] : terms_)
    if (monomialDegree(*table_, m) == t) out.addTerm(m, c);
  return out;
}

AlgebraElement AlgebraElement::arityComponent(int a) const {
  AlgebraElement out(table_);
  for (auto& [m, c] : terms_)
    if (monomialArity(*table_, m) == a) out.addTerm(m, c);
  return out;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  AlgebraElement out = *this;
  out += o;
  return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  AlgebraElement out = *this;
  out -= o;
  return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (!table_) table_ = o.table_;
  for (auto& [m, c] : o.terms_) addTerm(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (!table_) table_ = o.table_;
  for (auto& [m, c] : o.terms_) addTerm(m, -c);
  return *this;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  AlgebraElement out(table_ ? table_ : o.table_);
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : o.terms_) {
      std::vector<int> letters = ma.letters;
      letters.insert(letters.end(), mb.letters.begin(), mb.letters.end());
      auto sorted = koszulSort(*out.table_, std::move(letters));
      if (!sorted) continue;
      out.addTerm(sorted->second, ca * cb * Scalar(sorted->first));
    }
  return out;
}

AlgebraElement AlgebraElement::operator*(const Scalar& s) const {
  AlgebraElement out(table_);
  for (auto& [m, c] : terms_) out.addTerm(m, c * s);
  return out;
}

AlgebraElement AlgebraElement::operator-() const {
  return *this * Scalar(-1);
}

AlgebraElement AlgebraElement::partialDerivative(int genId) const {
  AlgebraElement out(table_);
  int dp = table_->info(genId).parity;
  for (auto& [m, c] : terms_) {
    int prefixParity = 0;
    for (size_t i = 0; i < m.letters.size(); ++i) {
      if (m.letters[i] == genId) {
        int sign = (dp && prefixParity) ? -1 : 1;
        std::vector<int> rest;
        for (size_t j = 0; j < m.letters.size(); ++j)
          if (j != i) rest.push_back(m.letters[j]);
        out.addTerm(SuperMonomial{std::move(rest)}, c * Scalar(sign));
      }
      prefixParity ^= table_->info(m.letters[i]).parity;
    }
  }
  return out;
}

AlgebraElement AlgebraElement::substituted(const std::vector<Scalar>& baseImages,
                                           const std::map<int, AlgebraElement>& genImages,
                                           GeneratorTablePtr targetTable) const {
  AlgebraElement out(targetTable);
  for (auto& [m, c] : terms_) {
    AlgebraElement term = AlgebraElement::scalar(targetTable, c.substitute(baseImages));
    for (int l : m.letters) {
      auto it = genImages.find(l);
      if (it == genImages.end())
        throw std::logic_error("no image for generator " + table_->info(l).name);
      term = term * it->second;
      if (term.isZero()) break;
    }
    out += term;
  }
  return out;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")";
    if (!m.isOne()) os << "*" << monomialName(*table_, m);
    first = false;
  }
  return os.str();
}

SuperDerivation::SuperDerivation(GeneratorTablePtr table, int degree, int parityOverride)
    : table_(std::move(table)), degree_(degree),
      parity_(parityOverride >= 0 ? parityOverride : ((degree % 2) + 2) % 2) {}

void SuperDerivation::setBaseValue(int var, AlgebraElement v) {
  if (!v.isZero()) baseValues_[var] = std::move(v);
}

void SuperDerivation::setGenValue(int genId, AlgebraElement v) {
  if (!v.isZero()) genValues_[genId] = std::move(v);
}

AlgebraElement SuperDerivation::baseValue(int var) const {
  auto it = baseValues_.find(var);
  return it == baseValues_.end() ? AlgebraElement(table_) : it->second;
}

AlgebraElement SuperDerivation::genValue(int genId) const {
  auto it = genValues_.find(genId);
  return it == genValues_.end() ? AlgebraElement(table_) : it->second;
}

AlgebraElement SuperDerivation::apply(const AlgebraElement& a) const {
  AlgebraElement out(table_);
  for (auto& [m, c] : a.terms()) {
    // Base-coefficient part: X(c) * m; coefficients are even, no sign.
    if (!baseValues_.empty()) {
      for (auto& [var, val] : baseValues_) {
        Scalar dc = c.derivative(var);
        if (dc.isZero()) continue;
        out += val * AlgebraElement::monomialTerm(table_, m, dc);
      }
    }
    // Letter part: Leibniz with Koszul signs past the prefix.
    int prefixParity = 0;
    for (size_t i = 0; i < m.letters.size(); ++i) {
      int gid = m.letters[i];
      auto it = genValues_.find(gid);
      if (it != genValues_.end()) {
        int sign = (parity_ && prefixParity) ? -1 : 1;
        std::vector<int> prefix(m.letters.begin(), m.letters.begin() + static_cast<long>(i));
        std::vector<int> suffix(m.letters.begin() + static_cast<long>(i) + 1, m.letters.end());
        AlgebraElement term =
            AlgebraElement::monomialTerm(table_, SuperMonomial{prefix}, c * Scalar(sign));
        term = term * it->second;
        term = term * AlgebraElement::monomialTerm(table_, SuperMonomial{suffix}, Scalar(1));
        out += term;
      }
      prefixParity ^= table_->info(gid).parity;
    }
  }
  return out;
}

SuperDerivation SuperDerivation::operator+(const SuperDerivation& o) const {
  SuperDerivation out = *this;
  for (auto& [v, val] : o.baseValues_) {
    AlgebraElement s = out.baseValue(v) + val;
    out.baseValues_.erase(v);
    out.setBaseValue(v, s);
  }
  for (auto& [g, val] : o.genValues_) {
    AlgebraElement s = out.genValue(g) + val;
    out.genValues_.erase(g);
    out.setGenValue(g, s);
  }
  return out;
}

SuperDerivation SuperDerivation::operator-(const SuperDerivation& o) const {
  return *this + o.scaled(Scalar(-1));
}

SuperDerivation SuperDerivation::scaled(const Scalar& s) const {
  SuperDerivation out(table_, degree_, parity_);
  for (auto& [v, val] : baseValues_) out.setBaseValue(v, val * s);
  for (auto& [g, val] : genValues_) out.setGenValue(g, val * s);
  return out;
}

SuperDerivation SuperDerivation::leftMultiplied(const AlgebraElement& g) const {
  if (g.isZero()) return SuperDerivation(table_, degree_, parity_);
  SuperDerivation out(table_, degree_ + g.degree(), (parity_ + g.parity()) & 1);
  for (auto& [v, val] : baseValues_) out.setBaseValue(v, g * val);
  for (auto& [gid, val] : genValues_) out.setGenValue(gid, g * val);
  return out;
}

bool SuperDerivation::isZero() const {
  for (auto& [v, val] : baseValues_)
    if (!val.isZero()) return false;
  for (auto& [g, val] : genValues_)
    if (!val.isZero()) return false;
  return true;
}

bool SuperDerivation::operator==(const SuperDerivation& o) const {
  return (*this - o).isZero();
}

SuperDerivation SuperDerivation::commutator(const SuperDerivation& a, const SuperDerivation& b) {
  int sign = (a.parity_ && b.parity_) ? -1 : 1;
  SuperDerivation out(a.table_, a.degree_ + b.degree_, (a.parity_ + b.parity_) & 1);
  std::vector<int> vars;
  for (auto& [v, val] : a.baseValues_) vars.push_back(v);
  for (auto& [v, val] : b.baseValues_) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  for (int v : vars)
    out.setBaseValue(v, a.apply(b.baseValue(v)) - b.apply(a.baseValue(v)) * Scalar(sign));
  std::vector<int> gens;
  for (auto& [g, val] : a.genValues_) gens.push_back(g);
  for (auto& [g, val] : b.genValues_) gens.push_back(g);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (int g : gens)
    out.setGenValue(g, a.apply(b.genValue(g)) - b.apply(a.genValue(g)) * Scalar(sign));
  return out;
}

std::vector<SuperMonomial> enumerateMonomials(const GeneratorTable& table, int degree,
                                              const std::function<bool(int)>& letterOk) {
  std::vector<int> eligible;
  for (int g = 0; g < table.size(); ++g) {
    if (letterOk && !letterOk(g)) continue;
    if (table.info(g).degree >= 0)
      throw std::logic_error("enumerateMonomials requires negative-degree letters");
    eligible.push_back(g);
  }
  std::vector<SuperMonomial> out;
  std::vector<int> word;
  std::function<void(size_t, int)> rec = [&](size_t start, int remaining) {
    if (remaining == 0) {
      out.push_back(SuperMonomial{word});
      return;
    }
    if (remaining > 0) return;  // letters only lower the degree
    for (size_t i = start; i < eligible.size(); ++i) {
      int g = eligible[i];
      if (table.info(g).parity && !word.empty() && word.back() == g) continue;
      word.push_back(g);
      rec(i, remaining - table.info(g).degree);
      word.pop_back();
    }
  };
  rec(0, degree);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SymWord> enumerateSymWords(const GradedVectorSpace& v, int n) {
  std::vector<SymWord> out;
  const int total = v.totalDim();
  std::vector<int> word;
  std::function<void(int, int)> rec = [&](int start, int remaining) {
    if (remaining == 0) {
      out.push_back(word);
      return;
    }
    for (int g = start; g < total; ++g) {
      bool odd = (v.unflatten(g).first % 2) != 0;
      if (odd && !word.empty() && word.back() == g) continue;
      word.push_back(g);
      rec(odd ? g + 1 : g, remaining - 1);
      word.pop_back();
    }
  };
  rec(0, n);
  return out;
}

int wordDegree(const GradedVectorSpace& v, const SymWord& w) {
  int d = 0;
  for (int g : w) d += v.unflatten(g).first;
  return d;
}

std::string wordName(const GradedVectorSpace& v, const SymWord& w) {
  std::string s = "[";
  for (size_t i = 0; i < w.size(); ++i) {
    auto [d, idx] = v.unflatten(w[i]);
    s += (i ? " " : "") + v.labels(d)[idx];
  }
  return s + "]";
}

std::optional<std::pair<int, SymWord>> sortWord(const GradedVectorSpace& v, SymWord w) {
  int sign = 1;
  for (size_t i = 1; i < w.size(); ++i) {
    int val = w[i];
    size_t j = i;
    while (j > 0 && w[j - 1] > val) {
      bool oddA = (v.unflatten(w[j - 1]).first % 2) != 0;
      bool oddB = (v.unflatten(val).first % 2) != 0;
      if (oddA && oddB) sign = -sign;
      w[j] = w[j - 1];
      --j;
    }
    w[j] = val;
  }
  for (size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1] && (v.unflatten(w[i]).first % 2) != 0) return std::nullopt;
  return std::make_pair(sign, std::move(w));
}

}  // namespace dgmfd
