#include "dgmfd/scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace dgmfd {

Rational rationalFromString(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

std::string rationalToString(const Rational& r) {
  std::string num = r.get_num().get_str();
  std::string den = r.get_den().get_str();
  return num + "/" + den;
}

BaseMonomial::BaseMonomial(std::vector<unsigned> e) : exps(std::move(e)) {
  while (!exps.empty() && exps.back() == 0) exps.pop_back();
}

unsigned BaseMonomial::totalDegree() const {
  unsigned d = 0;
  for (unsigned e : exps) d += e;
  return d;
}

bool BaseMonomial::operator<(const BaseMonomial& o) const {
  // Graded order, then exponent-vector lex. Any fixed total order works; this
  // one keeps low-degree terms first for readable output.
  unsigned da = totalDegree(), db = o.totalDegree();
  if (da != db) return da < db;
  return exps < o.exps;
}

BaseMonomial BaseMonomial::var(int i) {
  std::vector<unsigned> e(static_cast<size_t>(i) + 1, 0);
  e[i] = 1;
  return BaseMonomial(std::move(e));
}

BaseMonomial BaseMonomial::operator*(const BaseMonomial& o) const {
  std::vector<unsigned> e(std::max(exps.size(), o.exps.size()), 0);
  for (size_t i = 0; i < exps.size(); ++i) e[i] += exps[i];
  for (size_t i = 0; i < o.exps.size(); ++i) e[i] += o.exps[i];
  return BaseMonomial(std::move(e));
}

bool BaseMonomial::divides(const BaseMonomial& o) const {
  if (exps.size() > o.exps.size()) return false;
  for (size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > o.exps[i]) return false;
  return true;
}

BaseMonomial BaseMonomial::dividedBy(const BaseMonomial& o) const {
  std::vector<unsigned> e = exps;
  for (size_t i = 0; i < o.exps.size(); ++i) e[i] -= o.exps[i];
  return BaseMonomial(std::move(e));
}

std::string BaseMonomial::str() const {
  if (isOne()) return "1";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!first) os << "*";
    os << "x" << (i + 1);
    if (exps[i] > 1) os << "^" << exps[i];
    first = false;
  }
  return os.str();
}

Scalar::Scalar(int n) {
  if (n != 0) terms_[BaseMonomial::one()] = Rational(n);
}

Scalar::Scalar(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  if (c != 0) terms_[BaseMonomial::one()] = c;
}

Scalar Scalar::variable(int i) {
  Scalar s;
  s.terms_[BaseMonomial::var(i)] = Rational(1);
  return s;
}

Scalar Scalar::fromTerms(std::map<BaseMonomial, Rational> terms) {
  Scalar s;
  for (auto& [m, c] : terms)
    if (c != 0) s.terms_.emplace(m, c);
  return s;
}

bool Scalar::isConstant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.isOne());
}

Rational Scalar::constantValue() const {
  auto it = terms_.find(BaseMonomial::one());
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Scalar::asRational() const {
  if (!isConstant()) throw std::logic_error("Scalar::asRational on non-constant " + str());
  return constantValue();
}

int Scalar::totalDegree() const {
  int d = -1;
  for (auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.totalDegree()));
  return d;
}

int Scalar::numVariablesUsed() const {
  size_t n = 0;
  for (auto& [m, c] : terms_) n = std::max(n, m.exps.size());
  return static_cast<int>(n);
}

void Scalar::addTerm(const BaseMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Scalar Scalar::operator-() const {
  Scalar s;
  for (auto& [m, c] : terms_) s.terms_.emplace(m, -c);
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar s = *this;
  s += o;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar s = *this;
  s -= o;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (auto& [m, c] : o.terms_) addTerm(m, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (auto& [m, c] : o.terms_) addTerm(m, -c);
  return *this;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar s;
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : o.terms_) s.addTerm(ma * mb, ca * cb);
  return s;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = *this * o;
  return *this;
}

Scalar Scalar::derivative(int i) const {
  Scalar s;
  for (auto& [m, c] : terms_) {
    if (static_cast<size_t>(i) >= m.exps.size() || m.exps[i] == 0) continue;
    std::vector<unsigned> e = m.exps;
    Rational k(e[i]);
    e[i] -= 1;
    s.addTerm(BaseMonomial(std::move(e)), c * k);
  }
  return s;
}

Rational Scalar::evaluate(const std::vector<Rational>& point) const {
  Rational out(0);
  for (auto& [m, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < m.exps.size(); ++i) {
      if (m.exps[i] == 0) continue;
      Rational v = i < point.size() ? point[i] : Rational(0);
      for (unsigned k = 0; k < m.exps[i]; ++k) t *= v;
    }
    out += t;
  }
  return out;
}

Scalar Scalar::substitute(const std::vector<Scalar>& values) const {
  Scalar out;
  for (auto& [m, c] : terms_) {
    Scalar t = Scalar(c);
    for (size_t i = 0; i < m.exps.size(); ++i) {
      if (m.exps[i] == 0) continue;
      Scalar v = i < values.size() ? values[i] : Scalar();
      for (unsigned k = 0; k < m.exps[i]; ++k) t *= v;
    }
    out += t;
  }
  return out;
}

Scalar Scalar::dividedExactlyBy(const Scalar& d) const {
  if (d.isZero()) throw std::domain_error("division by zero scalar");
  if (d.isConstant()) {
    Rational inv = 1 / d.constantValue();
    Scalar out;
    for (auto& [m, c] : terms_) out.terms_.emplace(m, c * inv);
    return out;
  }
  // Multivariate exact division by cancelling leading terms. The remainder
  // must vanish; Bareiss pivots guarantee divisibility.
  Scalar rem = *this, quot;
  const auto dLead = std::prev(d.terms_.end());
  while (!rem.isZero()) {
    auto rLead = std::prev(rem.terms_.end());
    if (!dLead->first.divides(rLead->first))
      throw std::domain_error("inexact polynomial division");
    BaseMonomial qm = rLead->first.dividedBy(dLead->first);
    Rational qc = rLead->second / dLead->second;
    Scalar piece;
    piece.terms_.emplace(qm, qc);
    quot += piece;
    rem -= piece * d;
  }
  return quot;
}

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms_) {
    if (!first) os << " + ";
    os << rationalToString(c);
    if (!m.isOne()) os << "*" << m.str();
    first = false;
  }
  return os.str();
}

}  // namespace dgmfd
