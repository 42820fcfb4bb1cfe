#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgmfd/graded.hpp"
#include "dgmfd/matrix.hpp"
#include "dgmfd/scalar.hpp"

using namespace dgmfd;

TEST_CASE("scalar arithmetic is exact and canonical") {
  Scalar x = Scalar::variable(0);
  Scalar y = Scalar::variable(1);
  Scalar p = (x + y) * (x - y);
  Scalar q = x * x - y * y;
  CHECK(p == q);
  CHECK((p - q).isZero());
  CHECK(Scalar(Rational(2, 4)) == Scalar(Rational(1, 2)));
  CHECK(p.derivative(0) == Scalar(2) * x);
  CHECK(p.evaluate({Rational(3), Rational(2)}) == Rational(5));
  Scalar sub = p.substitute({y, x});
  CHECK(sub == y * y - x * x);
}

TEST_CASE("polynomial exact division") {
  Scalar x = Scalar::variable(0);
  Scalar y = Scalar::variable(1);
  Scalar a = (x * x + y) * (x - Scalar(3) * y);
  CHECK(a.dividedExactlyBy(x * x + y) == x - Scalar(3) * y);
  CHECK_THROWS(a.dividedExactlyBy(x + Scalar(1)));
}

TEST_CASE("rank over rationals and polynomials") {
  Matrix m(2, 3);
  m.at(0, 0) = Scalar(1);
  m.at(0, 1) = Scalar(2);
  m.at(1, 0) = Scalar(2);
  m.at(1, 1) = Scalar(4);
  CHECK(m.rank() == 1);
  m.at(1, 2) = Scalar(1);
  CHECK(m.rank() == 2);

  Scalar x = Scalar::variable(0);
  Matrix p(2, 2);
  p.at(0, 0) = x;
  p.at(0, 1) = Scalar(1);
  p.at(1, 0) = x * x;
  p.at(1, 1) = x;
  CHECK(p.rank() == 1);  // rows proportional over Q(x)
  p.at(1, 1) = x + Scalar(1);
  CHECK(p.rank() == 2);
}

TEST_CASE("kernel, solve, right inverse") {
  Matrix m(2, 3);
  m.at(0, 0) = Scalar(1);
  m.at(0, 2) = Scalar(-1);
  m.at(1, 1) = Scalar(2);
  Matrix k = m.kernelBasis();
  CHECK(k.cols() == 1);
  CHECK((m * k).isZero());
  Matrix r = m.rightInverse().value();
  CHECK(m * r == Matrix::identity(2));

  Matrix b(2, 1);
  b.at(0, 0) = Scalar(3);
  b.at(1, 0) = Scalar(4);
  Matrix sol = m.solve(b).value();
  CHECK(m * sol == b);
}

TEST_CASE("graded space canonical order and constructions") {
  GradedVectorSpace v({{1, {"b", "a"}}, {2, {"c"}}});
  CHECK(v.labels(1) == std::vector<std::string>{"a", "b"});
  CHECK(v.dim(1) == 2);
  CHECK(v.totalDim() == 3);
  CHECK(v.dual().dim(-2) == 1);
  GradedVectorSpace t = GradedVectorSpace::tensor(v, v);
  CHECK(t.dim(2) == 4);
  CHECK(t.dim(3) == 4);
  CHECK(t.dim(4) == 1);
  CHECK(v.shifted(1).dim(0) == 2);
}

TEST_CASE("symmetric powers obey the Koszul rule") {
  // S^2 of an odd line is zero, of an even line it is a line.
  GradedVectorSpace odd = GradedVectorSpace::line(1, "e");
  GradedVectorSpace even = GradedVectorSpace::line(2, "f");
  CHECK(symmetricPower(odd, 2).isZero());
  CHECK(symmetricPower(even, 2).dim(4) == 1);
  // Two odd lines: S^2 is the single mixed word.
  GradedVectorSpace two({{1, {"e1", "e2"}}});
  CHECK(symmetricPower(two, 2).totalDim() == 1);
  CHECK(symmetricPower(two, 2).dim(2) == 1);
}

TEST_CASE("graded map composition, dual, double dual") {
  GradedVectorSpace v({{1, {"a"}}, {2, {"b"}}});
  GradedMap f(v, v, 1);
  f.setEntry(1, 0, 0, Scalar(5));  // a -> 5 b
  GradedMap ff = f.compose(f);
  CHECK(ff.isZero());
  GradedMap id = GradedMap::identity(v);
  CHECK(f.compose(id) == f);
  CHECK(id.compose(f) == f);

  // Dual of a degree-k line is a degree -k line; dual map transposes with sign.
  GradedMap fd = f.dualMap();
  CHECK(fd.source() == v.dual());
  CHECK(fd.degreeShift() == 1);
  // <f'(b'), a> = (-1)^{|f||b'|}<b', f a> = (-1)^{1*(-2),parity 0} * 5
  CHECK(fd.block(-2).at(0, 0) == Scalar(5));

  // Double dual is the identity matrix in the induced basis.
  GradedMap dd = doubleDualIso(v);
  for (int d : v.degrees()) CHECK(dd.block(d) == Matrix::identity(v.dim(d)));
}

TEST_CASE("tensor swap carries Koszul sign") {
  GradedVectorSpace a = GradedVectorSpace::line(1, "a");
  GradedVectorSpace b = GradedVectorSpace::line(1, "b");
  GradedMap swap = tensorDualSwap(a, b);
  CHECK(swap.block(-2).at(0, 0) == Scalar(-1));
  GradedMap swapEven = tensorDualSwap(GradedVectorSpace::line(2, "a"), b);
  CHECK(swapEven.block(-3).at(0, 0) == Scalar(1));
}

TEST_CASE("cohomology of small complexes") {
  // 0 -> Q --id--> Q -> 0 : H = 0 at both degrees.
  GradedVectorSpace v({{0, {"u"}}, {1, {"v"}}});
  GradedMap d(v, v, 1);
  d.setEntry(0, 0, 0, Scalar(1));
  FiniteComplex c(v, d);
  CHECK(cohomologyAtDegree(c, 0).dimension == 0);
  CHECK(cohomologyAtDegree(c, 1).dimension == 0);

  // Zero differential: H dims equal component dims.
  GradedVectorSpace w({{0, {"a"}}, {1, {"b1", "b2"}}, {2, {"c"}}});
  FiniteComplex z(w, GradedMap::zero(w, w, 1));
  CHECK(cohomologyAtDegree(z, 0).dimension == 1);
  CHECK(cohomologyAtDegree(z, 1).dimension == 2);
  CHECK(cohomologyAtDegree(z, 2).dimension == 1);

  // d = [1 0] : Q^2 -> Q in degrees 1 -> 2: H^1 = 1, H^2 = 0.
  GradedVectorSpace u({{1, {"p", "q"}}, {2, {"r"}}});
  GradedMap du(u, u, 1);
  du.setEntry(1, 0, 0, Scalar(1));
  FiniteComplex cu(u, du);
  CHECK(cohomologyAtDegree(cu, 1).dimension == 1);
  CHECK(cohomologyAtDegree(cu, 2).dimension == 0);
  // The representative is an actual cocycle.
  auto h1 = cohomologyAtDegree(cu, 1);
  CHECK(h1.representatives.cols() == 1);
  CHECK((cu.differential(1) * h1.representatives).isZero());
}

TEST_CASE("mapping cone detects non-chain maps and computes cones") {
  GradedVectorSpace u({{1, {"p", "q"}}, {2, {"r"}}});
  FiniteComplex a(u, GradedMap::zero(u, u, 1));
  GradedVectorSpace w = GradedVectorSpace::line(1, "s");
  FiniteComplex b(w, GradedMap::zero(w, w, 1));

  // cone(id) on a finite complex is acyclic.
  ChainMap idm{&a, &a, [&](int t) { return Matrix::identity(a.dimension(t)); }};
  auto cone = mappingCone(idm, -1, 3);
  CHECK(acyclicOnWindow(*cone, -1, 3));

  // cone(0 -> C) is C shifted.
  GradedVectorSpace zero;
  FiniteComplex zc(zero, GradedMap::zero(zero, zero, 1));
  ChainMap zm{&zc, &a, [&](int t) { return Matrix::zero(a.dimension(t), 0); }};
  auto cone0 = mappingCone(zm, -1, 3);
  CHECK(cohomologyRanks(*cone0, 0, 3) == cohomologyRanks(a, 0, 3));

  // The quasi-iso [1 0] : (Q^2,0) -> (Q,0): cone has H matching the kernel.
  ChainMap pr{&a, &b, [&](int t) {
                Matrix m(b.dimension(t), a.dimension(t));
                if (t == 1) m.at(0, 0) = Scalar(1);
                return m;
              }};
  auto conePr = mappingCone(pr, 0, 3);
  auto ranks = cohomologyRanks(*conePr, 0, 3);
  CHECK(ranks[0] == 1);  // the kernel line, shifted down by one
  CHECK(ranks[1] == 1);  // r is not hit
  CHECK(ranks[2] == 0);
}

TEST_CASE("buildContraction on the basic split sequence") {
  // 0 -> Q --[1,0]^T--> Q^2 --[0,1]--> Q -> 0
  Matrix d0(2, 1), d1(1, 2);
  d0.at(0, 0) = Scalar(1);
  d1.at(0, 1) = Scalar(1);
  ContractionData c = buildContraction({d0, d1});
  CHECK(c.identitiesHold());
  CHECK(c.eta[0] * c.delta[0] == Matrix::identity(1));
  CHECK(c.delta[0] * c.eta[0] + c.eta[1] * c.delta[1] == Matrix::identity(2));

  // Length-1 identity sequence: eta_0 = id.
  ContractionData c1 = buildContraction({Matrix::identity(3)});
  CHECK(c1.eta[0] == Matrix::identity(3));

  // Non-exact input is rejected with a position.
  Matrix bad(1, 1);
  CHECK_THROWS_WITH_AS(buildContraction({bad}), doctest::Contains("not exact at position"),
                       std::invalid_argument);
}
