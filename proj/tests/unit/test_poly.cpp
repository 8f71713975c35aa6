#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "gkz/error.hpp"
#include "gkz/poly.hpp"

using namespace gkz;

namespace {

SparsePoly P(const char* text) { return SparsePoly::parse(text); }

const char* kCubicDisc = "b^2*c^2 - 4*a*c^3 - 4*b^3*d - 27*a^2*d^2 + 18*a*b*c*d";

}  // namespace

TEST_CASE("arithmetic") {
  CHECK((P("b^2 - 4*a*c") * P("a*c")) == P("a*b^2*c - 4*a^2*c^2"));
  auto p = P("3*x*y - 2*z + 7");
  CHECK((p + (-p)).is_zero());
  CHECK((P("a*d - b*c") * P("a*b*c*d")) == P("a^2*b*c*d^2 - a*b^2*c^2*d"));
  CHECK(pow(P("x + 1"), 3) == P("x^3 + 3*x^2 + 3*x + 1"));
  CHECK(Integer(-2) * P("x") == P("-2*x"));
  CHECK((P("x") - P("x")).is_zero());
  CHECK(P("(a+b)*(a-b)") == P("a^2 - b^2"));
}

TEST_CASE("variable alignment by name") {
  auto p = P("a*b");
  auto q = P("c + a");
  auto r = p * q;
  CHECK(r.variables() == std::vector<std::string>{"a", "b", "c"});
  CHECK(r == P("a^2*b + a*b*c"));
  CHECK(P("x + y") == P("y + x"));
  CHECK(P("x").aligned_to({"z", "x"}).variables() == std::vector<std::string>{"z", "x"});
  CHECK((P("x + y") - P("y")).trimmed().variables() == std::vector<std::string>{"x"});
  CHECK(P("a*b").renamed({{"a", "x"}}) == P("x*b"));
}

TEST_CASE("printing and parsing") {
  CHECK(P("a*b^2*c - 4*a^2*c^2").to_string() == "-4*a^2*c^2 + a*b^2*c");
  CHECK(P("0").to_string() == "0");
  CHECK(P("-x").to_string() == "-x");
  CHECK(P("2*(x+1)^2").to_string() == "2*x^2 + 4*x + 2");
  CHECK(P(kCubicDisc).size() == 5);
  for (const char* bad : {"", "x +", "2**x", "(x", "x^-1", "x^y", "1/2"}) {
    try {
      P(bad);
      FAIL("accepted ", bad);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InputParseError);
    }
  }
}

TEST_CASE("evaluation") {
  CHECK(P("b^2 - 4*a*c").eval({{"a", 1}, {"b", 2}, {"c", 1}}) == 0);
  CHECK(P(kCubicDisc).eval({{"a", 1}, {"b", 0}, {"c", 0}, {"d", 1}}) == -27);
  CHECK(P(kCubicDisc).eval({{"a", 1}, {"b", -3}, {"c", 3}, {"d", -1}}) == 0);
  CHECK(P("x*y").eval({{"x", Rational(1, 2)}, {"y", 4}}) == 2);
  try {
    P("x*y").eval({{"x", 1}});
    FAIL("missing variable accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingVariable);
  }
}

TEST_CASE("degree and homogeneity") {
  CHECK(P(kCubicDisc).total_degree() == 4);
  CHECK(P(kCubicDisc).is_homogeneous());
  CHECK_FALSE(P("x + 1").is_homogeneous());
  CHECK(P("0").total_degree() == -1);
}

TEST_CASE("exact division and content") {
  auto q = exact_divide(P("a*b^2*c - 4*a^2*c^2"), P("a*c"));
  CHECK(q == P("b^2 - 4*a*c"));
  CHECK(exact_divide(P("x^2 - y^2"), P("x - y")) == P("x + y"));
  try {
    exact_divide(P("x^2 + 1"), P("x + 1"));
    FAIL("inexact division accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InexactDivision);
  }
  try {
    exact_divide(P("x"), P("0"));
    FAIL("division by zero accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroPolynomial);
  }
  CHECK(content(P("6*x - 9*y + 15")) == 3);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(3);
  const std::vector<std::string> vars{"x", "y", "z"};
  for (int trial = 0; trial < 50; ++trial) {
    auto p = oracle::random_poly(rng, vars, 2, 4, 5);
    auto q = oracle::random_poly(rng, {"y", "w"}, 2, 3, 5);
    auto r = oracle::random_poly(rng, vars, 1, 3, 5);
    CHECK((p + q) == (q + p));
    CHECK((p * q) == (q * p));
    CHECK(((p + q) + r) == (p + (q + r)));
    CHECK(((p * q) * r) == (p * (q * r)));
    CHECK((p * (q + r)) == (p * q + p * r));
    if (!q.is_zero()) CHECK(exact_divide(p * q, q) == p);
    std::map<std::string, Rational> at{{"x", 2}, {"y", -1}, {"z", 3}, {"w", Rational(1, 2)}};
    CHECK((p * q).eval(at) == p.eval(at) * q.eval(at));
  }
}

TEST_CASE("Newton polytope of the cubic discriminant in alpha, beta") {
  auto p = P("alpha^2*beta^2 - 4*alpha*beta^2 - 4*alpha^2*beta - 27 + 18*alpha*beta");
  auto np = newton_polytope(p);
  std::set<Exponents> vertices;
  for (const auto& v : np.vertices()) vertices.insert(v);
  CHECK(vertices == std::set<Exponents>{{0, 0}, {1, 2}, {2, 1}, {2, 2}});
  CHECK(np.support.size() == 5);
  auto ext = extremal_terms(p);
  CHECK(ext.size() == 4);
  for (const auto& t : ext) CHECK(t.exponents != Exponents{1, 1});
}

TEST_CASE("Newton polytope edge cases") {
  auto single = newton_polytope(P("7*x^2*y"));
  CHECK(single.vertices() == std::vector<Exponents>{{2, 1}});
  CHECK(extremal_terms(P("b^2 - 4*a*c")).size() == 2);
  CHECK(extremal_terms(P("a*b^2*c - 4*a^2*c^2")).size() == 2);
  auto five = extremal_terms(P("5"));
  REQUIRE(five.size() == 1);
  CHECK(five[0].coefficient == 5);
  CHECK_THROWS_AS(newton_polytope(P("0")), Error);
  CHECK_THROWS_AS(extremal_terms(P("0")), Error);
}

TEST_CASE("extremal terms of ad times the cubic discriminant") {
  auto e = P("a*d") * P(kCubicDisc);
  auto ext = extremal_terms(e);
  CHECK(ext.size() == 4);
  auto np = newton_polytope(e);
  const auto vs = np.vertices();
  CHECK(oracle::vertices_by_directions(np.support, 12) == std::set<Exponents>(vs.begin(), vs.end()));
}

TEST_CASE("Newton polytope properties") {
  std::mt19937 rng(5);
  const std::vector<std::string> vars{"x", "y", "z"};
  for (int trial = 0; trial < 30; ++trial) {
    auto p = oracle::random_poly(rng, vars, 3, 6, 4);
    if (p.is_zero()) continue;
    auto np = newton_polytope(p);
    const auto vs = np.vertices();
    CHECK(oracle::vertices_by_directions(np.support, 12) == std::set<Exponents>(vs.begin(), vs.end()));
    // scaling by a constant keeps the vertex set
    CHECK(newton_polytope(Integer(-3) * p).vertices() == np.vertices());
    // translating by a monomial translates the extremal terms
    auto m = SparsePoly::monomial(vars, {1, 0, 2}, 1);
    auto shifted = extremal_terms((p * m).aligned_to(vars));
    auto base = extremal_terms(p.aligned_to(vars));
    REQUIRE(shifted.size() == base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      auto e = base[i].exponents;
      e[0] += 1;
      e[2] += 2;
      CHECK(shifted[i].exponents == e);
      CHECK(shifted[i].coefficient == base[i].coefficient);
    }
  }
}

TEST_CASE("Bareiss determinant: small cases") {
  CHECK(bareiss_determinant({{P("a"), P("b")}, {P("c"), P("d")}}) == P("a*d - b*c"));
  PolyMatrix id(3, std::vector<SparsePoly>(3, P("0")));
  for (int i = 0; i < 3; ++i) id[i][i] = P("1");
  CHECK(bareiss_determinant(id) == P("1"));
  CHECK(bareiss_determinant({}) == P("1"));
  // a zero pivot forces a row swap
  CHECK(bareiss_determinant({{P("0"), P("x")}, {P("y"), P("1")}}) == P("-x*y"));
  PolyMatrix d{{P("a1"), P("b1"), P("c1"), P("0")},
               {P("0"), P("a1"), P("b1"), P("c1")},
               {P("a2"), P("b2"), P("c2"), P("0")},
               {P("0"), P("a2"), P("b2"), P("c2")}};
  // the printed expression is the negative of det D (resultants are defined up to sign)
  CHECK(bareiss_determinant(d) == -P("(b1*c2 - c1*b2)*(a1*b2 - b1*a2) - (c1*a2 - a1*c2)^2"));
}

TEST_CASE("Bareiss determinant agrees with cofactor expansion") {
  // generic symbolic matrices
  for (int n = 1; n <= 4; ++n) {
    PolyMatrix m(n, std::vector<SparsePoly>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m[i][j] = SparsePoly::variable("m" + std::to_string(i) + std::to_string(j));
    }
    CHECK(bareiss_determinant(m) == oracle::cofactor_det(m));
  }
  // random entries of degree <= 1, including many zeros and singular cases
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coeff(-2, 2);
  const std::vector<std::string> vars{"x", "y", "z"};
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 4;
    PolyMatrix m(n, std::vector<SparsePoly>(n));
    for (auto& row : m) {
      for (auto& e : row) {
        e = SparsePoly::constant(coeff(rng));
        for (const auto& v : vars) e += Integer(coeff(rng)) * SparsePoly::variable(v);
        if (coeff(rng) == 0) e = SparsePoly::constant(0);
      }
    }
    if (trial % 7 == 0 && n > 1) m[n - 1] = m[0];
    CHECK(bareiss_determinant(m) == oracle::cofactor_det(m));
  }
}
