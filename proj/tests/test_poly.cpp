#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ribbon/abstract_graph.hpp"
#include "ribbon/bigint.hpp"
#include "ribbon/laurent.hpp"

using namespace ribbon;

TEST_CASE("bigint string round trip and arithmetic against int64") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> dist(-1000000000LL, 1000000000LL);
  for (int i = 0; i < 2000; ++i) {
    long long a = dist(rng), b = dist(rng);
    CHECK(BigInt(a).str() == std::to_string(a));
    CHECK((BigInt(a) + BigInt(b)).to_int64() == a + b);
    CHECK((BigInt(a) - BigInt(b)).to_int64() == a - b);
    CHECK((BigInt(a) * BigInt(b)).to_int64() == a * b);
    CHECK((BigInt(a) < BigInt(b)) == (a < b));
  }
  CHECK(BigInt::from_string("-0").str() == "0");
}

TEST_CASE("bigint handles values beyond 64 bits") {
  BigInt two_pow_100 = 1;
  for (int i = 0; i < 100; ++i) two_pow_100 *= 2;
  CHECK(two_pow_100.str() == "1267650600228229401496703205376");
  CHECK(BigInt::from_string("1267650600228229401496703205376") == two_pow_100);
  CHECK((two_pow_100 - two_pow_100).is_zero());
  CHECK((two_pow_100 * BigInt(-1)).str() == "-1267650600228229401496703205376");
}

namespace {

Laurent random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> exp(-2, 2);
  std::uniform_int_distribution<int> terms(0, 4);
  Laurent p;
  for (int t = terms(rng); t > 0; --t) {
    Exponents exps;
    int ex = exp(rng), ey = exp(rng);
    if (ex) exps["x"] = 2 * ex;
    if (ey) exps["y"] = 2 * ey;
    p += Laurent::monomial(coeff(rng), std::move(exps));
  }
  return p;
}

}  // namespace

TEST_CASE("laurent ring laws") {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    Laurent a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("laurent basics") {
  Laurent x = Laurent::var("x"), y = Laurent::var("y");
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK(Laurent::var_pow_half("x", 1) * Laurent::var_pow_half("x", 1) == x);
  CHECK(Laurent::var_pow_half("x", -2) * x == Laurent::one());
  CHECK(x.pow_half(1) == Laurent::var_pow_half("x", 1));
  CHECK_THROWS_AS((x + y).pow_half(1), precondition_error);
}

TEST_CASE("laurent rendering") {
  Laurent p = Laurent::one() + Laurent::monomial(3, {{"y", 2}}) + Laurent::monomial(1, {{"y", 4}}) +
              Laurent::monomial(1, {{"x", 2}, {"z", 2}}) + Laurent::monomial(1, {{"x", -2}, {"y", 2}});
  CHECK(p.str() == "1 + 3*y + y^2 + x*z + x^-1*y");
  CHECK(Laurent::var_pow_half("x", 1).str() == "x^(1/2)");
  CHECK(Laurent::var_pow_half("x", -1).str() == "x^(-1/2)");
  CHECK(Laurent::zero().str() == "0");
  CHECK((Laurent::constant(-2) * Laurent::var("y")).str() == "-2*y");
}

TEST_CASE("w reduction") {
  Laurent w = Laurent::var("w");
  CHECK((w * w * w).w_reduced() == w);
  CHECK((w + w * w).w_reduced() == Laurent::constant(2) * w);
  Laurent fixed = Laurent::one() + w;
  CHECK(fixed.w_reduced() == fixed);
  CHECK(fixed.w_reduced().w_reduced() == fixed.w_reduced());
  CHECK_THROWS_AS(Laurent::var_pow_half("w", -2).w_reduced(), precondition_error);
  CHECK_THROWS_AS(Laurent::var_pow_half("w", 1).w_reduced(), precondition_error);
}

TEST_CASE("substitution") {
  Laurent x = Laurent::var("x"), y = Laurent::var("y"), q = Laurent::var("q");
  CHECK((x * y).substituted({{"x", q}}) == q * y);
  // Fractional exponents need monomial replacements.
  Laurent half = Laurent::var_pow_half("x", 1);
  CHECK(half.substituted({{"x", Laurent::monomial(1, {{"q", 2}, {"c", 4}})}}) ==
        Laurent::monomial(1, {{"q", 1}, {"c", 2}}));
  CHECK_THROWS_AS(half.substituted({{"x", q + y}}), precondition_error);
  // Negative powers invert monomials.
  CHECK(Laurent::var_pow_half("x", -2).substituted({{"x", q}}) == Laurent::var_pow_half("q", -2));
}

namespace {

AbstractGraph single_edge(int sign) {
  AbstractGraph g;
  g.vertex_count = 2;
  g.edges.push_back({0, 1, sign, "e1"});
  return g;
}

}  // namespace

TEST_CASE("rank polynomial single positive edge") {
  Laurent expected = Laurent::var("alpha") * Laurent::var("gamma") + Laurent::var("beta");
  CHECK(rank_polynomial(single_edge(+1)) == expected);
}

TEST_CASE("rank polynomial homogeneity") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> nv(1, 3), ne(0, 4), sign(0, 1);
  for (int i = 0; i < 40; ++i) {
    AbstractGraph g;
    g.vertex_count = nv(rng);
    std::uniform_int_distribution<int> pick(0, g.vertex_count - 1);
    int edges = ne(rng);
    for (int e = 0; e < edges; ++e)
      g.edges.push_back({pick(rng), pick(rng), sign(rng) ? +1 : -1, "e" + std::to_string(e)});
    Laurent alpha = Laurent::var("alpha"), beta = Laurent::var("beta");
    Laurent gamma = Laurent::var("gamma"), delta = Laurent::var("delta");
    Laurent full = rank_polynomial(g, alpha, beta, gamma, delta);
    Laurent reduced = rank_polynomial(g, Laurent::one(),
                                      beta * Laurent::var_pow_half("alpha", -2), gamma, delta);
    CHECK(full == alpha.pow(static_cast<unsigned>(edges)) * reduced);
  }
}

TEST_CASE("tutte specializations") {
  CHECK(tutte_polynomial(single_edge(+1)) == Laurent::var("x"));

  AbstractGraph loop;
  loop.vertex_count = 1;
  loop.edges.push_back({0, 0, +1, "e1"});
  CHECK(tutte_polynomial(loop) == Laurent::var("y"));

  AbstractGraph triangle;
  triangle.vertex_count = 3;
  triangle.edges.push_back({0, 1, +1, "a"});
  triangle.edges.push_back({1, 2, +1, "b"});
  triangle.edges.push_back({2, 0, +1, "c"});
  Laurent x = Laurent::var("x"), y = Laurent::var("y");
  CHECK(tutte_polynomial(triangle) == x * x + x + y);

  // All-positive rank polynomial at (1,1,x-1,y-1) is Tutte.
  Laurent via_rank = rank_polynomial(triangle, Laurent::one(), Laurent::one(),
                                     x - Laurent::one(), y - Laurent::one());
  CHECK(via_rank == tutte_polynomial(triangle));
}

TEST_CASE("multivariate tutte single edge") {
  Laurent q = Laurent::var("q"), b = Laurent::var("beta:e1");
  CHECK(multivariate_tutte(single_edge(+1)) == q * q + q * b);
}
