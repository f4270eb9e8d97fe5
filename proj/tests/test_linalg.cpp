#include <doctest.h>

#include "interdec/linalg.hpp"
#include "support.hpp"

using namespace interdec;
using testing_support::Rng;

TEST_CASE("rational parsing is canonical and strict") {
  CHECK(to_string(parse_rat("2/4")) == "1/2");
  CHECK(to_string(parse_rat("-6/3")) == "-2");
  CHECK(to_string(parse_rat("+7")) == "7");
  CHECK(to_string(parse_rat("0/5")) == "0");
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rat("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rat("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rat(""), ParseError);
  CHECK_THROWS_AS(parse_rat("3/"), ParseError);
}

TEST_CASE("matrix products and shapes") {
  const RatMatrix a{{1, 2}, {3, 4}};
  const RatMatrix b{{0, 1}, {1, 0}};
  CHECK(a * b == RatMatrix{{2, 1}, {4, 3}});
  CHECK(a * RatMatrix::identity(2) == a);
  CHECK_THROWS_AS(a * RatMatrix(3, 1), DimensionError);
  CHECK(RatMatrix(2, 0) * RatMatrix(0, 3) == RatMatrix(2, 3));
  CHECK(hstack(a, RatMatrix(2, 0)) == a);
  CHECK(vstack(RatMatrix(0, 2), a) == a);
}

TEST_CASE("rref is canonical for the row space") {
  const RatMatrix m{{2, 4, 2}, {1, 2, 1}, {0, 1, 1}};
  const RatMatrix n{{0, 3, 3}, {1, 3, 2}};
  CHECK(Subspace::row_span(m).basis() == rref(n));
  CHECK(Subspace::row_span(m) == Subspace::row_span(n));
  CHECK(rank(m) == 2);
}

TEST_CASE("inverse and solve") {
  const RatMatrix a{{2, 1}, {1, 1}};
  CHECK(a * inverse(a) == RatMatrix::identity(2));
  CHECK_THROWS_AS(inverse(RatMatrix{{1, 2}, {2, 4}}), DimensionError);
  CHECK(inverse(RatMatrix(0, 0)) == RatMatrix(0, 0));

  const RatMatrix tall{{1, 0}, {0, 1}, {1, 1}};
  const auto x = solve(tall, RatMatrix{{2}, {3}, {5}});
  REQUIRE(x);
  CHECK(*x == RatMatrix{{2}, {3}});
  CHECK_FALSE(solve(tall, RatMatrix{{2}, {3}, {4}}));
  CHECK_FALSE(solve(RatMatrix{{1, 1}, {1, 1}}, RatMatrix{{1}, {1}}));
}

TEST_CASE("kernel, image and coordinates") {
  const RatMatrix m{{1, 1, 0}, {0, 0, 1}};
  const Subspace k = kernel(m);
  CHECK(k.dim() == 1);
  CHECK((m * k.basis_columns()).is_zero());
  const Subspace im = image(RatMatrix{{1, 2}, {2, 4}, {0, 0}});
  CHECK(im.dim() == 1);
  CHECK(im.contains({make_rat(3), make_rat(6), make_rat(0)}));
  CHECK_FALSE(im.contains({make_rat(1), make_rat(0), make_rat(0)}));
  const RatMatrix c = im.coordinates(RatMatrix{{2}, {4}, {0}});
  CHECK(im.basis_columns() * c == RatMatrix{{2}, {4}, {0}});
  CHECK_THROWS_AS(im.coordinates(RatMatrix{{1}, {0}, {0}}), DimensionError);
}

TEST_CASE("direct sums") {
  std::vector<Subspace> parts{image(RatMatrix{{1}, {0}}), image(RatMatrix{{1}, {1}})};
  CHECK(direct_sum_is_ambient(parts));
  parts.push_back(image(RatMatrix{{0}, {1}}));
  CHECK_FALSE(direct_sum_is_ambient(parts));
  CHECK(subspace_leq(Subspace(2), parts[0]));
}

TEST_CASE("property: rank-nullity and inverse on random matrices") {
  Rng rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = testing_support::uniform(rng, 0, 5);
    const std::size_t c = testing_support::uniform(rng, 0, 5);
    const RatMatrix m = testing_support::random_matrix(rng, r, c);
    CHECK(rank(m) + kernel(m).dim() == c);
    CHECK(rank(m) == rank(m.transpose()));
    if (r == c && is_invertible(m)) CHECK(inverse(m) * m == RatMatrix::identity(r));
  }
}
