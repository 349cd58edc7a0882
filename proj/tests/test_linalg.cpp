#include "hopf/linalg.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hopf;

namespace {

Mat from_ints(std::initializer_list<std::initializer_list<long>> rows, int n = 1) {
  std::vector<Vec> r;
  for (const auto& row : rows) {
    Vec v;
    for (long x : row) v.emplace_back(x, n);
    r.push_back(std::move(v));
  }
  return Mat::from_rows(r, r.front().size(), n);
}

Vec ints(std::initializer_list<long> xs, int n = 1) {
  Vec v;
  for (long x : xs) v.emplace_back(x, n);
  return v;
}

}  // namespace

TEST_CASE("solve examples") {
  auto s = solve(Mat::identity(3), unit_vec(3, 0, 1));
  REQUIRE(s);
  CHECK(s->particular == unit_vec(3, 0, 1));
  CHECK(s->nullspace.empty());

  s = solve(Mat(2, 2), zero_vec(2, 1));
  REQUIRE(s);
  CHECK(is_zero(s->particular));
  CHECK(s->nullspace.size() == 2);

  s = solve(from_ints({{1, 1}, {1, 1}}), ints({1, 1}));
  REQUIRE(s);
  CHECK(s->particular == ints({1, 0}));
  REQUIRE(s->nullspace.size() == 1);
  CHECK(in_span(s->nullspace, ints({1, -1}), 2, 1));

  CHECK_FALSE(solve(from_ints({{1, 1}, {1, 1}}), ints({1, 2})));
}

TEST_CASE("inverse examples") {
  CHECK(inverse(Mat::identity(4)).is_identity());
  Mat d(2, 2);
  d(0, 0) = CycNum(2);
  d(1, 1) = CycNum(3);
  const Mat di = inverse(d);
  CHECK(di(0, 0) == CycNum(Rational(1, 2)));
  CHECK(di(1, 1) == CycNum(Rational(1, 3)));
  CHECK(di(0, 1).is_zero());
  const Mat p = from_ints({{0, 1}, {1, 0}});
  CHECK(inverse(p) == p);
  CHECK_THROWS_AS(inverse(from_ints({{1, 2}, {2, 4}})), SingularMatrix);
}

TEST_CASE("kron examples") {
  CHECK(kron(Mat::identity(2), Mat::identity(2)).is_identity());

  const Mat a = from_ints({{3}});
  const Mat b = from_ints({{1, 2}, {0, -1}});
  CHECK(kron(a, b) == b.scaled(CycNum(3)));

  // e_2 (x) e_1 sits at index 1 * 2 + 0
  const Mat k = kron(from_ints({{0, 1}, {0, 0}}), Mat::identity(2));
  CHECK(k * unit_vec(4, 2, 1) == unit_vec(4, 0, 1));
}

TEST_CASE("kron agrees with the entrywise definition") {
  std::mt19937_64 rng(11);
  const Mat a = testing::random_int_mat(rng, 2, 3, 1), b = testing::random_int_mat(rng, 3, 2, 1);
  const Mat k = kron(a, b);
  REQUIRE(k.rows() == 6);
  REQUIRE(k.cols() == 6);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t p = 0; p < 3; ++p)
        for (std::size_t q = 0; q < 2; ++q) CHECK(k(i * 3 + p, j * 2 + q) == a(i, j) * b(p, q));
}

TEST_CASE("nilpotency examples") {
  CHECK(is_nilpotent(Mat(3, 3)));
  CHECK_FALSE(is_nilpotent(Mat::identity(3)));
  CHECK(is_nilpotent(from_ints({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})));
  CHECK_FALSE(is_nilpotent(from_ints({{0, 1}, {1, 0}})));
}

TEST_CASE("random systems over cyclotomic fields") {
  std::mt19937_64 rng(314);
  for (int n : {1, 3, 4, 5}) {
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
      Mat a(r, c, n);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
          if (rng() % 3) a(i, j) = testing::random_cyc(rng, n, 2);
      const Vec x = testing::random_vec(rng, c, n);
      const Vec b = a * x;
      const auto s = solve(a, b);
      REQUIRE(s);
      CHECK(a * s->particular == b);
      for (const auto& v : s->nullspace) CHECK(is_zero(a * v));
      CHECK(rank(a) + s->nullspace.size() == c);
      CHECK(nullspace(a).size() == s->nullspace.size());
      CHECK(rank(a) == rank(a.transpose()));
    }
  }
}

TEST_CASE("random inverses") {
  std::mt19937_64 rng(27);
  for (int n : {1, 5, 8}) {
    for (int trial = 0; trial < 8; ++trial) {
      const std::size_t d = 1 + rng() % 5;
      Mat a(d, d, n);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) a(i, j) = testing::random_cyc(rng, n, 3);
      if (rank(a) < d) continue;
      const Mat ai = inverse(a);
      CHECK((a * ai).is_identity());
      CHECK((ai * a).is_identity());
    }
  }
}

TEST_CASE("power and matrix product") {
  const Mat j = from_ints({{1, 1}, {0, 1}});
  CHECK(power(j, 0).is_identity());
  CHECK(power(j, 5) == from_ints({{1, 5}, {0, 1}}));
  CHECK((j * j) == power(j, 2));
  CHECK_THROWS_AS(Mat(2, 3) * Mat(2, 3), ShapeError);
  CHECK(from_ints({{1, 2}, {3, 4}}).trace() == CycNum(5));
  CHECK(from_ints({{1, 2}, {3, 4}}).transpose() == from_ints({{1, 3}, {2, 4}}));
}

TEST_CASE("row reduction pivots") {
  std::vector<Vec> rows{ints({0, 2, 4}), ints({0, 1, 2}), ints({1, 0, 1})};
  const auto piv = row_reduce(rows, 3);
  CHECK(piv == std::vector<std::size_t>{0, 1});
  CHECK(in_span({ints({1, 0, 1}), ints({0, 1, 2})}, ints({2, 3, 8}), 3, 1));
  CHECK_FALSE(in_span({ints({1, 0, 1})}, ints({0, 1, 0}), 3, 1));
}
