#include <doctest.h>

#include <algorithm>

#include "nodal/error.hpp"
#include "nodal/hodge.hpp"

using namespace nodal;

namespace {

// Oracle: for a Calabi-Yau complete intersection, h11 = 1 and
// h12 = 1 - e/2 with e = c3(T_X) * deg X, where
// c(T_X) = (1 + h)^(n+1) / prod (1 + d_i h) in P^n, n = r + 3.
long h12_from_chern(const std::vector<int>& degrees) {
  const int n = static_cast<int>(degrees.size()) + 3;
  std::vector<long> c{1, 0, 0, 0};
  auto multiply = [&](std::vector<long> factor) {
    std::vector<long> out(4, 0);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; i + j < 4; ++j) out[static_cast<std::size_t>(i + j)] += c[static_cast<std::size_t>(i)] * factor[static_cast<std::size_t>(j)];
    c = out;
  };
  for (int i = 0; i <= n; ++i) multiply({1, 1, 0, 0});
  for (int d : degrees) multiply({1, -d, d * d, -d * d * d});  // 1 / (1 + d h)
  long deg = 1;
  for (int d : degrees) deg *= d;
  const long euler = c[3] * deg;
  return 1 - euler / 2;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("smooth h12 of the Calabi-Yau complete intersections") {
  CHECK(smooth_h12({2, 2, 2, 2}) == 65);
  CHECK(smooth_h12({2, 4}) == 89);
  CHECK(smooth_h12({3, 3}) == 73);
  CHECK(smooth_h12({5}) == 101);
  CHECK(smooth_h12({2, 2, 3}) == 73);
}

TEST_CASE("closed form agrees with the Chern class oracle") {
  const std::vector<std::vector<int>> tuples{{5}, {2, 4}, {3, 3}, {2, 2, 3}, {2, 2, 2, 2}, {1, 5}, {1, 2, 4}, {1, 1, 3, 3}};
  for (const auto& t : tuples) {
    CHECK(is_calabi_yau_tuple(t));
    CHECK(smooth_h12(t) == h12_from_chern(t));
  }
  CHECK(h12_from_chern({5}) == 101);
}

TEST_CASE("smooth h12 is symmetric in the degrees") {
  std::vector<int> t{2, 2, 3};
  do {
    CHECK(smooth_h12(t) == 73);
  } while (std::next_permutation(t.begin(), t.end()));
  CHECK(smooth_h12({4, 2}) == smooth_h12({2, 4}));
}

TEST_CASE("elementary symmetric functions") {
  const auto s = elementary_symmetric({2, 3, 5});
  REQUIRE(s.size() == 3);
  CHECK(s[0] == 10);
  CHECK(s[1] == 31);
  CHECK(s[2] == 30);
  CHECK(elementary_symmetric({2, 2, 2, 2})[3] == 16);
}

TEST_CASE("non Calabi-Yau tuples trip the integrality guard") {
  CHECK_FALSE(is_calabi_yau_tuple({2, 2}));
  CHECK(kind_of([] { smooth_h12({2, 2}); }) == ErrorKind::NonIntegralResult);
  CHECK(kind_of([] { smooth_h12({0, 6}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("resolution Hodge numbers") {
  CHECK(resolution_hodge(65, 96, 31).h11 == 32);
  CHECK(resolution_hodge(65, 96, 31).h12 == 0);
  CHECK(resolution_hodge(89, 122, 33).h11 == 34);
  CHECK(resolution_hodge(89, 122, 33).h12 == 0);
  CHECK(resolution_hodge(73, 108, 35).h11 == 36);
  CHECK(resolution_hodge(73, 108, 35).h12 == 0);
  CHECK(resolution_hodge(101, 0, 0).h11 == 1);
  CHECK(resolution_hodge(101, 0, 0).h12 == 101);
  CHECK(resolution_hodge(101, 1, 0).h12 == 100);
  CHECK(kind_of([] { resolution_hodge(65, 96, 97); }) == ErrorKind::NegativeHodgeNumber);
  CHECK(kind_of([] { resolution_hodge(10, 20, 5); }) == ErrorKind::NegativeHodgeNumber);
}

TEST_CASE("containing-surface table h12 column") {
  const long smooth = smooth_h12({4, 2});
  CHECK(smooth == 89);
  const std::pair<long, long> rows[] = {{13, 77}, {18, 72}, {24, 66}, {32, 58}};
  for (const auto& [mu, h12] : rows) {
    const auto h = resolution_hodge(smooth, mu, 1);
    CHECK(h.h11 == 2);
    CHECK(h.h12 == h12);
  }
  const auto rep = hodge_report({2, 2, 2, 2}, 96, 31);
  CHECK(rep.smooth_h12 == 65);
  CHECK(rep.h11_resolution == 32);
  CHECK(rep.h12_resolution == 0);
  CHECK(rep.sigma.size() == 4);
}
