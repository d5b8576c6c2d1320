#include <doctest.h>

#include <algorithm>
#include <functional>

#include "schur_ohno/error.hpp"
#include "schur_ohno/shapes.hpp"

using namespace schur_ohno;

namespace {

SkewShape shape(std::vector<int> lambda, std::vector<int> mu = {}) {
  return SkewShape(Partition(std::move(lambda)), Partition(std::move(mu)));
}

// Every map cells -> [1, M], kept when semistandard.
std::uint64_t brute_force_count(const SkewShape& sh, int max_entry) {
  const auto cs = cells(sh);
  std::vector<int> e(cs.size(), 1);
  std::uint64_t count = 0;
  for (;;) {
    if (is_semistandard(Filling(sh, e))) ++count;
    std::size_t i = 0;
    while (i < e.size() && e[i] == max_entry) e[i++] = 1;
    if (i == e.size()) break;
    ++e[i];
  }
  return count;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

TEST_CASE("partition validation") {
  CHECK(Partition({3, 1, 0, 0}).length() == 2);
  CHECK(Partition(std::vector<int>{}).empty());
  CHECK_THROWS_AS(Partition({1, 2}), InvalidArgument);
  CHECK_THROWS_AS(Partition({2, -1}), InvalidArgument);
  CHECK_THROWS_AS(shape({1}, {2}), InvalidArgument);
  CHECK_THROWS_AS(shape({2, 1}, {1, 1, 1}), InvalidArgument);
}

TEST_CASE("cells in row-major order") {
  CHECK(cells(shape({2, 1})) == std::vector<Cell>{{1, 1}, {1, 2}, {2, 1}});
  CHECK(cells(shape({2, 2}, {1})) == std::vector<Cell>{{1, 2}, {2, 1}, {2, 2}});
  CHECK(cells(shape({1})) == std::vector<Cell>{{1, 1}});
}

TEST_CASE("corners") {
  CHECK(corners(shape({4, 3, 3, 2}, {3, 2, 1})) == std::vector<Cell>{{1, 4}, {3, 3}, {4, 2}});
  CHECK(corners(shape({1, 1, 1})) == std::vector<Cell>{{3, 1}});
  CHECK(corners(shape({2, 1})) == std::vector<Cell>{{1, 2}, {2, 1}});
}

TEST_CASE("corners are cells without right or lower neighbours") {
  for (const auto& [lam, mu] : std::vector<std::pair<std::vector<int>, std::vector<int>>>{
           {{4, 3, 3, 2}, {3, 2, 1}}, {{3, 3, 1}, {1}}, {{5, 2, 2, 1}, {2, 2}}, {{2, 2}, {}}}) {
    const auto sh = shape(lam, mu);
    const auto cs = cells(sh);
    for (const auto& c : corners(sh)) {
      CHECK(std::find(cs.begin(), cs.end(), c) != cs.end());
      CHECK_FALSE(sh.contains({c.row, c.col + 1}));
      CHECK_FALSE(sh.contains({c.row + 1, c.col}));
    }
  }
}

TEST_CASE("enumerate_ssyt small cases") {
  const auto fs = enumerate_ssyt(shape({2, 1}), 2);
  REQUIRE(fs.size() == 2);
  CHECK(std::vector<int>(fs[0].entries().begin(), fs[0].entries().end()) == std::vector<int>{1, 1, 2});
  CHECK(std::vector<int>(fs[1].entries().begin(), fs[1].entries().end()) == std::vector<int>{1, 2, 2});
  CHECK(count_ssyt(shape({2, 1}), 3) == 8);
  CHECK(count_ssyt(shape({1, 1, 1}), 7) == binomial(7, 3));
  CHECK(count_ssyt(shape({1}), 1) == 1);
  CHECK_THROWS_AS(count_ssyt(shape({1}), 0), InvalidArgument);
}

TEST_CASE("count_ssyt agrees with brute force on skew shapes") {
  for (const auto& [lam, mu] : std::vector<std::pair<std::vector<int>, std::vector<int>>>{
           {{2, 1}, {}}, {{2, 2}, {1}}, {{3, 1}, {1}}, {{2, 2, 1}, {1, 1}}, {{3, 2}, {2}}, {{2, 1, 1}, {1}}}) {
    const auto sh = shape(lam, mu);
    std::uint64_t prev = 0;
    for (int m = 1; m <= 4; ++m) {
      const auto c = count_ssyt(sh, m);
      CHECK(c == brute_force_count(sh, m));
      CHECK(c >= prev);
      prev = c;
    }
  }
}

TEST_CASE("single columns give binomial counts") {
  for (int n = 1; n <= 12; ++n) {
    std::vector<int> lam(static_cast<std::size_t>(n), 1);
    for (int m = n; m <= 12; ++m) CHECK(count_ssyt(shape(lam), m) == binomial(m, n));
  }
}

TEST_CASE("enumerated fillings are semistandard and distinct") {
  const auto sh = shape({3, 2, 1}, {1});
  const auto fs = enumerate_ssyt(sh, 4);
  CHECK(fs.size() == brute_force_count(sh, 4));
  std::vector<std::vector<int>> seen;
  for (const auto& f : fs) {
    CHECK(is_semistandard(f));
    seen.emplace_back(f.entries().begin(), f.entries().end());
  }
  std::sort(seen.begin(), seen.end());
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
}

TEST_CASE("is_semistandard rejects violations") {
  const auto sh = shape({2, 1});
  CHECK(is_semistandard(Filling(sh, {1, 1, 2})));
  CHECK_FALSE(is_semistandard(Filling(sh, {2, 1, 3})));  // row decreases
  CHECK_FALSE(is_semistandard(Filling(sh, {1, 1, 1})));  // column not strict
}

TEST_CASE("first-entry range splits the stream") {
  const auto sh = shape({2, 2}, {1});
  std::uint64_t total = 0;
  for (int v = 1; v <= 5; ++v) {
    SsytEnumerator it(sh, 5, v, v);
    while (it.next()) ++total;
  }
  CHECK(total == count_ssyt(sh, 5));
}
