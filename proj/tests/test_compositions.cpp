#include <set>

#include "doctest.h"
#include "egzkit/compositions.hpp"
#include "oracles.hpp"

using egzkit::WeakCompositions;

TEST_CASE("weak compositions come out in descending lex order") {
  std::vector<std::vector<std::int64_t>> seen;
  WeakCompositions it(2, 3);
  do seen.push_back(it.current());
  while (it.next());
  CHECK(seen == std::vector<std::vector<std::int64_t>>{
                    {2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}});
}

TEST_CASE("single part and zero total") {
  WeakCompositions one(5, 1);
  CHECK(one.current() == std::vector<std::int64_t>{5});
  CHECK_FALSE(one.next());
  WeakCompositions zero(0, 4);
  CHECK(zero.current() == std::vector<std::int64_t>{0, 0, 0, 0});
  CHECK_FALSE(zero.next());
}

TEST_CASE("enumeration matches the odometer filter and the binomial count") {
  for (std::int64_t total = 0; total <= 7; ++total) {
    for (std::size_t parts = 1; parts <= 5; ++parts) {
      std::vector<std::vector<std::int64_t>> got;
      WeakCompositions it(total, parts);
      do got.push_back(it.current());
      while (it.next());
      std::vector<std::vector<std::int64_t>> want;
      oracle::odometer(parts, total, [&](const oracle::Vec& v) {
        std::int64_t s = 0;
        for (auto x : v) s += x;
        if (s == total) want.push_back(v);
      });
      std::sort(want.begin(), want.end(), std::greater<>{});
      CHECK(got == want);
      CHECK(egzkit::weak_composition_count(total, parts, 1u << 30) == got.size());
    }
  }
  CHECK(egzkit::weak_composition_count(1000, 50, 1000) == 1000);  // capped
}
