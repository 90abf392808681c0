#include <doctest.h>

#include <atomic>

#include "ordinals/checks.hpp"

using namespace ord;

TEST_CASE("sweep runs every case and reports the first failure") {
  for (int jobs : {1, 4}) {
    CAPTURE(jobs);
    std::atomic<int> hits{0};
    CheckResult ok = sweep(100, jobs, [&](std::size_t) {
      ++hits;
      return std::string{};
    });
    CHECK(ok.ok);
    CHECK(ok.cases == 100);
    CHECK(hits == 100);

    CheckResult bad = sweep(100, jobs, [](std::size_t i) {
      return i >= 37 ? "case " + std::to_string(i) : std::string{};
    });
    CHECK_FALSE(bad.ok);
    CHECK(bad.counterexample == "case 37");
  }
}

TEST_CASE("sweep converts exceptions into counterexamples") {
  CheckResult r = sweep(3, 1, [](std::size_t i) -> std::string {
    if (i == 2) throw Error(Errc::ResourceLimit, "boom");
    return {};
  });
  CHECK_FALSE(r.ok);
  CHECK(r.counterexample.find("boom") != std::string::npos);
}

TEST_CASE("small property sweeps pass on both paths") {
  for (int jobs : {1, 2}) {
    CAPTURE(jobs);
    CHECK(check_order(System::Theta, 6, jobs).ok);
    CHECK(check_order(System::Sigma, 6, jobs).ok);
    CHECK(check_bachmann(System::Theta, 7, 2, jobs).ok);
    CHECK(check_regularity(System::Theta, 7, jobs).ok);
    CHECK(check_cantorian(6, 3, 3, jobs).ok);
    CHECK(check_tv(6, 2, jobs).ok);
    CHECK(check_oracle(6, 100000, jobs).ok);
    CHECK(check_fs_lemmas(System::Theta, 6, 4, jobs).ok);
    CHECK(check_finval(7, 3, jobs).ok);
  }
  CheckResult h = check_hardy_compare(6, 25, 42, 1000000, 1);
  CHECK(h.ok);
}
