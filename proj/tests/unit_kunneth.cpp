#include "doctest.h"
#include "tate/kunneth.hpp"

using namespace tate;

TEST_CASE("Kuenneth: C2 x C2 tensor complex") {
  auto rep = kunneth_check("C2", "C2", -4, 5);
  for (const auto& f : rep.failures) MESSAGE(f);
  CHECK(rep.ok);
  CHECK(rep.checked > 60);
}

TEST_CASE("Kuenneth: C2 x C4 tensor complex") {
  auto rep = kunneth_check("C2", "C4", -3, 4);
  for (const auto& f : rep.failures) MESSAGE(f);
  CHECK(rep.ok);
}

TEST_CASE("Kuenneth: V4's own resolution in the phi basis") {
  auto rep = kunneth_check_own_resolution(-5, 4);
  for (const auto& f : rep.failures) MESSAGE(f);
  CHECK(rep.ok);
}
