#include <random>

#include "doctest.h"
#include "tate/module.hpp"

using namespace tate;

namespace {
bool tables_equal_after_relabel(const GroupPtr& a, const GroupPtr& b) {
  // brute force isomorphism search on small groups (oracle for "isomorphic")
  if (a->n != b->n) return false;
  std::vector<int> perm(a->n);
  for (int i = 0; i < a->n; ++i) perm[i] = i;
  do {
    if (perm[a->identity] != b->identity) continue;
    bool ok = true;
    for (int x = 0; x < a->n && ok; ++x)
      for (int y = 0; y < a->n && ok; ++y) ok = perm[(*a)(x, y)] == (*b)(perm[x], perm[y]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

int involutions(const GroupPtr& g) {
  int c = 0;
  for (int x = 0; x < g->n; ++x)
    if (g->element_order(x) == 2) ++c;
  return c;
}
}  // namespace

TEST_CASE("catalog groups") {
  auto c2 = group_catalog("C2");
  CHECK(c2->n == 2);
  CHECK(c2->mult == std::vector<int>{0, 1, 1, 0});
  auto v4 = group_catalog("V4");
  CHECK(v4->n == 4);
  CHECK(involutions(v4) == 3);
  auto q8 = group_catalog("Q8");
  CHECK(q8->n == 8);
  CHECK(involutions(q8) == 1);
  CHECK(!q8->is_abelian());
  auto d8 = group_catalog("D8");
  CHECK(involutions(d8) == 5);
  CHECK(!d8->is_abelian());
  CHECK(group_catalog("C8")->exponent() == 8);
  CHECK(group_catalog("Cp(3)")->n == 3);
  CHECK_THROWS_AS(group_catalog("S3x"), UnknownGroup);
  CHECK_THROWS_AS(group_catalog("Foo"), UnknownGroup);
}

TEST_CASE("direct products") {
  auto c2 = group_catalog("C2");
  auto p = direct_product(c2, c2);
  CHECK(tables_equal_after_relabel(p, group_catalog("V4")));
  auto c2c4 = direct_product(c2, group_catalog("C4"));
  CHECK(c2c4->n == 8);
  CHECK(c2c4->is_abelian());
  auto e8 = group_catalog("C2xC2xC2");
  CHECK(e8->n == 8);
  CHECK(e8->exponent() == 2);
  auto i1 = factor_inclusion(p, c2, c2, 0);
  auto i2 = factor_inclusion(p, c2, c2, 1);
  CHECK(i1.map[1] != i2.map[1]);
}

TEST_CASE("table file parsing") {
  auto g = parse_group_table("order 2\n0 1\n1 0\nnames: e t\n");
  CHECK(g->n == 2);
  CHECK(g->names[1] == "t");
  CHECK_THROWS_AS(parse_group_table("order 2\n0 1\n1 1\n"), MalformedTable);
  CHECK_THROWS_AS(parse_group_table("order 2\n1 0\n0 1\n"), MalformedTable);
  CHECK_THROWS_AS(parse_group_table("order 3\n0 1 2\n1 2 0\n"), MalformedTable);
  CHECK_THROWS_AS(parse_group_table("size 2\n"), MalformedTable);
}

TEST_CASE("module constructors") {
  auto c2 = group_catalog("C2");
  auto k = trivial_module(c2);
  auto v4 = group_catalog("V4");
  auto M3 = direct_sum(trivial_module(c2), free_module(c2, 1));
  CHECK(M3->dim == 3);
  auto t = tensor_module(k, M3);
  for (int g = 0; g < 2; ++g) CHECK(t->rho[g] == M3->rho[g]);
  auto proj = tensor_module(free_module(c2, 1), M3);
  CHECK(proj->dim == 6);
  CHECK(is_projective(proj));
  CHECK(dual_module(k)->rho[1] == k->rho[1]);
  for (auto G : {group_catalog("Q8"), group_catalog("D8"), v4}) {
    auto F = free_module(G, 2);
    CHECK(F->check_action());
    auto T = tensor_module(free_module(G, 1), dual_module(F));
    CHECK(T->check_action());
    auto DD = dual_module(dual_module(T));
    for (int g = 0; g < G->n; ++g) CHECK(DD->rho[g] == T->rho[g]);
    // free (x) M is free of rank dim M
    auto fb = free_basis(tensor_module(free_module(G, 1), M3->group == G ? M3 : trivial_module(G)));
    CHECK(fb.has_value());
  }
}

TEST_CASE("hom spaces") {
  auto c2 = group_catalog("C2");
  auto k = trivial_module(c2);
  CHECK(hom_equivariant_basis(k, k).size() == 1);
  auto kg = free_module(c2, 1);
  auto h = hom_equivariant_basis(k, kg);
  REQUIRE(h.size() == 1);
  CHECK(h[0].m == Mat::from_rows({{1, 1}}));
  auto v4 = group_catalog("V4");
  CHECK(hom_equivariant_basis(free_module(v4, 1), free_module(v4, 1)).size() == 4);
}

TEST_CASE("kernels, omega, stable zero") {
  auto c2 = group_catalog("C2");
  auto k = trivial_module(c2);
  auto kg = free_module(c2, 1);
  CHECK(kernel_module(identity_map(kg)).module->dim == 0);
  ModuleMap eps{kg, k, Mat::from_rows({{1}, {1}})};
  CHECK(eps.is_equivariant());
  auto K = kernel_module(eps);
  CHECK(K.module->dim == 1);
  CHECK(K.basis == Mat::from_rows({{1, 1}}));
  CHECK(K.module->rho[1] == Mat::identity(1));
  CHECK(kernel_module(zero_map(kg, k)).module->dim == 2);

  CHECK(omega(k).omega->dim == 1);
  CHECK(omega(trivial_module(group_catalog("V4"))).omega->dim == 3);
  CHECK(omega(free_module(group_catalog("V4"), 2)).omega->dim == 0);
  CHECK_THROWS_AS(omega(trivial_module(group_catalog("C6"))), UnsupportedGroup);

  CHECK(is_stably_zero(zero_map(k, k)).stably_zero);
  CHECK(!is_stably_zero(identity_map(k)).stably_zero);
  auto sz = is_stably_zero(eps);
  CHECK(sz.stably_zero);
  REQUIRE(sz.witness);
  CHECK(compose(iota_map(kg), *sz.witness).m == eps.m);
  CHECK(sz.witness->is_equivariant());
  CHECK(iota_map(kg).is_equivariant());
}

TEST_CASE("stable zero closed under composition (spot check)") {
  std::mt19937 rng(7);
  auto G = group_catalog("V4");
  auto k = trivial_module(G);
  auto om = omega(k);
  std::vector<ModulePtr> mods = {k, om.omega, free_module(G, 1), dual_module(om.omega)};
  for (int trial = 0; trial < 20; ++trial) {
    auto A = mods[rng() % mods.size()], B = mods[rng() % mods.size()], C = mods[rng() % mods.size()];
    auto hab = hom_equivariant_basis(A, B), hbc = hom_equivariant_basis(B, C);
    if (hab.empty() || hbc.empty()) continue;
    auto f = hab[rng() % hab.size()], g = hbc[rng() % hbc.size()];
    if (is_stably_zero(f).stably_zero) CHECK(is_stably_zero(compose(f, g)).stably_zero);
    if (is_stably_zero(g).stably_zero) CHECK(is_stably_zero(compose(f, g)).stably_zero);
  }
}
