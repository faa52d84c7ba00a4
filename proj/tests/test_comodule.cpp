#include "doctest.h"

#include "contra/functors.hpp"
#include "contra/sampling.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace contra;

namespace {
const Field F2 = Field::prime(2);
const Field QQ = Field::rationals();

std::size_t log_p(std::size_t count, std::size_t p) {
  std::size_t d = 0;
  while (count > 1) {
    count /= p;
    ++d;
  }
  return d;
}
}  // namespace

TEST_CASE("catalog comodules satisfy the axioms") {
  for (const Field& f : fixtures::fields()) {
    for (const Comodule& m : fixtures::comodules(f)) {
      CAPTURE(m.label);
      CHECK(check_comodule(m).ok());
      CHECK(oracle::naive_comodule_ok(m));
    }
  }
}

TEST_CASE("cofree and regular comodules") {
  const CoalgebraPtr c = divided_power_dual(QQ, 3);
  CHECK(regular_comodule(c).coaction == c->delta);
  CHECK(cofree(c, 0).dim == 0);
  CHECK(cofree(c, 2).dim == 6);
  CHECK(check_comodule(cofree(c, 0)).ok());
}

TEST_CASE("mutated coactions are rejected") {
  Rng rng(5);
  std::size_t rejected = 0, total = 0;
  for (const Field& f : fixtures::fields()) {
    for (const Comodule& m : fixtures::comodules(f)) {
      Comodule bad = m;
      bad.coaction = fixtures::mutate(m.coaction, uniform(rng, 0, m.coaction.rows() - 1),
                                      uniform(rng, 0, m.dim - 1), fixtures::nonzero_scalar(f, rng));
      const bool ok = check_comodule(bad).ok();
      CHECK(ok == oracle::naive_comodule_ok(bad));
      rejected += ok ? 0 : 1;
      ++total;
    }
  }
  CHECK(rejected * 10 >= total * 9);
}

TEST_CASE("hom of comodules over F2 matches enumeration") {
  Rng rng(17);
  for (const CoalgebraPtr& c : {grouplike(F2, 2), divided_power_dual(F2, 2), divided_power_dual(F2, 3)}) {
    for (int trial = 0; trial < 6; ++trial) {
      const Comodule m = random_comodule(c, 3, rng);
      const Comodule n = random_comodule(c, 3, rng);
      if (m.dim * n.dim > 9) continue;
      const Subspace h = hom_comodules(m, n);
      std::size_t count = 0;
      oracle::for_each_matrix(F2, n.dim, m.dim, [&](const Mat& t) {
        if (oracle::naive_is_comodule_map(m, n, t)) ++count;
      });
      CHECK(h.dim() == log_p(count, 2));
      for (std::size_t k = 0; k < h.dim(); ++k) {
        CHECK(oracle::naive_is_comodule_map(m, n, unvec(h.basis().cols_range(k, k + 1), n.dim, m.dim)));
      }
    }
  }
}

TEST_CASE("cotensor with the regular comodule returns the module") {
  Rng rng(23);
  for (const Field& f : fixtures::fields()) {
    const CoalgebraPtr c = divided_power_dual(f, 3);
    for (int trial = 0; trial < 4; ++trial) {
      const Comodule n = random_comodule(c, 4, rng);
      CHECK(cotensor(regular_comodule(c, Side::right), n).dim() == n.dim);
      const Comodule m = dual_comodule(random_comodule(c, 4, rng));
      CHECK(cotensor(m, regular_comodule(c)).dim() == m.dim);
    }
  }
}

TEST_CASE("cotensor over F2 matches enumeration") {
  Rng rng(29);
  const CoalgebraPtr c = divided_power_dual(F2, 2);
  for (int trial = 0; trial < 8; ++trial) {
    const Comodule m = dual_comodule(random_comodule(c, 3, rng));
    const Comodule n = random_comodule(c, 3, rng);
    // Both sides land in M (x) C (x) N.
    const Mat lhs = oracle::kron_by_definition(m.coaction, Mat::identity(F2, n.dim));
    const Mat rhs = oracle::kron_by_definition(Mat::identity(F2, m.dim), n.coaction);
    const std::size_t count = oracle::count_solutions(F2, m.dim * n.dim, [&](const Mat& x) {
      return lhs * x == rhs * x;
    });
    CHECK(cotensor(m, n).dim() == log_p(count, 2));
  }
}

TEST_CASE("dual comodule is an involution") {
  Rng rng(31);
  for (const Field& f : fixtures::fields()) {
    for (const CoalgebraPtr& c : fixtures::coalgebras(f)) {
      if (c->dim > 9) continue;
      const Comodule m = random_comodule(c, 4, rng);
      const Comodule d = dual_comodule(m);
      CHECK(d.side == Side::right);
      CHECK(check_comodule(d).ok());
      const Comodule dd = dual_comodule(d);
      CHECK(dd.side == Side::left);
      CHECK(dd.coaction == m.coaction);
    }
  }
}

TEST_CASE("injectivity") {
  for (const Field& f : fixtures::fields()) {
    for (const CoalgebraPtr& c : fixtures::coalgebras(f)) {
      if (c->dim > 9) continue;
      for (const Comodule& m : {cofree(c, 2), regular_comodule(c)}) {
        const InjectivityResult r = is_injective(m);
        REQUIRE(r.injective);
        CHECK(*r.retraction * m.coaction == Mat::identity(f, m.dim));
      }
    }
    const CoalgebraMorphism rho = divided_power_map(f, 3, 2, 2);
    const Comodule along = comodule_along(rho);
    CHECK_FALSE(is_injective(along).injective);
    CHECK_FALSE(is_injective(direct_sum(along, cofree(rho.target, 1))).injective);
    // Over a cosemisimple coalgebra everything is injective.
    Rng rng(3);
    CHECK(is_injective(random_comodule(grouplike(f, 3), 4, rng)).injective);
  }
}

TEST_CASE("sub and quotient comodules") {
  Rng rng(37);
  for (const Field& f : fixtures::fields()) {
    const CoalgebraPtr c = divided_power_dual(f, 3);
    for (int trial = 0; trial < 5; ++trial) {
      const Comodule m = random_comodule(c, 5, rng);
      const Subspace s = generated_subcomodule(m, random_mat(f, m.dim, 1, rng));
      CHECK(is_subcomodule(m, s.basis()));
      const Comodule sub = subcomodule(m, s.basis());
      CHECK(check_comodule(sub).ok());
      CHECK(oracle::naive_is_comodule_map(sub, m, s.basis()));
      const auto [q, proj] = quotient_comodule(m, s.basis());
      CHECK(check_comodule(q).ok());
      CHECK(q.dim + sub.dim == m.dim);
      CHECK(oracle::naive_is_comodule_map(m, q, proj));
    }
  }
}

TEST_CASE("head and radical") {
  const CoalgebraPtr c = grouplike(QQ, 2);
  const Comodule s0 = grouplike_comodule(c, Mat::column(QQ, {1, 0}));
  const Comodule s1 = grouplike_comodule(c, Mat::column(QQ, {0, 1}));
  const HeadRadical simple = head_radical(s0, {s0, s1});
  CHECK(simple.radical.dim() == 0);
  REQUIRE(simple.head.size() == 1);
  CHECK(simple.head[0].second == 1);
  const HeadRadical twice = head_radical(direct_sum(s1, s1), {s0, s1});
  REQUIRE(twice.head.size() == 1);
  CHECK(twice.head[0].second == 2);

  const auto simples = kernel_simples(1);
  const HeadRadical l1 = head_radical(restrict_to_kernel(catalog_rational("L1"), 1), simples);
  CHECK(l1.radical.dim() == 0);
  const HeadRadical p0 = head_radical(restrict_to_kernel(catalog_P(0), 1), simples);
  CHECK(p0.radical.dim() == 3);
  REQUIRE(p0.head.size() == 1);
  CHECK(p0.head[0].second == 1);
}
