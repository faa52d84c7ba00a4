#include "doctest.h"

#include "contra/towers.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace contra;

namespace {
const Field F2 = Field::prime(2);

SL2Poly random_poly(std::uint32_t p, Rng& rng) {
  SL2Poly x(p);
  for (int t = 0; t < 4; ++t) {
    const SL2Mono m{static_cast<std::uint32_t>(uniform(rng, 0, 2)), static_cast<std::uint32_t>(uniform(rng, 0, 2)),
                    static_cast<std::int64_t>(uniform(rng, 0, 4)) - 2};
    x = x + SL2Poly::mono(p, m, static_cast<std::uint32_t>(uniform(rng, 1, p - 1)));
  }
  return x;
}

bool normal(const SL2Poly& x) {
  // Normal form never stores a monomial with both a and d; ad carries the sign.
  for (const auto& [m, coeff] : x.terms()) {
    if (coeff == 0 || coeff >= x.characteristic()) return false;
  }
  return true;
}

Character ch(std::initializer_list<std::pair<const long, long>> items) { return Character(items); }
}  // namespace

TEST_CASE("normal form arithmetic") {
  for (std::uint32_t p : {2u, 3u}) {
    const SL2Poly a = SL2Poly::a(p), b = SL2Poly::b(p), c = SL2Poly::c(p), d = SL2Poly::d(p);
    CHECK((a * d - b * c - SL2Poly::constant(p, 1)).is_zero());
    CHECK((d * a).terms().size() == 2);
    Rng rng(101 + p);
    for (int t = 0; t < 30; ++t) {
      const SL2Poly x = random_poly(p, rng), y = random_poly(p, rng), z = random_poly(p, rng);
      CHECK(x * y == y * x);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(normal(x * y));
      CHECK(x.frobenius(1) == x.pow(p));
      CHECK((x * y).frobenius(1) == x.frobenius(1) * y.frobenius(1));
      CHECK((x * y).antipode() == x.antipode() * y.antipode());
      CHECK((x * y).counit() == (x.counit() * y.counit()) % p);
    }
    // The antipode inverts the defining matrix.
    CHECK(a * a.antipode() + b * c.antipode() == SL2Poly::constant(p, 1));
    CHECK((a * b.antipode() + b * d.antipode()).is_zero());
  }
}

TEST_CASE("catalog dimensions and axioms") {
  const std::vector<std::pair<std::string, std::size_t>> table = {
      {"L0", 1}, {"L1", 2}, {"L2", 2}, {"L3", 4}, {"P0", 4}, {"P1", 2}, {"L1*L1", 4}, {"L1+L0", 3}};
  for (const auto& [name, dim] : table) {
    CAPTURE(name);
    const RationalComodule m = catalog_rational(name);
    CHECK(m.dim == dim);
    CHECK(check_rational(m).ok());
    CHECK(check_comodule(restrict_to_kernel(m, 1)).ok());
  }
  CHECK_THROWS_AS(catalog_rational("X7"), std::invalid_argument);
}

TEST_CASE("characters") {
  CHECK(character(catalog_rational("L1*L1")) == ch({{-2, 1}, {0, 2}, {2, 1}}));
  CHECK(character(catalog_rational("L1^Fr")) == ch({{-2, 1}, {2, 1}}));
  CHECK(character(catalog_rational("L3")) == ch({{-3, 1}, {-1, 1}, {1, 1}, {3, 1}}));
  CHECK(character(catalog_P(0)) == ch({{-2, 1}, {0, 2}, {2, 1}}));
  for (const char* name : {"L0", "L1", "L2", "L3", "P0", "L1*L1"}) {
    const RationalComodule m = catalog_rational(name);
    const Character c = character(m);
    long mass = 0;
    for (const auto& [w, k] : c) {
      mass += k;
      CHECK(c.at(-w) == k);
    }
    CHECK(mass == static_cast<long>(m.dim));
    const RationalComodule l1 = natural_rational(2);
    CHECK(character(tensor_rational(m, l1)) == character_product(c, character(l1)));
    CHECK(character(direct_sum_rational(m, l1)) == character_sum(c, character(l1)));
    CHECK(tensor_rational(m, trivial_rational(2)).coeff == m.coeff);
  }
}

TEST_CASE("Frobenius twist") {
  CHECK(frobenius_twist(trivial_rational(2), 1).coeff == trivial_rational(2).coeff);
  const RationalComodule l1 = natural_rational(2);
  CHECK(frobenius_twist(frobenius_twist(l1, 1), 1).coeff == frobenius_twist(l1, 2).coeff);
  CHECK(check_rational(frobenius_twist(l1, 2)).ok());
  // Over G1 the twisted module only sees constants.
  const Comodule r = restrict_to_kernel(frobenius_twist(l1, 1), 1);
  const FrobeniusKernel& g1 = frobenius_kernel(1);
  for (const Triplet& t : r.coaction.triplets()) CHECK(t.row / r.dim == g1.index(0, 0, 0));
}

TEST_CASE("composition multiplicities") {
  CHECK(f_multiplicity(0, catalog_rational("L1*L1")) == 2);
  CHECK(f_multiplicity(2, catalog_rational("L1*L1")) == 1);
  CHECK(f_multiplicity(1, catalog_P(0)) == 0);
  CHECK(f_multiplicity(0, catalog_P(0)) == 2);
  for (long lambda = 0; lambda < 8; ++lambda) {
    CHECK(f_multiplicity(lambda, simple_rational(lambda)) == 1);
    CHECK(character(simple_rational(lambda)) == simple_character(2, lambda));
  }
  // Additive over direct sums.
  CHECK(f_multiplicity(0, catalog_rational("L1*L1+P0+L0")) == 5);
  // A character that is not a nonnegative combination of simples.
  CHECK_THROWS_AS(f_multiplicity(2, 0, ch({{2, 1}, {-2, 1}, {0, -1}})), std::logic_error);

  // Simple characters for weights below 8 are independent.
  std::vector<Triplet> t;
  for (long lambda = 0; lambda < 8; ++lambda) {
    for (const auto& [w, k] : simple_character(2, lambda)) {
      t.push_back({static_cast<std::size_t>(w + 8), static_cast<std::size_t>(lambda), Scalar(Field::rationals(), k)});
    }
  }
  CHECK(oracle::dense_rank(Mat::from_triplets(Field::rationals(), 17, 8, t)) == 8);
}

TEST_CASE("G-homomorphisms") {
  CHECK(hom_G(catalog_rational("L1"), catalog_rational("L1")).dim() == 1);
  CHECK(hom_G(catalog_rational("L0"), catalog_P(0)).dim() == 1);
  const Subspace h = hom_G(catalog_P(0), catalog_rational("L0"));
  CHECK(h.dim() == 1);
  CHECK(h.contains(vec(catalog_q())));
  CHECK(rank(catalog_q()) == 1);
  CHECK(kernel_basis(catalog_q()).cols() == 3);
  CHECK(hom_G(catalog_rational("L1"), catalog_rational("L2")).dim() == 0);
}

TEST_CASE("restriction to Frobenius kernels") {
  const Comodule triv = restrict_to_kernel(trivial_rational(2), 1);
  CHECK(triv.coaction == Mat::from_triplets(F2, 8, 1, {{frobenius_kernel(1).index(0, 0, 0), 0, Scalar(F2, 1L)}}));
  const Comodule l1 = restrict_to_kernel(catalog_rational("L1"), 1);
  CHECK(is_projective(contra_from_comodule(l1)).projective);
  CHECK(is_injective(l1).injective);
  CHECK_FALSE(is_injective(restrict_to_kernel(catalog_rational("L0"), 1)).injective);
  const auto simples = kernel_simples(1);
  CHECK(simples.size() == 2);
  CHECK(head_radical(l1, simples).radical.dim() == 0);
}

TEST_CASE("towers of P_lambda") {
  const RationalTower t0 = build_tower(0, 3);
  const RationalTower t1 = build_tower(1, 3);
  std::vector<std::size_t> d0, d1;
  for (const auto& s : t0.stages) d0.push_back(s.dim);
  for (const auto& s : t1.stages) d1.push_back(s.dim);
  CHECK(d0 == std::vector<std::size_t>{4, 16, 64});
  CHECK(d1 == std::vector<std::size_t>{2, 8, 32});
  for (const RationalTower* t : {&t0, &t1}) {
    for (std::size_t k = 0; k < t->transitions.size(); ++k) {
      const Mat& q = t->transitions[k];
      CHECK(rank(q) == t->stages[k].dim);
      CHECK(kernel_basis(q).cols() == t->stages[k + 1].dim - t->stages[k].dim);
      CHECK(hom_G(t->stages[k + 1], t->stages[k]).contains(vec(q)));
    }
    for (unsigned m = 1; m <= 2; ++m) {
      const HeadRadical h = tower_head(*t, m);
      REQUIRE(h.head.size() == 1);
      CHECK(h.head[0].second == 1);
    }
  }
}

TEST_CASE("Hom over G agrees with Hom over a large enough kernel") {
  for (long lambda : {0L, 1L}) {
    const RationalTower t = build_tower(lambda, 2);
    for (const char* name : {"L0", "L1", "L2", "L1*L1"}) {
      CAPTURE(name);
      const RationalComodule v = catalog_rational(name);
      const RationalComodule& p = t.stage(2);
      const std::size_t g = hom_G(p, v).dim();
      CHECK(g == hom_comodules(restrict_to_kernel(p, 2), restrict_to_kernel(v, 2)).dim());
      CHECK(static_cast<long>(g) == f_multiplicity(lambda, v));
    }
  }
}
