#pragma once

// Catalog objects shared by the test suites.

#include <vector>

#include "contra/contramodule.hpp"
#include "contra/random.hpp"
#include "contra/sl2.hpp"

namespace fixtures {

using namespace contra;

inline std::vector<Field> fields() { return {Field::prime(2), Field::prime(3), Field::rationals()}; }

inline std::vector<CoalgebraPtr> coalgebras(const Field& f) {
  std::vector<CoalgebraPtr> out = {grouplike(f, 1),          grouplike(f, 3),
                                   divided_power_dual(f, 2), divided_power_dual(f, 3),
                                   divided_power_dual(f, 4), matrix_coalgebra(f, 2),
                                   dual_of_algebra(truncated_polynomial_algebra(f, 3))};
  if (f.characteristic() == 2) out.push_back(frobenius_kernel(1).coalgebra);
  return out;
}

inline std::vector<Comodule> comodules(const Field& f) {
  std::vector<Comodule> out;
  for (const CoalgebraPtr& c : coalgebras(f)) {
    if (c->dim > 9) continue;
    out.push_back(regular_comodule(c));
    out.push_back(regular_comodule(c, Side::right));
    out.push_back(cofree(c, 2));
  }
  if (f.characteristic() == 2) {
    for (const char* name : {"L0", "L1", "L2", "L3", "P0", "L1*L1"}) {
      out.push_back(restrict_to_kernel(catalog_rational(name), 1));
    }
  }
  return out;
}

inline std::vector<Contramodule> contramodules(const Field& f) {
  std::vector<Contramodule> out;
  for (const CoalgebraPtr& c : coalgebras(f)) {
    if (c->dim > 9) continue;
    out.push_back(free_contramodule(c, 1));
    out.push_back(free_contramodule(c, 2));
    if (!grouplike_basis_elements(*c).empty()) out.push_back(trivial_contramodule(c));
    out.push_back(contra_from_comodule(regular_comodule(c)));
  }
  return out;
}

/// Adds a nonzero scalar to one entry.
inline Mat mutate(const Mat& m, std::size_t row, std::size_t col, const Scalar& delta) {
  auto t = m.triplets();
  t.push_back({row, col, delta});
  return Mat::from_triplets(m.field(), m.rows(), m.cols(), std::move(t));
}

inline Scalar nonzero_scalar(const Field& f, Rng& rng) {
  for (;;) {
    const Scalar s = random_scalar(f, rng);
    if (!s.is_zero()) return s;
  }
}

}  // namespace fixtures
