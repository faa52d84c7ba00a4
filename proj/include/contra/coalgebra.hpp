#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "contra/mat.hpp"
#include "contra/verdict.hpp"

namespace contra {

/// A finite-dimensional coalgebra: delta is n^2 x n (column k holds
/// Delta(e_k)), epsilon is 1 x n.
struct Coalgebra {
  Field field = Field::rationals();
  std::size_t dim = 0;
  Mat delta;
  Mat epsilon;
  std::string name;
};

using CoalgebraPtr = std::shared_ptr<const Coalgebra>;

/// Coassociativity and both counit identities.
Verdict check_coalgebra(const Coalgebra& c);

/// rho : source -> target, stored as target.dim x source.dim.
struct CoalgebraMorphism {
  CoalgebraPtr source;
  CoalgebraPtr target;
  Mat matrix;
  bool surjective = false;
};

Verdict check_morphism(const CoalgebraMorphism& rho);

/// A finite-dimensional algebra: mult is n x n^2, unit is n x 1.
struct Algebra {
  Field field = Field::rationals();
  std::size_t dim = 0;
  Mat mult;
  Mat unit;
  std::string name;
};

Verdict check_algebra(const Algebra& a);

struct Bialgebra {
  CoalgebraPtr coalgebra;
  Mat mult;
  Mat unit;
};

/// Algebra axioms plus multiplicativity of delta and epsilon.
Verdict check_bialgebra(const Bialgebra& b);

// Catalog.
CoalgebraPtr grouplike(const Field& f, std::size_t n);
/// Comatrix coalgebra on e_ij (index i*n+j), Delta e_ij = sum_k e_ik (x) e_kj.
CoalgebraPtr matrix_coalgebra(const Field& f, std::size_t n);
/// Dual of k[t]/(t^m): Delta c_m = sum_{i+j=m} c_i (x) c_j.
CoalgebraPtr divided_power_dual(const Field& f, std::size_t m);
/// Transposes the structure tensors of a finite-dimensional algebra.
CoalgebraPtr dual_of_algebra(const Algebra& a);
Algebra dual_algebra(const Coalgebra& c);
/// k[t]/(t^m) in the basis 1, t, ..., t^{m-1}.
Algebra truncated_polynomial_algebra(const Field& f, std::size_t m);
/// M_n(k) in the basis of matrix units.
Algebra matrix_algebra(const Field& f, std::size_t n);

/// Looks up "grouplike(3)", "matrix_coalgebra(2)", "divided_power_dual(3)",
/// "dual_of_algebra(truncated(3))", "frobenius_kernel(1)" (p = 2 only).
CoalgebraPtr catalog_coalgebra(const std::string& name, const Field& f);

// Catalog morphisms.
CoalgebraMorphism identity_morphism(const CoalgebraPtr& c);
/// C -> grouplike(1) given by the counit.
CoalgebraMorphism counit_morphism(const CoalgebraPtr& c);
/// divided_power_dual(m) -> divided_power_dual(m2) dual to s -> t^e.
CoalgebraMorphism divided_power_map(const Field& f, std::size_t m, std::size_t m2, std::size_t e);
/// grouplike(n) -> grouplike(n2) induced by a function on basis indices.
CoalgebraMorphism grouplike_map(const Field& f, std::size_t n, std::size_t n2,
                                const std::vector<std::size_t>& onto);
/// matrix_coalgebra(n) -> grouplike(n), e_ij -> delta_ij g_i.
CoalgebraMorphism diagonal_morphism(const Field& f, std::size_t n);

/// The counit as an element of C*, i.e. epsilon transposed (n x 1).
Mat counit_column(const Coalgebra& c);

}  // namespace contra
