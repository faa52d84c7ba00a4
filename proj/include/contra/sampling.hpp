#pragma once

#include <vector>

#include "contra/functors.hpp"
#include "contra/random.hpp"

namespace contra {

/// Random left comodule of dimension 1..max_dim: a subquotient of a cofree
/// comodule in a random basis.
Comodule random_comodule(const CoalgebraPtr& c, std::size_t max_dim, Rng& rng);
/// Random contramodule of dimension 1..max_dim: a subquotient of a free
/// contramodule in a random basis.
Contramodule random_contramodule(const CoalgebraPtr& c, std::size_t max_dim, Rng& rng);

/// Random element of a hom space, given by its basis.
Mat random_hom(const Subspace& h, std::size_t rows, std::size_t cols, Rng& rng);

/// Nonsplit-or-split sequence with a proper nonzero sub object; degenerate
/// draws are redrawn.
ContraSES random_contra_ses(const CoalgebraPtr& c, std::size_t max_dim, Rng& rng);
ComodSES random_comod_ses(const CoalgebraPtr& c, std::size_t max_dim, Rng& rng);
/// 0 -> A -> C -> C/A -> 0 for a random proper subcomodule A of C.
ComodSES random_regular_ses(const CoalgebraPtr& c, Rng& rng);

ContraSES ses_from_sub(const Contramodule& b, const Mat& sub_basis);
/// Deterministic SES probes (proper subobjects generated by single basis
/// vectors of the free contramodule of rank one) followed by random ones.
std::vector<ContraSES> probe_battery(const CoalgebraPtr& c, std::size_t random_samples, Rng& rng);
ComodSES ses_from_sub(const Comodule& m, const Mat& sub_basis);

/// Surjective coalgebra maps among small catalog coalgebras.
std::vector<CoalgebraMorphism> catalog_surjections(const Field& f);

/// Change of basis: the structure transported along the columns of p.
Comodule rebase(const Comodule& m, const Mat& p);
Contramodule rebase(const Contramodule& b, const Mat& p);

}  // namespace contra
