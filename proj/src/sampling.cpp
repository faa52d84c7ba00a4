#include "contra/sampling.hpp"

#include <stdexcept>

namespace contra {

namespace {

Mat random_nonzero_vector(const Field& f, std::size_t n, Rng& rng, double density) {
  for (;;) {
    Mat v = random_mat(f, n, 1, rng, density);
    if (!v.is_zero()) return v;
  }
}

}  // namespace

Comodule rebase(const Comodule& m, const Mat& p) {
  const Mat pinv = inverse(p);
  const Mat in = Mat::identity(m.field(), m.coalgebra->dim);
  const Mat moved = m.coaction * p;
  Mat coaction = m.side == Side::left ? kron_apply(in, pinv, moved) : kron_apply(pinv, in, moved);
  return {m.coalgebra, m.side, m.dim, std::move(coaction), m.label};
}

Contramodule rebase(const Contramodule& b, const Mat& p) {
  const Mat in = Mat::identity(b.field(), b.coalgebra->dim);
  return {b.coalgebra, b.dim, inverse(p) * b.theta * kron(in, p), b.label};
}

Comodule random_comodule(const CoalgebraPtr& c, std::size_t max_dim, Rng& rng) {
  const Field& f = c->field;
  for (;;) {
    const Comodule big = cofree(c, uniform(rng, 1, 2));
    const double density = 1.0 / static_cast<double>(1 + uniform(rng, 1, big.dim));
    Mat gens = random_nonzero_vector(f, big.dim, rng, density);
    if (uniform(rng, 0, 2) == 0) gens = hstack({gens, random_nonzero_vector(f, big.dim, rng, density)});
    const Subspace s = generated_subcomodule(big, gens);
    Comodule m = subcomodule(big, s.basis());
    if (m.dim > 1 && uniform(rng, 0, 1)) {
      const Subspace inner =
          generated_subcomodule(m, random_nonzero_vector(f, m.dim, rng, 0.3));
      if (inner.dim() < m.dim) m = quotient_comodule(m, inner.basis()).first;
    }
    if (m.dim == 0 || m.dim > max_dim) continue;
    m = rebase(m, random_invertible(f, m.dim, rng));
    m.label = "random";
    return m;
  }
}

Contramodule random_contramodule(const CoalgebraPtr& c, std::size_t max_dim, Rng& rng) {
  const Field& f = c->field;
  for (;;) {
    const Contramodule big = free_contramodule(c, uniform(rng, 1, 2));
    const double density = 1.0 / static_cast<double>(1 + uniform(rng, 1, big.dim));
    Contramodule b = big;
    if (uniform(rng, 0, 1)) {
      const Subspace s = generated_subcontramodule(big, random_nonzero_vector(f, big.dim, rng, density));
      b = subcontramodule(big, s.basis());
    }
    if (b.dim > max_dim || uniform(rng, 0, 2)) {
      // Quotient by a random subcontramodule until small enough.
      for (int step = 0; step < 4 && b.dim > 0; ++step) {
        const Subspace r = generated_subcontramodule(b, random_nonzero_vector(f, b.dim, rng, density));
        if (r.dim() == b.dim) break;
        b = quotient_contramodule(b, r.basis()).first;
        if (b.dim <= max_dim && uniform(rng, 0, 1)) break;
      }
    }
    if (b.dim == 0 || b.dim > max_dim) continue;
    b = rebase(b, random_invertible(f, b.dim, rng));
    b.label = "random";
    return b;
  }
}

Mat random_hom(const Subspace& h, std::size_t rows, std::size_t cols, Rng& rng) {
  const Mat coeffs = random_mat(h.field(), h.dim(), 1, rng, 0.8);
  return unvec(h.basis() * coeffs, rows, cols);
}

ContraSES ses_from_sub(const Contramodule& b, const Mat& sub_basis) {
  Contramodule a = subcontramodule(b, sub_basis);
  auto [q, p] = quotient_contramodule(b, sub_basis);
  return {std::move(a), b, std::move(q), sub_basis, std::move(p)};
}

ComodSES ses_from_sub(const Comodule& m, const Mat& sub_basis) {
  Comodule a = subcomodule(m, sub_basis);
  auto [q, p] = quotient_comodule(m, sub_basis);
  return {std::move(a), m, std::move(q), sub_basis, std::move(p)};
}

ContraSES random_contra_ses(const CoalgebraPtr& c, std::size_t max_dim, Rng& rng) {
  for (;;) {
    const Contramodule b = random_contramodule(c, max_dim, rng);
    if (b.dim < 2) continue;
    const Subspace s = generated_subcontramodule(b, random_nonzero_vector(c->field, b.dim, rng, 0.5));
    if (s.dim() == 0 || s.dim() == b.dim) continue;
    return ses_from_sub(b, s.basis());
  }
}

std::vector<ContraSES> probe_battery(const CoalgebraPtr& c, std::size_t random_samples, Rng& rng) {
  std::vector<ContraSES> out;
  const Contramodule free1 = free_contramodule(c, 1);
  for (std::size_t k = 0; k < free1.dim; ++k) {
    const Subspace s = generated_subcontramodule(free1, Mat::from_triplets(c->field, free1.dim, 1, {{k, 0, Scalar(c->field, 1)}}));
    if (s.dim() == 0 || s.dim() == free1.dim) continue;
    out.push_back(ses_from_sub(free1, s.basis()));
  }
  for (std::size_t t = 0; t < random_samples; ++t) out.push_back(random_contra_ses(c, 4, rng));
  return out;
}

ComodSES random_comod_ses(const CoalgebraPtr& c, std::size_t max_dim, Rng& rng) {
  for (;;) {
    const Comodule m = random_comodule(c, max_dim, rng);
    if (m.dim < 2) continue;
    const Subspace s = generated_subcomodule(m, random_nonzero_vector(c->field, m.dim, rng, 0.5));
    if (s.dim() == 0 || s.dim() == m.dim) continue;
    return ses_from_sub(m, s.basis());
  }
}

ComodSES random_regular_ses(const CoalgebraPtr& c, Rng& rng) {
  const Comodule m = regular_comodule(c);
  for (;;) {
    const double density = 1.0 / static_cast<double>(uniform(rng, 1, m.dim));
    const Subspace s = generated_subcomodule(m, random_nonzero_vector(c->field, m.dim, rng, density));
    if (s.dim() == 0 || s.dim() == m.dim) continue;
    return ses_from_sub(m, s.basis());
  }
}

std::vector<CoalgebraMorphism> catalog_surjections(const Field& f) {
  return {
      identity_morphism(divided_power_dual(f, 3)),
      divided_power_map(f, 3, 2, 2),
      divided_power_map(f, 4, 2, 2),
      divided_power_map(f, 4, 2, 3),
      grouplike_map(f, 3, 2, {0, 1, 1}),
      counit_morphism(divided_power_dual(f, 3)),
      diagonal_morphism(f, 2),
  };
}

}  // namespace contra
