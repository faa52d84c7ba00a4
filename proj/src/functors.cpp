#include "contra/functors.hpp"

#include <stdexcept>

namespace contra {

Contramodule restrict_contra(const CoalgebraMorphism& rho, const Contramodule& v) {
  require_same_coalgebra(rho.source, v.coalgebra, "restrict");
  Contramodule out{rho.target, v.dim,
                   v.theta * kron(rho.matrix.transpose(), Mat::identity(v.field(), v.dim)),
                   v.label + "|"};
  return out;
}

Comodule comodule_along(const CoalgebraMorphism& rho, Side side) {
  const Coalgebra& c = *rho.source;
  const Mat id = Mat::identity(c.field, c.dim);
  Mat coaction = side == Side::left ? kron_apply(rho.matrix, id, c.delta)
                                    : kron_apply(id, rho.matrix, c.delta);
  return {rho.target, side, c.dim, std::move(coaction), c.name + " over " + rho.target->name};
}

std::pair<Mat, Mat> build_f_g(const CoalgebraMorphism& rho, const Contramodule& w) {
  require_same_coalgebra(rho.target, w.coalgebra, "build_f_g");
  return cohom_maps(comodule_along(rho), w);
}

InductionResult induce(const CoalgebraMorphism& rho, const Contramodule& w) {
  const Verdict v = check_morphism(rho);
  if (!v.ok() || !rho.surjective) {
    throw std::invalid_argument("induction needs a surjective coalgebra map");
  }
  const auto [f, g] = build_f_g(rho, w);
  InductionResult r;
  r.f_minus_g = f - g;
  const Coequalizer q = cokernel(r.f_minus_g);
  r.presentation = q.quotient_map;
  r.section = q.section;
  const Contramodule free = free_contramodule(rho.source, w.dim);
  const Mat in = Mat::identity(w.field(), rho.source->dim);
  if (!(q.quotient_map * free.theta * kron(in, r.f_minus_g)).is_zero()) {
    throw std::logic_error("relations of the induced contramodule are not a subcontramodule");
  }
  r.induced = {rho.source, q.dim, q.quotient_map * free.theta * kron(in, q.section),
               "Ind(" + w.label + ")"};
  return r;
}

Mat gamma(const CoalgebraMorphism& rho, const InductionResult& ind, const Contramodule& v,
          const Mat& phi) {
  require_shape(phi.rows() == v.dim && phi.cols() == ind.induced.dim, "gamma argument");
  const std::size_t b = ind.presentation.cols() / rho.source->dim;
  return phi * ind.presentation * kron(counit_column(*rho.source), Mat::identity(v.field(), b));
}

Mat gamma_inv(const CoalgebraMorphism& rho, const InductionResult& ind, const Contramodule& v,
              const Mat& psi) {
  const std::size_t b = ind.presentation.cols() / rho.source->dim;
  require_shape(psi.rows() == v.dim && psi.cols() == b, "gamma_inv argument");
  const Mat lifted = v.theta * kron(Mat::identity(v.field(), rho.source->dim), psi);
  if (!(lifted * ind.f_minus_g).is_zero()) {
    throw std::invalid_argument("gamma_inv: map does not vanish on the relations");
  }
  return lifted * ind.section;
}

AdjunctionReport adjunction_check(const CoalgebraMorphism& rho, const Contramodule& w,
                                  const Contramodule& v) {
  const InductionResult ind = induce(rho, w);
  const Contramodule vr = restrict_contra(rho, v);
  const Subspace lhs = hom_contra(ind.induced, v);
  const Subspace rhs = hom_contra(w, vr);
  AdjunctionReport r;
  r.lhs_dim = lhs.dim();
  r.rhs_dim = rhs.dim();
  r.round_trip = true;
  for (std::size_t t = 0; t < lhs.dim() && r.round_trip; ++t) {
    const Mat phi = unvec(lhs.basis().cols_range(t, t + 1), v.dim, ind.induced.dim);
    const Mat psi = gamma(rho, ind, v, phi);
    r.round_trip = rhs.contains(vec(psi)) && gamma_inv(rho, ind, v, psi) == phi;
  }
  for (std::size_t t = 0; t < rhs.dim() && r.round_trip; ++t) {
    const Mat psi = unvec(rhs.basis().cols_range(t, t + 1), v.dim, w.dim);
    const Mat phi = gamma_inv(rho, ind, v, psi);
    r.round_trip = lhs.contains(vec(phi)) && gamma(rho, ind, v, phi) == psi;
  }
  return r;
}

ExactnessVerdict sequence_exactness(const Mat& i, const Mat& p) {
  ExactnessVerdict v;
  const std::size_t ri = rank(i), rp = rank(p);
  if (ri != i.cols()) v.failures.push_back("left");
  if (!(p * i).is_zero() || ri != p.cols() - rp) v.failures.push_back("middle");
  if (rp != p.rows()) v.failures.push_back("right");
  v.exact = v.failures.empty();
  return v;
}

namespace {

void check_exact_maps(const Mat& i, const Mat& p, std::size_t da, std::size_t db, std::size_t dq,
                      Verdict& v) {
  if (i.rows() != db || i.cols() != da || p.rows() != dq || p.cols() != db) {
    v.fail("map shapes");
    return;
  }
  if (!sequence_exactness(i, p).exact) v.fail("not exact");
}

}  // namespace

Verdict check_ses(const ContraSES& s) {
  Verdict v;
  check_exact_maps(s.i, s.p, s.a.dim, s.b.dim, s.q.dim, v);
  if (!v.ok()) return v;
  if (!hom_contra(s.a, s.b).contains(vec(s.i))) v.fail("inclusion is not a contra-homomorphism");
  if (!hom_contra(s.b, s.q).contains(vec(s.p))) v.fail("projection is not a contra-homomorphism");
  return v;
}

Verdict check_ses(const ComodSES& s) {
  Verdict v;
  check_exact_maps(s.i, s.p, s.a.dim, s.b.dim, s.q.dim, v);
  if (!v.ok()) return v;
  if (!hom_comodules(s.a, s.b).contains(vec(s.i))) v.fail("inclusion is not a comodule map");
  if (!hom_comodules(s.b, s.q).contains(vec(s.p))) v.fail("projection is not a comodule map");
  return v;
}

Mat induce_map(const InductionResult& ia, const InductionResult& ib, const Mat& h) {
  const std::size_t n = ia.induced.coalgebra->dim;
  return ib.presentation * kron(Mat::identity(h.field(), n), h) * ia.section;
}

ExactnessVerdict exactness_probe(const CoalgebraMorphism& rho, const ContraSES& s) {
  const Verdict v = check_ses(s);
  if (!v.ok()) throw std::invalid_argument("exactness_probe: input is not a short exact sequence");
  const InductionResult ia = induce(rho, s.a), ib = induce(rho, s.b), iq = induce(rho, s.q);
  return sequence_exactness(induce_map(ia, ib, s.i), induce_map(ib, iq, s.p));
}

Mat cohom_map(const Comodule& m, const Comodule& n, const Mat& h, const Contramodule& b) {
  const Coequalizer qm = cohom(m, b), qn = cohom(n, b);
  return qm.quotient_map * kron(h.transpose(), Mat::identity(b.field(), b.dim)) * qn.section;
}

ExactnessVerdict cohom_exactness(const ComodSES& s, const Contramodule& b) {
  return sequence_exactness(cohom_map(s.b, s.q, s.p, b), cohom_map(s.a, s.b, s.i, b));
}

}  // namespace contra
