#pragma once

#include <string>
#include <utility>
#include <vector>

#include "contra/contramodule.hpp"

namespace contra {

/// theta_V (rho* (x) Id), a contramodule over the target of rho.
Contramodule restrict_contra(const CoalgebraMorphism& rho, const Contramodule& v);

/// C as a left (or right) comodule over the target D through rho.
Comodule comodule_along(const CoalgebraMorphism& rho, Side side = Side::left);

/// f, g : Hom(D (x) C, W) -> Hom(C, W), both (n*b) x (n_D*n*b).
std::pair<Mat, Mat> build_f_g(const CoalgebraMorphism& rho, const Contramodule& w);

struct InductionResult {
  Contramodule induced;
  /// Quotient map from free_contramodule(C, dim W) onto the induced object.
  Mat presentation;
  /// A right inverse of the presentation.
  Mat section;
  Mat f_minus_g;
};

/// Throws std::invalid_argument when rho is not a surjective coalgebra map.
InductionResult induce(const CoalgebraMorphism& rho, const Contramodule& w);

/// phi : Ind(W) -> V gives phi(alpha -> eps(alpha) w) : W -> V|_D.
Mat gamma(const CoalgebraMorphism& rho, const InductionResult& ind, const Contramodule& v,
          const Mat& phi);
/// psi : W -> V|_D gives the map Ind(W) -> V induced by theta_V Hom(C, psi).
Mat gamma_inv(const CoalgebraMorphism& rho, const InductionResult& ind, const Contramodule& v,
              const Mat& psi);

struct AdjunctionReport {
  std::size_t lhs_dim = 0;
  std::size_t rhs_dim = 0;
  /// Gamma and its inverse are mutually inverse on full bases and land in
  /// the right hom spaces.
  bool round_trip = false;
  bool ok() const { return lhs_dim == rhs_dim && round_trip; }
};

AdjunctionReport adjunction_check(const CoalgebraMorphism& rho, const Contramodule& w,
                                  const Contramodule& v);

/// 0 -> A -i-> B -p-> Q -> 0.
struct ContraSES {
  Contramodule a, b, q;
  Mat i, p;
};

/// Checks both maps are contra-homomorphisms and the sequence is exact.
Verdict check_ses(const ContraSES& s);

struct ExactnessVerdict {
  bool exact = true;
  /// "left", "middle" or "right" for each failing position.
  std::vector<std::string> failures;
};

/// Map Ind(A) -> Ind(B) induced by h : A -> B.
Mat induce_map(const InductionResult& ia, const InductionResult& ib, const Mat& h);

ExactnessVerdict exactness_probe(const CoalgebraMorphism& rho, const ContraSES& s);

/// Exactness of a three-term sequence of linear maps at each position.
ExactnessVerdict sequence_exactness(const Mat& i, const Mat& p);

/// 0 -> A -> B -> Q -> 0 of left comodules.
struct ComodSES {
  Comodule a, b, q;
  Mat i, p;
};

Verdict check_ses(const ComodSES& s);

/// Cohom(h, B) : Cohom(N, B) -> Cohom(M, B) for a comodule map h : M -> N.
Mat cohom_map(const Comodule& m, const Comodule& n, const Mat& h, const Contramodule& b);

/// Applies the contravariant Cohom(-, B) to the sequence and checks the
/// result 0 -> Cohom(Q, B) -> Cohom(B', B) -> Cohom(A, B) -> 0.
ExactnessVerdict cohom_exactness(const ComodSES& s, const Contramodule& b);

}  // namespace contra
