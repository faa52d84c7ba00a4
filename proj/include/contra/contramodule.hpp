#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "contra/comodule.hpp"

namespace contra {

/// theta : C* (x) B -> B, shape b x (n*b); column j*b + k is the image of
/// xi_j (x) e_k where xi_j is the dual basis of C.
///
/// Contra-associativity reads theta(xi (x) theta(eta (x) v)) =
/// theta((eta * xi) (x) v) with (eta * xi)(c) = sum eta(c1) xi(c2),
/// matching the adjunction Hom(U, Hom(V, W)) = Hom(V (x) U, W).
struct Contramodule {
  CoalgebraPtr coalgebra;
  std::size_t dim = 0;
  Mat theta;
  std::string label;

  const Field& field() const { return coalgebra->field; }
};

Verdict check_contramodule(const Contramodule& b);

/// The convolution C* (x) C* -> C*, xi_j (x) xi_l -> xi_l * xi_j (n x n^2).
Mat convolution(const Coalgebra& c);

/// Hom(C, k^d) = C* (x) k^d, index l*d + v.
Contramodule free_contramodule(const CoalgebraPtr& c, std::size_t d);
/// One-dimensional contramodule xi -> xi(g) for a grouplike basis element;
/// picks the first grouplike basis element when none is given.
Contramodule trivial_contramodule(const CoalgebraPtr& c, std::optional<std::size_t> g = {});

/// Contra-homomorphisms B -> D as vectors of Hom(B, D).
Subspace hom_contra(const Contramodule& b, const Contramodule& d);

/// The C*-action on a left comodule: xi . w = (xi (x) id) Delta_W(w).
Contramodule contra_from_comodule(const Comodule& w);
/// Hom(M, k^d) = M* (x) k^d for a right comodule M, index l*d + v.
Contramodule contra_from_dual(const Comodule& m, std::size_t d);

/// Coequalizer of Id_M (x) theta_B and the evaluation through Delta_M on
/// M (x) C* (x) B (index (i*n + j)*b + k) onto M (x) B (index i*b + k).
Coequalizer contratensor(const Comodule& m, const Contramodule& b);
/// The two maps whose coequalizer is the contratensor product.
std::pair<Mat, Mat> contratensor_maps(const Comodule& m, const Contramodule& b);

/// Coequalizer of Hom(Delta_M, B) and Hom(M, theta_B) from Hom(C (x) M, B)
/// (index (c*m + i)*b + k) onto Hom(M, B) (index i*b + k).
Coequalizer cohom(const Comodule& m, const Contramodule& b);
std::pair<Mat, Mat> cohom_maps(const Comodule& m, const Contramodule& b);

struct ProjectivityResult {
  bool projective = false;
  /// s : B -> free(C, dim B) with theta_B s = Id, when projective.
  std::optional<Mat> section;
};

ProjectivityResult is_projective(const Contramodule& b);

struct DualityReport {
  std::size_t cohom_dim = 0;
  std::size_t hom_dim = 0;
  std::size_t pairing_rank = 0;
  bool well_defined = false;
  bool ok() const { return well_defined && cohom_dim == hom_dim && pairing_rank == hom_dim; }
};

/// Cohom(V, W) against Hom_C(W, V), with the trace pairing <h, s> = tr(h s).
DualityReport duality_check(const Comodule& v, const Comodule& w);

Contramodule direct_sum(const Contramodule& a, const Contramodule& b);
bool is_subcontramodule(const Contramodule& b, const Mat& basis);
Contramodule subcontramodule(const Contramodule& b, const Mat& basis);
std::pair<Contramodule, Mat> quotient_contramodule(const Contramodule& b, const Mat& basis);
/// Smallest subcontramodule containing the given vectors.
Subspace generated_subcontramodule(const Contramodule& b, const Mat& vectors);

}  // namespace contra
