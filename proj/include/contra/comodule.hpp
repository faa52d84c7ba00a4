#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "contra/coalgebra.hpp"
#include "contra/linalg.hpp"

namespace contra {

enum class Side { left, right };

/// Left: coaction is (n*m) x m with C (x) V index c*m + i.
/// Right: coaction is (m*n) x m with V (x) C index i*n + c.
struct Comodule {
  CoalgebraPtr coalgebra;
  Side side = Side::left;
  std::size_t dim = 0;
  Mat coaction;
  std::string label;

  const Field& field() const { return coalgebra->field; }
};

Verdict check_comodule(const Comodule& m);

Comodule cofree(const CoalgebraPtr& c, std::size_t d);
/// C over itself through Delta.
Comodule regular_comodule(const CoalgebraPtr& c, Side side = Side::left);
/// One-dimensional comodule v -> g (x) v for a grouplike g (given as n x 1).
Comodule grouplike_comodule(const CoalgebraPtr& c, const Mat& g, Side side = Side::left);
/// Basis indices e_i with Delta e_i = e_i (x) e_i and eps(e_i) = 1.
std::vector<std::size_t> grouplike_basis_elements(const Coalgebra& c);

/// Comodule maps M -> N as vectors in Hom(M, N) (map e_x -> e_y at x*dim N + y).
Subspace hom_comodules(const Comodule& m, const Comodule& n);
/// Equalizer of Delta_M (x) Id_N and Id_M (x) Delta_N inside M (x) N.
Subspace cotensor(const Comodule& m, const Comodule& n);
/// Left to right on the dual space and back.
Comodule dual_comodule(const Comodule& m);

Comodule direct_sum(const Comodule& m, const Comodule& n);
/// Subcomodule on the column span of `basis`; throws if not stable.
Comodule subcomodule(const Comodule& m, const Mat& basis);
/// Quotient by the subcomodule spanned by `basis`; also returns the
/// projection (dim quotient x dim m).
std::pair<Comodule, Mat> quotient_comodule(const Comodule& m, const Mat& basis);
/// Smallest subcomodule containing the given vectors.
Subspace generated_subcomodule(const Comodule& m, const Mat& vectors);
/// Whether the column span of `basis` is stable under the coaction.
bool is_subcomodule(const Comodule& m, const Mat& basis);

struct InjectivityResult {
  bool injective = false;
  /// r : C (x) M -> M with r Delta_M = Id, when injective.
  std::optional<Mat> retraction;
};

InjectivityResult is_injective(const Comodule& m);

struct HeadRadical {
  Subspace radical;
  /// (label, multiplicity) for each simple with nonzero multiplicity.
  std::vector<std::pair<std::string, std::size_t>> head;
};

/// The caller must supply a complete irredundant list of simples.
HeadRadical head_radical(const Comodule& m, const std::vector<Comodule>& simples);

/// Reshapes a Hom(M, N) vector into a dim N x dim M matrix and back.
Mat unvec(const Mat& v, std::size_t rows, std::size_t cols);
Mat vec(const Mat& t);

void require_same_coalgebra(const CoalgebraPtr& a, const CoalgebraPtr& b, const char* what);

}  // namespace contra
