#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contra/contramodule.hpp"
#include "contra/sl2.hpp"

namespace contra {

/// Finite window m0..m0 + dims.size() - 1 of an inverse system of vector
/// spaces; transitions[t] maps stage m0 + t + 1 to stage m0 + t.
struct InverseSystem {
  Field field = Field::rationals();
  std::size_t m0 = 0;
  std::vector<std::size_t> dims;
  std::vector<Mat> transitions;
  /// Optional contramodule structure on every stage.
  std::vector<Contramodule> contramodules;

  std::size_t m_max() const { return m0 + dims.size() - 1; }
  std::size_t dim(std::size_t m) const { return dims.at(m - m0); }
  /// f_{i,j} : stage j -> stage i for i <= j.
  Mat composite(std::size_t i, std::size_t j) const;
};

/// Shapes, and transitions are contra-homomorphisms when structures are present.
Verdict check_system(const InverseSystem& s);

struct MittagLefflerResult {
  bool mittag_leffler = false;
  /// First j after which the image of stage j in stage `at` is constant.
  std::optional<std::size_t> stabilized_at;
  /// dim f_{at,j}(A_j) for j = at+1..m_max.
  std::vector<std::size_t> image_dims;
};

MittagLefflerResult is_mittag_leffler(const InverseSystem& s, std::size_t at);

/// Stagewise maps between two systems over the same window.
struct SystemMap {
  std::vector<Mat> maps;
};

/// The system B_m / alpha_m(A_m) with induced transitions.
InverseSystem quotient_system(const InverseSystem& b, const InverseSystem& a, const SystemMap& alpha);

enum class LimitVerdict { exact, not_exact, inconclusive };
std::string to_string(LimitVerdict v);

struct FourTermReport {
  LimitVerdict verdict = LimitVerdict::inconclusive;
  bool hypothesis_a = false;
  bool hypothesis_quotient = false;
  /// Stages at which the stable-image sequence was checked.
  std::vector<std::size_t> checked_stages;
  std::string detail;
};

/// 0 -> A -> B -> C -> D -> 0 stagewise exact with compatible maps; throws
/// std::invalid_argument when that precondition fails.
FourTermReport limit_four_term(const InverseSystem& a, const InverseSystem& b,
                               const InverseSystem& c, const InverseSystem& d,
                               const SystemMap& alpha, const SystemMap& beta,
                               const SystemMap& gamma);

/// Exactness of a chain of linear maps d_0, d_1, ... (d_{k+1} d_k = 0 and
/// ker = im at every inner position, injective first, surjective last).
bool chain_exact(const std::vector<Mat>& maps, std::size_t first_dim);

struct TowerStage {
  unsigned m = 0;
  std::size_t dim_P = 0;
  std::size_t dim_cohom = 0;
  std::size_t dim_hom = 0;
  /// dim Hom_G(P_{lambda,m}, V) from the polynomial coactions.
  std::optional<std::size_t> dim_hom_G;
  /// Head of P_{lambda,m} over G_m is L(lambda) with multiplicity one.
  std::optional<bool> head_ok;
};

struct TowerReport {
  long lambda = 0;
  std::uint32_t p = 2;
  std::string v_label;
  std::vector<TowerStage> stages;
  std::optional<unsigned> stabilized_at;
  /// First m with p^{m-1} above every weight of V.
  unsigned weight_stage = 0;
  long f_V = 0;
  bool match = false;
};

struct TowerOptions {
  bool check_heads = true;
  bool compute_hom = true;
};

TowerReport cohom_tower(const RationalComodule& v, const RationalTower& tower,
                        const TowerOptions& options = {});

/// Head of P_{lambda,m} over k[G_m] against the catalog simples.
HeadRadical tower_head(const RationalTower& tower, unsigned m);

}  // namespace contra
