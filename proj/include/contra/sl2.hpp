#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "contra/coalgebra.hpp"
#include "contra/comodule.hpp"
#include "contra/linalg.hpp"

namespace contra {

/// Monomial b^i c^j a^k (ad >= 0) or b^i c^j d^{-ad} (ad < 0) in the
/// normal form of k[SL2] = k[a,b,c,d]/(ad - bc - 1).
struct SL2Mono {
  std::uint32_t b = 0;
  std::uint32_t c = 0;
  std::int64_t ad = 0;
  auto operator<=>(const SL2Mono&) const = default;
};

/// Element of k[SL2] over F_p in normal form.
class SL2Poly {
 public:
  explicit SL2Poly(std::uint32_t p = 2) : p_(p) {}
  static SL2Poly constant(std::uint32_t p, long v);
  static SL2Poly a(std::uint32_t p) { return mono(p, {0, 0, 1}); }
  static SL2Poly b(std::uint32_t p) { return mono(p, {1, 0, 0}); }
  static SL2Poly c(std::uint32_t p) { return mono(p, {0, 1, 0}); }
  static SL2Poly d(std::uint32_t p) { return mono(p, {0, 0, -1}); }
  static SL2Poly mono(std::uint32_t p, SL2Mono m, std::uint32_t coeff = 1);

  std::uint32_t characteristic() const { return p_; }
  const std::map<SL2Mono, std::uint32_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of the empty monomial.
  std::uint32_t constant_term() const;

  SL2Poly operator+(const SL2Poly& o) const;
  SL2Poly operator-(const SL2Poly& o) const;
  SL2Poly operator*(const SL2Poly& o) const;
  SL2Poly scaled(std::uint32_t s) const;
  SL2Poly pow(std::uint64_t e) const;
  bool operator==(const SL2Poly& o) const = default;

  /// x -> x^{p^s}, computed monomial-wise.
  SL2Poly frobenius(unsigned s) const;
  /// a <-> d, b -> -b, c -> -c.
  SL2Poly antipode() const;
  /// a -> 1, d -> 1, b, c -> 0.
  std::uint32_t counit() const;
  std::string to_string() const;

 private:
  void add_term(const SL2Mono& m, std::uint64_t coeff);
  std::uint32_t p_;
  std::map<SL2Mono, std::uint32_t> terms_;
};

/// Element of k[SL2] (x) k[SL2], used to verify comodule identities.
using SL2Tensor = std::map<std::pair<SL2Mono, SL2Mono>, std::uint32_t>;
SL2Tensor sl2_coproduct(const SL2Poly& x);
SL2Tensor sl2_tensor(const SL2Poly& x, const SL2Poly& y);
SL2Tensor sl2_tensor_add(SL2Tensor a, const SL2Tensor& b, std::uint32_t p);

/// Right comodule over k[SL2]: v_j -> sum_i v_i (x) coeff[i*dim + j].
struct RationalComodule {
  std::uint32_t p = 2;
  std::size_t dim = 0;
  std::vector<SL2Poly> coeff;
  std::string label;

  const SL2Poly& at(std::size_t i, std::size_t j) const { return coeff[i * dim + j]; }
};

/// Delta(a_ij) = sum_k a_ik (x) a_kj and eps(a_ij) = delta_ij.
Verdict check_rational(const RationalComodule& m);

RationalComodule trivial_rational(std::uint32_t p);
/// The natural two-dimensional module [[a, b], [c, d]].
RationalComodule natural_rational(std::uint32_t p);
RationalComodule tensor_rational(const RationalComodule& m, const RationalComodule& n);
RationalComodule direct_sum_rational(const RationalComodule& m, const RationalComodule& n);
RationalComodule frobenius_twist(const RationalComodule& m, unsigned s);

/// Weight -> multiplicity.
using Character = std::map<long, long>;
/// Torus restriction a -> z, d -> 1/z, b, c -> 0.
Character character(const RationalComodule& m);
Character character_product(const Character& x, const Character& y);
Character character_sum(const Character& x, const Character& y);
/// Steinberg product of the restricted Weyl characters of the p-adic digits.
Character simple_character(std::uint32_t p, long lambda);
/// Multiplicity of L(lambda) by greedy subtraction of simple characters.
long f_multiplicity(std::uint32_t p, long lambda, const Character& ch);
long f_multiplicity(long lambda, const RationalComodule& v);
/// Largest |weight| occurring.
long max_weight(const Character& ch);

/// T with T A^M = A^N T, as vectors of Hom(M, N) (index x*dim N + y).
Subspace hom_G(const RationalComodule& m, const RationalComodule& n);

/// k[G_r] for SL2 over F_p: basis b^i c^j a^k, i, j, k < p^r, index
/// (i*N + j)*N + k with N = p^r.
struct FrobeniusKernel {
  std::uint32_t p = 2;
  unsigned r = 0;
  std::size_t N = 0;
  CoalgebraPtr coalgebra;
  Mat mult;
  Mat unit;

  Bialgebra bialgebra() const { return {coalgebra, mult, unit}; }
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const { return (i * N + j) * N + k; }
  /// Image of a k[SL2] element in k[G_r], as (index, coefficient) pairs.
  std::vector<std::pair<std::size_t, std::uint32_t>> reduce(const SL2Poly& x) const;
};

/// Built once per (r, p) and cached.
const FrobeniusKernel& frobenius_kernel(unsigned r, std::uint32_t p = 2);

/// Left comodule over k[G_r]: v_j -> sum_i S(a_ij) (x) v_i, S the antipode.
/// The antipode turns the right comodule into a left one with the same
/// comodule maps.
Comodule restrict_to_kernel(const RationalComodule& m, unsigned r);

// Catalog at p = 2.
RationalComodule simple_rational(long lambda, std::uint32_t p = 2);
RationalComodule catalog_P(long lambda);
/// The G-map P(0) -> L(0) (1 x 4).
Mat catalog_q();
RationalComodule catalog_rational(const std::string& name);

/// Simple comodules of G_r: restrictions of L(mu), mu < p^r.
std::vector<Comodule> kernel_simples(unsigned r, std::uint32_t p = 2);

}  // namespace contra

namespace contra {

/// P_{lambda,m} = P(lambda_0) (x) P(lambda_1)^Fr (x) ... (x) P(lambda_{m-1})^{Fr^{m-1}}
/// for m = m0..m_max, with transitions Id (x) q^{Fr^{m-1}}.
struct RationalTower {
  long lambda = 0;
  unsigned m0 = 1;
  std::vector<RationalComodule> stages;
  /// transitions[t] : stages[t + 1] -> stages[t].
  std::vector<Mat> transitions;

  const RationalComodule& stage(unsigned m) const { return stages.at(m - m0); }
};

/// p = 2 only; m0 is one more than the position of the top binary digit of lambda.
RationalTower build_tower(long lambda, unsigned m_max);

}  // namespace contra
