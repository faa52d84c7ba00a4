#include "contra/towers.hpp"

#include <stdexcept>

namespace contra {

Mat InverseSystem::composite(std::size_t i, std::size_t j) const {
  if (i < m0 || j > m_max() || i > j) throw std::out_of_range("composite outside the window");
  Mat out = Mat::identity(field, dim(i));
  for (std::size_t t = i; t < j; ++t) out = out * transitions[t - m0];
  return out;
}

Verdict check_system(const InverseSystem& s) {
  Verdict v;
  if (s.dims.empty() || s.transitions.size() + 1 != s.dims.size()) {
    v.fail("transition count");
    return v;
  }
  for (std::size_t t = 0; t < s.transitions.size(); ++t) {
    const Mat& f = s.transitions[t];
    if (f.rows() != s.dims[t] || f.cols() != s.dims[t + 1]) {
      v.fail("transition shape at " + std::to_string(s.m0 + t + 1));
    }
  }
  if (!v.ok() || s.contramodules.empty()) return v;
  if (s.contramodules.size() != s.dims.size()) {
    v.fail("contramodule count");
    return v;
  }
  for (std::size_t t = 0; t < s.transitions.size(); ++t) {
    if (!hom_contra(s.contramodules[t + 1], s.contramodules[t]).contains(vec(s.transitions[t]))) {
      v.fail("transition at " + std::to_string(s.m0 + t + 1) + " is not a contra-homomorphism");
    }
  }
  return v;
}

MittagLefflerResult is_mittag_leffler(const InverseSystem& s, std::size_t at) {
  if (at < s.m0 || at + 2 > s.m_max()) {
    throw std::invalid_argument("is_mittag_leffler needs two stages beyond the index");
  }
  std::vector<Subspace> images;
  MittagLefflerResult r;
  for (std::size_t j = at + 1; j <= s.m_max(); ++j) {
    images.push_back(Subspace::span_of(s.composite(at, j)));
    r.image_dims.push_back(images.back().dim());
    if (images.size() > 1 && !images[images.size() - 2].contains(images.back().basis())) {
      throw std::logic_error("image chain is not decreasing");
    }
  }
  std::size_t first = images.size() - 1;
  while (first > 0 && images[first - 1].dim() == images.back().dim()) --first;
  if (first + 1 < images.size()) {
    r.mittag_leffler = true;
    r.stabilized_at = at + 1 + first;
  }
  return r;
}

InverseSystem quotient_system(const InverseSystem& b, const InverseSystem& a, const SystemMap& alpha) {
  InverseSystem out;
  out.field = b.field;
  out.m0 = b.m0;
  std::vector<Coequalizer> q;
  for (std::size_t t = 0; t < b.dims.size(); ++t) {
    q.push_back(cokernel(alpha.maps.at(t)));
    out.dims.push_back(q.back().dim);
  }
  for (std::size_t t = 0; t < b.transitions.size(); ++t) {
    out.transitions.push_back(q[t].quotient_map * b.transitions[t] * q[t + 1].section);
  }
  (void)a;
  return out;
}

std::string to_string(LimitVerdict v) {
  switch (v) {
    case LimitVerdict::exact:
      return "exact";
    case LimitVerdict::not_exact:
      return "not exact";
    case LimitVerdict::inconclusive:
      break;
  }
  return "inconclusive";
}

bool chain_exact(const std::vector<Mat>& maps, std::size_t first_dim) {
  if (maps.empty()) return first_dim == 0;
  std::vector<std::size_t> ranks;
  for (const Mat& m : maps) ranks.push_back(rank(m));
  if (ranks.front() != first_dim) return false;
  for (std::size_t k = 0; k + 1 < maps.size(); ++k) {
    if (!(maps[k + 1] * maps[k]).is_zero()) return false;
    if (ranks[k] + ranks[k + 1] != maps[k + 1].cols()) return false;
  }
  return ranks.back() == maps.back().rows();
}

namespace {

bool window_matches(const InverseSystem& x, const InverseSystem& y) {
  return x.m0 == y.m0 && x.dims.size() == y.dims.size();
}

bool map_compatible(const InverseSystem& x, const InverseSystem& y, const SystemMap& f) {
  if (f.maps.size() != x.dims.size()) return false;
  for (std::size_t t = 0; t < x.dims.size(); ++t) {
    if (f.maps[t].rows() != y.dims[t] || f.maps[t].cols() != x.dims[t]) return false;
  }
  for (std::size_t t = 0; t < x.transitions.size(); ++t) {
    if (!(f.maps[t] * x.transitions[t] == y.transitions[t] * f.maps[t + 1])) return false;
  }
  return true;
}

bool all_mittag_leffler(const InverseSystem& s) {
  for (std::size_t at = s.m0; at + 2 <= s.m_max(); ++at) {
    if (!is_mittag_leffler(s, at).mittag_leffler) return false;
  }
  return true;
}

}  // namespace

FourTermReport limit_four_term(const InverseSystem& a, const InverseSystem& b,
                               const InverseSystem& c, const InverseSystem& d,
                               const SystemMap& alpha, const SystemMap& beta,
                               const SystemMap& gamma) {
  for (const InverseSystem* s : {&a, &b, &c, &d}) {
    if (!check_system(*s).ok() || !window_matches(a, *s)) {
      throw std::invalid_argument("systems must share one window with consistent shapes");
    }
  }
  if (!map_compatible(a, b, alpha) || !map_compatible(b, c, beta) || !map_compatible(c, d, gamma)) {
    throw std::invalid_argument("stage maps do not commute with the transitions");
  }
  for (std::size_t t = 0; t < a.dims.size(); ++t) {
    if (!chain_exact({alpha.maps[t], beta.maps[t], gamma.maps[t]}, a.dims[t])) {
      throw std::invalid_argument("stage " + std::to_string(a.m0 + t) + " is not exact");
    }
  }
  FourTermReport r;
  if (a.dims.size() < 3) {
    r.detail = "window too short to certify stabilization";
    return r;
  }
  r.hypothesis_a = all_mittag_leffler(a);
  r.hypothesis_quotient = all_mittag_leffler(quotient_system(b, a, alpha));
  if (!r.hypothesis_a || !r.hypothesis_quotient) {
    r.detail = !r.hypothesis_a ? "A not Mittag-Leffler within the window"
                               : "B/Im(A) not Mittag-Leffler within the window";
    return r;
  }
  const std::size_t top = a.m_max();
  for (std::size_t i = a.m0; i + 2 <= top; ++i) {
    // Stable images of the top stage and the maps between them.
    std::vector<Mat> bases;
    for (const InverseSystem* s : {&a, &b, &c, &d}) bases.push_back(image_basis(s->composite(i, top)));
    std::vector<Mat> restricted;
    const SystemMap* maps[] = {&alpha, &beta, &gamma};
    for (std::size_t k = 0; k < 3; ++k) {
      const Mat& src = bases[k];
      const Mat& dst = bases[k + 1];
      const Mat image = maps[k]->maps[i - a.m0] * src;
      const auto coords = solve(dst, image);
      if (!coords) throw std::logic_error("stable images are not preserved by the stage maps");
      restricted.push_back(*coords);
    }
    r.checked_stages.push_back(i);
    if (!chain_exact(restricted, bases[0].cols())) {
      r.verdict = LimitVerdict::not_exact;
      r.detail = "stable-image sequence fails at stage " + std::to_string(i);
      return r;
    }
  }
  r.verdict = LimitVerdict::exact;
  return r;
}

HeadRadical tower_head(const RationalTower& tower, unsigned m) {
  return head_radical(restrict_to_kernel(tower.stage(m), m), kernel_simples(m));
}

TowerReport cohom_tower(const RationalComodule& v, const RationalTower& tower,
                        const TowerOptions& options) {
  TowerReport r;
  r.lambda = tower.lambda;
  r.p = v.p;
  r.v_label = v.label;
  const Character ch = character(v);
  r.f_V = f_multiplicity(v.p, tower.lambda, ch);
  const long w = max_weight(ch);
  r.weight_stage = 1;
  for (long bound = 1; bound <= w; bound *= v.p) ++r.weight_stage;
  const unsigned m_max = tower.m0 + static_cast<unsigned>(tower.stages.size()) - 1;
  for (unsigned m = tower.m0; m <= m_max; ++m) {
    TowerStage s;
    s.m = m;
    const RationalComodule& p = tower.stage(m);
    s.dim_P = p.dim;
    const Comodule vr = restrict_to_kernel(v, m);
    const Comodule pr = restrict_to_kernel(p, m);
    s.dim_cohom = cohom(vr, contra_from_comodule(pr)).dim;
    if (options.compute_hom) {
      s.dim_hom = hom_comodules(pr, vr).dim();
      s.dim_hom_G = hom_G(p, v).dim();
    }
    if (options.check_heads) {
      const HeadRadical h = head_radical(pr, kernel_simples(m));
      const std::string want = "L(" + std::to_string(tower.lambda) + ")";
      s.head_ok = h.head.size() == 1 && h.head[0].first == want && h.head[0].second == 1;
    }
    r.stages.push_back(s);
  }
  for (std::size_t k = r.stages.size(); k-- > 0;) {
    if (r.stages[k].dim_cohom != r.stages.back().dim_cohom) break;
    if (k + 1 < r.stages.size()) r.stabilized_at = r.stages[k].m;
  }
  r.match = r.weight_stage <= m_max;
  for (const TowerStage& s : r.stages) {
    if (s.m < r.weight_stage) continue;
    if (s.dim_cohom != static_cast<std::size_t>(r.f_V)) r.match = false;
    if (options.compute_hom && s.dim_hom != static_cast<std::size_t>(r.f_V)) r.match = false;
  }
  return r;
}

}  // namespace contra
