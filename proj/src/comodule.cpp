#include "contra/comodule.hpp"

#include <stdexcept>

namespace contra {

void require_same_coalgebra(const CoalgebraPtr& a, const CoalgebraPtr& b, const char* what) {
  if (!a || !b) throw std::invalid_argument(std::string("missing coalgebra in ") + what);
  if (a == b) return;
  if (a->dim != b->dim || !(a->field == b->field) || !(a->delta == b->delta) ||
      !(a->epsilon == b->epsilon)) {
    throw std::invalid_argument(std::string("coalgebra mismatch in ") + what + ": " + a->name +
                                " vs " + b->name);
  }
}

Mat unvec(const Mat& v, std::size_t rows, std::size_t cols) {
  require_shape(v.cols() == 1 && v.rows() == rows * cols, "unvec " + v.shape_string());
  std::vector<Triplet> t;
  for (Triplet& x : v.triplets()) t.push_back({x.row % rows, x.row / rows, std::move(x.value)});
  return Mat::from_triplets(v.field(), rows, cols, std::move(t));
}

Mat vec(const Mat& m) {
  std::vector<Triplet> t;
  for (Triplet& x : m.triplets()) t.push_back({x.col * m.rows() + x.row, 0, std::move(x.value)});
  return Mat::from_triplets(m.field(), m.rows() * m.cols(), 1, std::move(t));
}

Verdict check_comodule(const Comodule& m) {
  Verdict v;
  if (!m.coalgebra) {
    v.fail("missing coalgebra");
    return v;
  }
  const Coalgebra& c = *m.coalgebra;
  if (m.coaction.rows() != c.dim * m.dim || m.coaction.cols() != m.dim ||
      !(m.coaction.field() == c.field)) {
    v.fail("coaction shape " + m.coaction.shape_string());
    return v;
  }
  const Mat im = Mat::identity(c.field, m.dim);
  const Mat in = Mat::identity(c.field, c.dim);
  const Mat& a = m.coaction;
  if (m.side == Side::left) {
    if (!(kron_apply(c.delta, im, a) == kron_apply(in, a, a))) v.fail("coassociativity");
    if (!(kron_apply(c.epsilon, im, a) == im)) v.fail("counit");
  } else {
    if (!(kron_apply(a, in, a) == kron_apply(im, c.delta, a))) v.fail("coassociativity");
    if (!(kron_apply(im, c.epsilon, a) == im)) v.fail("counit");
  }
  return v;
}

Comodule cofree(const CoalgebraPtr& c, std::size_t d) {
  const Mat id = Mat::identity(c->field, d);
  return {c, Side::left, c->dim * d, kron(c->delta, id),
          "cofree(" + c->name + ", " + std::to_string(d) + ")"};
}

Comodule regular_comodule(const CoalgebraPtr& c, Side side) {
  return {c, side, c->dim, c->delta, c->name};
}

Comodule grouplike_comodule(const CoalgebraPtr& c, const Mat& g, Side side) {
  require_shape(g.rows() == c->dim && g.cols() == 1, "grouplike element");
  Comodule m{c, side, 1, g, "k"};
  if (!check_comodule(m)) throw std::invalid_argument("element is not grouplike");
  return m;
}

std::vector<std::size_t> grouplike_basis_elements(const Coalgebra& c) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.dim; ++i) {
    const Mat::Column col = c.delta.col(i);
    if (col.size() == 1 && col.rows[0] == i * c.dim + i && col.values[0].is_one() &&
        c.epsilon.at(0, i).is_one()) {
      out.push_back(i);
    }
  }
  return out;
}

Subspace hom_comodules(const Comodule& m, const Comodule& n) {
  require_same_coalgebra(m.coalgebra, n.coalgebra, "hom_comodules");
  if (m.side != n.side) throw std::invalid_argument("hom_comodules: side mismatch");
  const Field& f = m.field();
  const std::size_t nc = m.coalgebra->dim, dm = m.dim, dn = n.dim;
  // Rows index Hom(M, C (x) N) (or Hom(M, N (x) C)) as x * (nc * dn) + row.
  MatBuilder l1(f, dm * nc * dn, dm * dn), l2(f, dm * nc * dn, dm * dn);
  const std::size_t stride = nc * dn;
  for (std::size_t z = 0; z < dn; ++z) {
    const Mat::Column col = n.coaction.col(z);
    for (std::size_t s = 0; s < col.size(); ++s) {
      for (std::size_t x = 0; x < dm; ++x) l1.add(x * stride + col.rows[s], x * dn + z, col.values[s]);
    }
  }
  for (std::size_t x = 0; x < dm; ++x) {
    const Mat::Column col = m.coaction.col(x);
    for (std::size_t s = 0; s < col.size(); ++s) {
      if (m.side == Side::left) {
        const std::size_t c = col.rows[s] / dm, w = col.rows[s] % dm;
        for (std::size_t y = 0; y < dn; ++y) {
          l2.add(x * stride + c * dn + y, w * dn + y, col.values[s]);
        }
      } else {
        const std::size_t w = col.rows[s] / nc, c = col.rows[s] % nc;
        for (std::size_t y = 0; y < dn; ++y) {
          l2.add(x * stride + y * nc + c, w * dn + y, col.values[s]);
        }
      }
    }
  }
  return equalizer(std::move(l1).build(), std::move(l2).build());
}

Subspace cotensor(const Comodule& m, const Comodule& n) {
  require_same_coalgebra(m.coalgebra, n.coalgebra, "cotensor");
  if (m.side != Side::right || n.side != Side::left) {
    throw std::invalid_argument("cotensor needs a right and a left comodule");
  }
  const Field& f = m.field();
  return equalizer(kron(m.coaction, Mat::identity(f, n.dim)),
                   kron(Mat::identity(f, m.dim), n.coaction));
}

Comodule dual_comodule(const Comodule& m) {
  const std::size_t nc = m.coalgebra->dim, dm = m.dim;
  std::vector<Triplet> t;
  for (Triplet& x : m.coaction.triplets()) {
    if (m.side == Side::left) {
      const std::size_t c = x.row / dm, l = x.row % dm;
      t.push_back({x.col * nc + c, l, std::move(x.value)});
    } else {
      const std::size_t i = x.row / nc, c = x.row % nc;
      t.push_back({c * dm + x.col, i, std::move(x.value)});
    }
  }
  Comodule d{m.coalgebra, m.side == Side::left ? Side::right : Side::left, dm,
             Mat::from_triplets(m.field(), nc * dm, dm, std::move(t)), m.label + "*"};
  return d;
}

Comodule direct_sum(const Comodule& m, const Comodule& n) {
  require_same_coalgebra(m.coalgebra, n.coalgebra, "direct_sum");
  if (m.side != n.side) throw std::invalid_argument("direct_sum: side mismatch");
  const std::size_t nc = m.coalgebra->dim, d = m.dim + n.dim;
  std::vector<Triplet> t;
  auto place = [&](const Comodule& x, std::size_t offset) {
    for (Triplet& e : x.coaction.triplets()) {
      std::size_t row;
      if (x.side == Side::left) {
        row = (e.row / x.dim) * d + offset + e.row % x.dim;
      } else {
        row = (offset + e.row / nc) * nc + e.row % nc;
      }
      t.push_back({row, e.col + offset, std::move(e.value)});
    }
  };
  place(m, 0);
  place(n, m.dim);
  return {m.coalgebra, m.side, d, Mat::from_triplets(m.field(), nc * d, d, std::move(t)),
          m.label + "+" + n.label};
}

namespace {

/// Applies Id_C (x) L (left) or L (x) Id_C (right) to columns of C (x) M.
Mat apply_on_module_factor(const Comodule& m, const Mat& l, const Mat& x) {
  const Mat in = Mat::identity(m.field(), m.coalgebra->dim);
  return m.side == Side::left ? kron_apply(in, l, x) : kron_apply(l, in, x);
}

}  // namespace

bool is_subcomodule(const Comodule& m, const Mat& basis) {
  if (basis.cols() == 0) return true;
  const Coequalizer q = cokernel(basis);
  return apply_on_module_factor(m, q.quotient_map, m.coaction * basis).is_zero();
}

Comodule subcomodule(const Comodule& m, const Mat& basis) {
  require_shape(basis.rows() == m.dim, "subcomodule basis");
  if (!is_subcomodule(m, basis)) throw std::invalid_argument("subspace is not a subcomodule");
  const Mat l = basis.cols() ? left_inverse(basis) : Mat(m.field(), 0, m.dim);
  return {m.coalgebra, m.side, basis.cols(), apply_on_module_factor(m, l, m.coaction * basis),
          "sub(" + m.label + ")"};
}

std::pair<Comodule, Mat> quotient_comodule(const Comodule& m, const Mat& basis) {
  require_shape(basis.rows() == m.dim, "quotient basis");
  if (!is_subcomodule(m, basis)) throw std::invalid_argument("subspace is not a subcomodule");
  const Coequalizer q = cokernel(basis);
  Comodule out{m.coalgebra, m.side, q.dim,
               apply_on_module_factor(m, q.quotient_map, m.coaction * q.section),
               "quot(" + m.label + ")"};
  return {std::move(out), q.quotient_map};
}

Subspace generated_subcomodule(const Comodule& m, const Mat& vectors) {
  const std::size_t nc = m.coalgebra->dim, dm = m.dim;
  const Mat w = m.coaction * vectors;
  // Column (v, c) holds the C-coefficient c of Delta_M(v).
  std::vector<Triplet> t;
  for (Triplet& e : w.triplets()) {
    std::size_t c, i;
    if (m.side == Side::left) {
      c = e.row / dm;
      i = e.row % dm;
    } else {
      i = e.row / nc;
      c = e.row % nc;
    }
    t.push_back({i, e.col * nc + c, std::move(e.value)});
  }
  return Subspace::span_of(Mat::from_triplets(m.field(), dm, vectors.cols() * nc, std::move(t)));
}

InjectivityResult is_injective(const Comodule& m) {
  const Field& f = m.field();
  const std::size_t nc = m.coalgebra->dim, dm = m.dim;
  if (dm == 0) return {true, Mat(f, 0, 0)};
  Comodule free = cofree(m.coalgebra, dm);
  if (m.side == Side::right) {
    free = {m.coalgebra, Side::right, dm * nc, kron(Mat::identity(f, dm), m.coalgebra->delta),
            "cofree"};
  }
  const Subspace h = hom_comodules(free, m);
  // Column t: vec(R_t Delta_M).
  std::vector<Mat> cols;
  std::vector<Mat> maps;
  for (std::size_t t = 0; t < h.dim(); ++t) {
    maps.push_back(unvec(h.basis().cols_range(t, t + 1), dm, nc * dm));
    cols.push_back(vec(maps.back() * m.coaction));
  }
  const Mat a = cols.empty() ? Mat(f, dm * dm, 0) : hstack(cols);
  const auto alpha = solve(a, vec(Mat::identity(f, dm)));
  if (!alpha) return {false, std::nullopt};
  Mat r(f, dm, nc * dm);
  for (std::size_t t = 0; t < h.dim(); ++t) {
    const Scalar s = alpha->at(t, 0);
    if (!s.is_zero()) r = r + maps[t].scaled(s);
  }
  return {true, r};
}

HeadRadical head_radical(const Comodule& m, const std::vector<Comodule>& simples) {
  const Field& f = m.field();
  HeadRadical out;
  std::vector<Mat> blocks;
  for (const Comodule& s : simples) {
    const Subspace h = hom_comodules(m, s);
    if (h.dim() == 0) continue;
    const std::size_t end = hom_comodules(s, s).dim();
    out.head.emplace_back(s.label, h.dim() / end);
    for (std::size_t t = 0; t < h.dim(); ++t) {
      blocks.push_back(unvec(h.basis().cols_range(t, t + 1), s.dim, m.dim));
    }
  }
  out.radical = blocks.empty() ? Subspace::full(f, m.dim) : Subspace(kernel_basis(vstack(blocks)));
  return out;
}

}  // namespace contra
