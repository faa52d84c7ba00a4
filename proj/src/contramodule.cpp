#include "contra/contramodule.hpp"

#include <stdexcept>

namespace contra {

Mat convolution(const Coalgebra& c) {
  const std::size_t n = c.dim;
  std::vector<Triplet> t;
  for (Triplet& e : c.delta.triplets()) {
    const std::size_t l = e.row / n, j = e.row % n;
    t.push_back({e.col, j * n + l, std::move(e.value)});
  }
  return Mat::from_triplets(c.field, n, n * n, std::move(t));
}

Verdict check_contramodule(const Contramodule& b) {
  Verdict v;
  if (!b.coalgebra) {
    v.fail("missing coalgebra");
    return v;
  }
  const Coalgebra& c = *b.coalgebra;
  if (b.theta.rows() != b.dim || b.theta.cols() != c.dim * b.dim ||
      !(b.theta.field() == c.field)) {
    v.fail("theta shape " + b.theta.shape_string());
    return v;
  }
  const Mat ib = Mat::identity(c.field, b.dim);
  const Mat in = Mat::identity(c.field, c.dim);
  if (!(b.theta * kron(in, b.theta) == b.theta * kron(convolution(c), ib))) {
    v.fail("contra-associativity");
  }
  if (!(b.theta * kron(counit_column(c), ib) == ib)) v.fail("contra-unity");
  return v;
}

Contramodule free_contramodule(const CoalgebraPtr& c, std::size_t d) {
  const std::size_t n = c->dim;
  std::vector<Triplet> t;
  for (Triplet& e : c->delta.triplets()) {
    const std::size_t l = e.row / n, j = e.row % n, k = e.col;
    for (std::size_t v = 0; v < d; ++v) t.push_back({k * d + v, j * (n * d) + l * d + v, e.value});
  }
  return {c, n * d, Mat::from_triplets(c->field, n * d, n * n * d, std::move(t)),
          "free(" + c->name + ", " + std::to_string(d) + ")"};
}

Contramodule trivial_contramodule(const CoalgebraPtr& c, std::optional<std::size_t> g) {
  if (!g) {
    const auto gs = grouplike_basis_elements(*c);
    if (gs.empty()) throw std::invalid_argument(c->name + " has no grouplike basis element");
    g = gs.front();
  }
  MatBuilder e(c->field, c->dim, 1);
  e.add(*g, 0, 1);
  Contramodule out = contra_from_comodule(grouplike_comodule(c, std::move(e).build()));
  out.label = "k";
  return out;
}

Subspace hom_contra(const Contramodule& b, const Contramodule& d) {
  require_same_coalgebra(b.coalgebra, d.coalgebra, "hom_contra");
  const Field& f = b.field();
  const std::size_t n = b.coalgebra->dim, db = b.dim, dd = d.dim;
  // Rows index Hom(C* (x) B, D) as (j*db + k)*dd + y; unknowns x*dd + y.
  MatBuilder l1(f, n * db * dd, db * dd), l2(f, n * db * dd, db * dd);
  for (std::size_t col = 0; col < b.theta.cols(); ++col) {
    const Mat::Column c = b.theta.col(col);
    for (std::size_t s = 0; s < c.size(); ++s) {
      for (std::size_t y = 0; y < dd; ++y) l1.add(col * dd + y, c.rows[s] * dd + y, c.values[s]);
    }
  }
  for (std::size_t col = 0; col < d.theta.cols(); ++col) {
    const std::size_t j = col / dd, z = col % dd;
    const Mat::Column c = d.theta.col(col);
    for (std::size_t s = 0; s < c.size(); ++s) {
      for (std::size_t k = 0; k < db; ++k) {
        l2.add((j * db + k) * dd + c.rows[s], k * dd + z, c.values[s]);
      }
    }
  }
  return equalizer(std::move(l1).build(), std::move(l2).build());
}

Contramodule contra_from_comodule(const Comodule& w) {
  if (w.side != Side::left) throw std::invalid_argument("contra_from_comodule needs a left comodule");
  const std::size_t b = w.dim;
  std::vector<Triplet> t;
  for (Triplet& e : w.coaction.triplets()) {
    const std::size_t j = e.row / b, l = e.row % b;
    t.push_back({l, j * b + e.col, std::move(e.value)});
  }
  return {w.coalgebra, b, Mat::from_triplets(w.field(), b, w.coalgebra->dim * b, std::move(t)),
          w.label};
}

Contramodule contra_from_dual(const Comodule& m, std::size_t d) {
  if (m.side != Side::right) throw std::invalid_argument("contra_from_dual needs a right comodule");
  const std::size_t n = m.coalgebra->dim, dm = m.dim;
  std::vector<Triplet> t;
  for (Triplet& e : m.coaction.triplets()) {
    const std::size_t l = e.row / n, j = e.row % n, k = e.col;
    for (std::size_t v = 0; v < d; ++v) {
      t.push_back({k * d + v, j * (dm * d) + l * d + v, e.value});
    }
  }
  return {m.coalgebra, dm * d, Mat::from_triplets(m.field(), dm * d, n * dm * d, std::move(t)),
          "Hom(" + m.label + ", k^" + std::to_string(d) + ")"};
}

std::pair<Mat, Mat> contratensor_maps(const Comodule& m, const Contramodule& b) {
  require_same_coalgebra(m.coalgebra, b.coalgebra, "contratensor");
  if (m.side != Side::right) throw std::invalid_argument("contratensor needs a right comodule");
  const Field& f = m.field();
  const std::size_t n = m.coalgebra->dim, dm = m.dim, db = b.dim;
  Mat f1 = kron(Mat::identity(f, dm), b.theta);
  MatBuilder f2(f, dm * db, dm * n * db);
  for (std::size_t i = 0; i < dm; ++i) {
    const Mat::Column c = m.coaction.col(i);
    for (std::size_t s = 0; s < c.size(); ++s) {
      const std::size_t l = c.rows[s] / n, j = c.rows[s] % n;
      for (std::size_t k = 0; k < db; ++k) f2.add(l * db + k, (i * n + j) * db + k, c.values[s]);
    }
  }
  return {std::move(f1), std::move(f2).build()};
}

Coequalizer contratensor(const Comodule& m, const Contramodule& b) {
  const auto [f1, f2] = contratensor_maps(m, b);
  return coequalizer(f1, f2);
}

std::pair<Mat, Mat> cohom_maps(const Comodule& m, const Contramodule& b) {
  require_same_coalgebra(m.coalgebra, b.coalgebra, "cohom");
  if (m.side != Side::left) throw std::invalid_argument("cohom needs a left comodule");
  const Field& f = m.field();
  const std::size_t n = m.coalgebra->dim, dm = m.dim, db = b.dim;
  MatBuilder fm(f, dm * db, n * dm * db), gm(f, dm * db, n * dm * db);
  for (std::size_t i = 0; i < dm; ++i) {
    const Mat::Column c = m.coaction.col(i);
    for (std::size_t s = 0; s < c.size(); ++s) {
      for (std::size_t k = 0; k < db; ++k) fm.add(i * db + k, c.rows[s] * db + k, c.values[s]);
    }
  }
  for (std::size_t col = 0; col < b.theta.cols(); ++col) {
    const std::size_t c = col / db, k = col % db;
    const Mat::Column t = b.theta.col(col);
    for (std::size_t s = 0; s < t.size(); ++s) {
      for (std::size_t j = 0; j < dm; ++j) {
        gm.add(j * db + t.rows[s], (c * dm + j) * db + k, t.values[s]);
      }
    }
  }
  return {std::move(fm).build(), std::move(gm).build()};
}

Coequalizer cohom(const Comodule& m, const Contramodule& b) {
  const auto [f, g] = cohom_maps(m, b);
  return coequalizer(f, g);
}

ProjectivityResult is_projective(const Contramodule& b) {
  const Field& f = b.field();
  const std::size_t n = b.coalgebra->dim, db = b.dim;
  if (db == 0) return {true, Mat(f, 0, 0)};
  const Contramodule free = free_contramodule(b.coalgebra, db);
  const Subspace h = hom_contra(b, free);
  std::vector<Mat> cols, maps;
  for (std::size_t t = 0; t < h.dim(); ++t) {
    maps.push_back(unvec(h.basis().cols_range(t, t + 1), n * db, db));
    cols.push_back(vec(b.theta * maps.back()));
  }
  const Mat a = cols.empty() ? Mat(f, db * db, 0) : hstack(cols);
  const auto alpha = solve(a, vec(Mat::identity(f, db)));
  if (!alpha) return {false, std::nullopt};
  Mat s(f, n * db, db);
  for (std::size_t t = 0; t < h.dim(); ++t) {
    const Scalar x = alpha->at(t, 0);
    if (!x.is_zero()) s = s + maps[t].scaled(x);
  }
  return {true, s};
}

DualityReport duality_check(const Comodule& v, const Comodule& w) {
  const Contramodule b = contra_from_comodule(w);
  const auto [f, g] = cohom_maps(v, b);
  const Coequalizer q = coequalizer(f, g);
  const Subspace h = hom_comodules(w, v);
  const std::size_t dv = v.dim, dw = w.dim;
  // Row t pairs h_t with s in Hom(V, W): sum h[v, w] s[w, v].
  std::vector<Triplet> t;
  for (Triplet& e : h.basis().triplets()) {
    const std::size_t wi = e.row / dv, vi = e.row % dv;
    t.push_back({e.col, vi * dw + wi, std::move(e.value)});
  }
  const Mat pairing = Mat::from_triplets(v.field(), h.dim(), dv * dw, std::move(t));
  DualityReport r;
  r.cohom_dim = q.dim;
  r.hom_dim = h.dim();
  r.well_defined = (pairing * (f - g)).is_zero();
  r.pairing_rank = rank(pairing * q.section);
  return r;
}

Contramodule direct_sum(const Contramodule& a, const Contramodule& b) {
  require_same_coalgebra(a.coalgebra, b.coalgebra, "direct_sum");
  const std::size_t n = a.coalgebra->dim, d = a.dim + b.dim;
  std::vector<Triplet> t;
  auto place = [&](const Contramodule& x, std::size_t offset) {
    for (Triplet& e : x.theta.triplets()) {
      const std::size_t j = e.col / x.dim, k = e.col % x.dim;
      t.push_back({e.row + offset, j * d + offset + k, std::move(e.value)});
    }
  };
  place(a, 0);
  place(b, a.dim);
  return {a.coalgebra, d, Mat::from_triplets(a.field(), d, n * d, std::move(t)),
          a.label + "+" + b.label};
}

namespace {

/// theta_B (Id_{C*} (x) X) for a map X : k^r -> B.
Mat act_on(const Contramodule& b, const Mat& x) {
  return b.theta * kron(Mat::identity(b.field(), b.coalgebra->dim), x);
}

}  // namespace

bool is_subcontramodule(const Contramodule& b, const Mat& basis) {
  if (basis.cols() == 0) return true;
  return (cokernel(basis).quotient_map * act_on(b, basis)).is_zero();
}

Contramodule subcontramodule(const Contramodule& b, const Mat& basis) {
  require_shape(basis.rows() == b.dim, "subcontramodule basis");
  if (!is_subcontramodule(b, basis)) throw std::invalid_argument("subspace is not a subcontramodule");
  const Mat l = basis.cols() ? left_inverse(basis) : Mat(b.field(), 0, b.dim);
  return {b.coalgebra, basis.cols(), l * act_on(b, basis), "sub(" + b.label + ")"};
}

std::pair<Contramodule, Mat> quotient_contramodule(const Contramodule& b, const Mat& basis) {
  require_shape(basis.rows() == b.dim, "quotient basis");
  if (!is_subcontramodule(b, basis)) throw std::invalid_argument("subspace is not a subcontramodule");
  const Coequalizer q = cokernel(basis);
  Contramodule out{b.coalgebra, q.dim, q.quotient_map * act_on(b, q.section),
                   "quot(" + b.label + ")"};
  return {std::move(out), q.quotient_map};
}

Subspace generated_subcontramodule(const Contramodule& b, const Mat& vectors) {
  return Subspace::span_of(hstack({vectors, act_on(b, vectors)}));
}

}  // namespace contra
