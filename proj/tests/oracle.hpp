#pragma once

// Independent reference computations used to cross-check the library.
// Everything here is deliberately naive: dense storage, textbook loops.

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "contra/contramodule.hpp"

namespace oracle {

using contra::Field;
using contra::Mat;
using contra::Scalar;

using Dense = std::vector<std::vector<Scalar>>;

inline Dense dense(const Mat& m) { return m.to_dense(); }

/// Plain Gaussian elimination on a copy.
inline std::size_t dense_rank(const Mat& m) {
  Dense a = m.to_dense();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const Scalar inv = a[r][c].inverse();
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Scalar factor = a[i][c] * inv;
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= factor * a[r][k];
    }
    ++r;
  }
  return r;
}

/// Calls fn on every vector of F_p^n (as a column Mat).
inline void for_each_vector(const Field& f, std::size_t n, const std::function<void(const Mat&)>& fn) {
  const std::uint32_t p = f.characteristic();
  std::vector<std::uint32_t> digits(n, 0);
  for (;;) {
    std::vector<contra::Triplet> t;
    for (std::size_t i = 0; i < n; ++i) {
      if (digits[i]) t.push_back({i, 0, Scalar(f, static_cast<long>(digits[i]))});
    }
    fn(Mat::from_triplets(f, n, 1, std::move(t)));
    std::size_t i = 0;
    while (i < n && ++digits[i] == p) digits[i++] = 0;
    if (i == n) return;
  }
}

/// Number of vectors x in F_p^n satisfying pred; the solution count of a
/// linear condition is p^dim.
inline std::size_t count_solutions(const Field& f, std::size_t n,
                                   const std::function<bool(const Mat&)>& pred) {
  std::size_t count = 0;
  for_each_vector(f, n, [&](const Mat& x) {
    if (pred(x)) ++count;
  });
  return count;
}

inline std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

/// Kronecker product entry by entry from the definition.
inline Mat kron_by_definition(const Mat& a, const Mat& b) {
  std::vector<contra::Triplet> t;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          Scalar v = a.at(i, j) * b.at(k, l);
          if (!v.is_zero()) t.push_back({i * b.rows() + k, j * b.cols() + l, v});
        }
  return Mat::from_triplets(a.field(), a.rows() * b.rows(), a.cols() * b.cols(), std::move(t));
}


/// Structure constants t[a][b][k] of a (rows = n_a * n_b) x cols matrix.
using Cube = std::vector<std::vector<std::vector<Scalar>>>;

inline Cube cube(const Mat& m, std::size_t na, std::size_t nb) {
  const Scalar zero = Scalar::zero(m.field());
  Cube t(na, std::vector<std::vector<Scalar>>(nb, std::vector<Scalar>(m.cols(), zero)));
  for (const contra::Triplet& e : m.triplets()) t[e.row / nb][e.row % nb][e.col] = e.value;
  return t;
}

/// Coassociativity and counit, coefficient by coefficient.
inline bool naive_coalgebra_ok(const contra::Coalgebra& c) {
  const std::size_t n = c.dim;
  const Cube d = cube(c.delta, n, n);
  const Scalar zero = Scalar::zero(c.field), one = Scalar::one(c.field);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t x = 0; x < n; ++x) {
          Scalar lhs = zero, rhs = zero;
          for (std::size_t i = 0; i < n; ++i) {
            lhs += d[i][x][k] * d[a][b][i];
            rhs += d[a][i][k] * d[b][x][i];
          }
          if (!(lhs == rhs)) return false;
        }
    for (std::size_t j = 0; j < n; ++j) {
      Scalar l = zero, r = zero;
      for (std::size_t i = 0; i < n; ++i) {
        l += c.epsilon.at(0, i) * d[i][j][k];
        r += c.epsilon.at(0, i) * d[j][i][k];
      }
      const Scalar want = j == k ? one : zero;
      if (!(l == want) || !(r == want)) return false;
    }
  }
  return true;
}

inline bool naive_comodule_ok(const contra::Comodule& m) {
  const contra::Coalgebra& c = *m.coalgebra;
  const std::size_t n = c.dim, dm = m.dim;
  const Cube d = cube(c.delta, n, n);
  const bool left = m.side == contra::Side::left;
  // Normalize to a[c][i][k]: coefficient of e_c (x) m_i (left) or m_i (x) e_c (right) in coaction(m_k).
  const Cube raw = left ? cube(m.coaction, n, dm) : cube(m.coaction, dm, n);
  auto A = [&](std::size_t cc, std::size_t i, std::size_t k) -> const Scalar& {
    return left ? raw[cc][i][k] : raw[i][cc][k];
  };
  const Scalar zero = Scalar::zero(c.field), one = Scalar::one(c.field);
  for (std::size_t k = 0; k < dm; ++k) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t i = 0; i < dm; ++i) {
          Scalar lhs = zero, rhs = zero;
          for (std::size_t x = 0; x < n; ++x) lhs += A(x, i, k) * (left ? d[a][b][x] : d[b][a][x]);
          for (std::size_t j = 0; j < dm; ++j) rhs += A(a, j, k) * A(b, i, j);
          if (!(lhs == rhs)) return false;
        }
    for (std::size_t i = 0; i < dm; ++i) {
      Scalar s = zero;
      for (std::size_t x = 0; x < n; ++x) s += c.epsilon.at(0, x) * A(x, i, k);
      if (!(s == (i == k ? one : zero))) return false;
    }
  }
  return true;
}

/// Right C*-module axioms for x.v = theta(x (x) v) under convolution
/// (x * y)(e) = x(e_(1)) y(e_(2)): x.(y.v) = (y * x).v and eps.v = v.
inline bool naive_contramodule_ok(const contra::Contramodule& b) {
  const contra::Coalgebra& c = *b.coalgebra;
  const std::size_t n = c.dim, db = b.dim;
  const Cube d = cube(c.delta, n, n);
  const Dense th = b.theta.to_dense();
  const Scalar zero = Scalar::zero(c.field), one = Scalar::one(c.field);
  for (std::size_t k = 0; k < db; ++k) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t i = 0; i < db; ++i) {
          Scalar lhs = zero, rhs = zero;
          for (std::size_t m = 0; m < db; ++m) lhs += th[m][y * db + k] * th[i][x * db + m];
          for (std::size_t e = 0; e < n; ++e) rhs += d[y][x][e] * th[i][e * db + k];
          if (!(lhs == rhs)) return false;
        }
    for (std::size_t i = 0; i < db; ++i) {
      Scalar s = zero;
      for (std::size_t e = 0; e < n; ++e) s += c.epsilon.at(0, e) * th[i][e * db + k];
      if (!(s == (i == k ? one : zero))) return false;
    }
  }
  return true;
}

/// Every matrix over F_p of the given shape.
inline void for_each_matrix(const Field& f, std::size_t rows, std::size_t cols,
                            const std::function<void(const Mat&)>& fn) {
  for_each_vector(f, rows * cols, [&](const Mat& v) {
    std::vector<contra::Triplet> t;
    for (const contra::Triplet& e : v.triplets()) t.push_back({e.row / cols, e.row % cols, e.value});
    fn(Mat::from_triplets(f, rows, cols, std::move(t)));
  });
}

/// Comodule map condition written out: coaction_N T = (id (x) T) coaction_M.
inline bool naive_is_comodule_map(const contra::Comodule& m, const contra::Comodule& n, const Mat& t) {
  const Mat id = Mat::identity(t.field(), m.coalgebra->dim);
  const Mat lifted = m.side == contra::Side::left ? kron_by_definition(id, t) : kron_by_definition(t, id);
  return n.coaction * t == lifted * m.coaction;
}

/// theta_D(x (x) T v) = T theta_B(x (x) v) for all x, v.
inline bool naive_is_contra_map(const contra::Contramodule& b, const contra::Contramodule& d, const Mat& t) {
  const Mat id = Mat::identity(t.field(), b.coalgebra->dim);
  return d.theta * kron_by_definition(id, t) == t * b.theta;
}

/// The set of vectors t x, x ranging over F_p^cols, as sorted dense keys.
inline std::vector<std::vector<std::uint32_t>> image_set(const Mat& t) {
  std::vector<std::vector<std::uint32_t>> out;
  for_each_vector(t.field(), t.cols(), [&](const Mat& x) {
    const Mat y = t * x;
    std::vector<std::uint32_t> key(t.rows(), 0);
    for (const contra::Triplet& e : y.triplets()) key[e.row] = static_cast<std::uint32_t>(std::stoul(e.value.to_string()));
    out.push_back(std::move(key));
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace oracle
