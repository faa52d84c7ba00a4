#include "contra/linalg.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace contra {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct PrimeArith {
  using value = std::uint32_t;
  std::uint32_t p;

  value from(const Scalar& s) const { return s.residue(); }
  Scalar to(const Field& f, value v) const { return Scalar(f, static_cast<long>(v)); }
  static bool is_zero(value v) { return v == 0; }
  value inv(value a) const {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<value>(r);
  }
  value mul(value a, value b) const { return static_cast<value>(std::uint64_t(a) * b % p); }
  // y -= a * x
  void axpy(std::vector<value>& y, value a, const std::vector<value>& x) const {
    const value na = a == 0 ? 0 : p - a;
    if (p == 2) {
      for (std::size_t i = 0; i < y.size(); ++i) y[i] ^= x[i];
      return;
    }
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (x[i]) y[i] = static_cast<value>((y[i] + std::uint64_t(na) * x[i]) % p);
    }
  }
  void scale(std::vector<value>& y, value a) const {
    for (value& v : y) v = mul(v, a);
  }
  value neg(value a) const { return a == 0 ? 0 : p - a; }
};

struct RationalArith {
  using value = mpq_class;

  value from(const Scalar& s) const { return s.rational(); }
  Scalar to(const Field& f, const value& v) const { return Scalar(f, v); }
  static bool is_zero(const value& v) { return sgn(v) == 0; }
  value inv(const value& a) const { return 1 / a; }
  void axpy(std::vector<value>& y, const value& a, const std::vector<value>& x) const {
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (sgn(x[i]) != 0) y[i] -= a * x[i];
    }
  }
  void scale(std::vector<value>& y, const value& a) const {
    for (value& v : y) v *= a;
  }
  value neg(const value& a) const { return -a; }
};

/// Incremental reduced row echelon form over vectors of fixed length.
template <class Ar>
class Echelon {
 public:
  using V = typename Ar::value;

  Echelon(Ar ar, std::size_t n) : ar_(ar), n_(n), pivot_row_(n, kNone), work_(n) {}

  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == n_; }
  std::size_t length() const { return n_; }
  const std::vector<V>& row(std::size_t r) const { return rows_[r]; }
  std::size_t pivot(std::size_t r) const { return pivots_[r]; }
  std::size_t pivot_row(std::size_t c) const { return pivot_row_[c]; }

  /// Inserts the vector held in work(); `support` lists its nonzero
  /// positions. Returns true when it was independent of earlier rows.
  bool insert_work(const std::vector<std::size_t>& support) {
    for (std::size_t c : support) {
      const std::size_t r = pivot_row_[c];
      if (r != kNone && !Ar::is_zero(work_[c])) {
        V factor = work_[c];
        ar_.axpy(work_, factor, rows_[r]);
      }
    }
    return push_reduced();
  }

  /// Same as insert_work for a vector with unknown support.
  bool insert_work_dense() {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t c = pivots_[r];
      if (!Ar::is_zero(work_[c])) {
        V factor = work_[c];
        ar_.axpy(work_, factor, rows_[r]);
      }
    }
    return push_reduced();
  }

  std::vector<V>& work() { return work_; }
  void clear_work() { std::fill(work_.begin(), work_.end(), V(0)); }

  /// Positions without a pivot, ascending.
  std::vector<std::size_t> free_columns() const {
    std::vector<std::size_t> f;
    for (std::size_t c = 0; c < n_; ++c) {
      if (pivot_row_[c] == kNone) f.push_back(c);
    }
    return f;
  }

 private:
  bool push_reduced() {
    std::size_t lead = kNone;
    for (std::size_t c = 0; c < n_; ++c) {
      if (!Ar::is_zero(work_[c])) {
        lead = c;
        break;
      }
    }
    if (lead == kNone) return false;
    ar_.scale(work_, ar_.inv(work_[lead]));
    for (auto& r : rows_) {
      if (!Ar::is_zero(r[lead])) {
        V factor = r[lead];
        ar_.axpy(r, factor, work_);
      }
    }
    pivot_row_[lead] = rows_.size();
    pivots_.push_back(lead);
    rows_.push_back(work_);
    return true;
  }

  Ar ar_;
  std::size_t n_;
  std::vector<std::vector<V>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> pivot_row_;
  std::vector<V> work_;
};

template <class Fn>
auto with_arith(const Field& f, Fn&& fn) {
  if (f.is_rational()) return fn(RationalArith{});
  return fn(PrimeArith{f.characteristic()});
}

/// Loads column j of m into the echelon work vector at the given offset.
template <class Ar>
void load_column(Echelon<Ar>& e, const Ar& ar, const Mat& m, std::size_t j, std::size_t offset,
                 std::vector<std::size_t>& support) {
  const Mat::Column c = m.col(j);
  for (std::size_t t = 0; t < c.size(); ++t) {
    e.work()[offset + c.rows[t]] = ar.from(c.values[t]);
    support.push_back(offset + c.rows[t]);
  }
}

/// Streams the columns of m (vectors of length rows(m)).
template <class Ar>
Echelon<Ar> reduce_columns(const Ar& ar, const Mat& m, bool stop_when_full,
                           std::vector<std::size_t>* independent = nullptr) {
  Echelon<Ar> e(ar, m.rows());
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (stop_when_full && e.full()) break;
    e.clear_work();
    support.clear();
    load_column(e, ar, m, j, 0, support);
    if (e.insert_work(support) && independent) independent->push_back(j);
  }
  return e;
}

/// Kernel vectors of the row space held in e, one per free column.
template <class Ar>
std::vector<std::vector<typename Ar::value>> kernel_vectors(const Echelon<Ar>& e, const Ar& ar) {
  std::vector<std::vector<typename Ar::value>> out;
  for (std::size_t f : e.free_columns()) {
    std::vector<typename Ar::value> v(e.length());
    v[f] = 1;
    for (std::size_t r = 0; r < e.rank(); ++r) {
      if (!Ar::is_zero(e.row(r)[f])) v[e.pivot(r)] = ar.neg(e.row(r)[f]);
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::size_t rank(const Mat& a) {
  return with_arith(a.field(), [&](auto ar) {
    if (a.rows() <= a.cols()) return reduce_columns(ar, a, true).rank();
    return reduce_columns(ar, a.transpose(), true).rank();
  });
}

Mat kernel_basis(const Mat& a) {
  return with_arith(a.field(), [&](auto ar) {
    const auto e = reduce_columns(ar, a.transpose(), true);
    const auto vecs = kernel_vectors(e, ar);
    std::vector<Triplet> t;
    for (std::size_t k = 0; k < vecs.size(); ++k) {
      for (std::size_t i = 0; i < vecs[k].size(); ++i) {
        if (!decltype(ar)::is_zero(vecs[k][i])) t.push_back({i, k, ar.to(a.field(), vecs[k][i])});
      }
    }
    return Mat::from_triplets(a.field(), a.cols(), vecs.size(), std::move(t));
  });
}

Mat left_kernel(const Mat& a) {
  return with_arith(a.field(), [&](auto ar) {
    const auto e = reduce_columns(ar, a, true);
    const auto vecs = kernel_vectors(e, ar);
    std::vector<Triplet> t;
    for (std::size_t k = 0; k < vecs.size(); ++k) {
      for (std::size_t i = 0; i < vecs[k].size(); ++i) {
        if (!decltype(ar)::is_zero(vecs[k][i])) t.push_back({k, i, ar.to(a.field(), vecs[k][i])});
      }
    }
    return Mat::from_triplets(a.field(), vecs.size(), a.rows(), std::move(t));
  });
}

Mat image_basis(const Mat& a) {
  std::vector<std::size_t> independent;
  with_arith(a.field(), [&](auto ar) {
    reduce_columns(ar, a, true, &independent);
    return 0;
  });
  return a.select_cols(independent);
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  require_same_field(a.field(), b.field(), "solve");
  require_shape(a.rows() == b.rows(), "solve " + a.shape_string() + " | " + b.shape_string());
  const std::size_t n = a.cols();
  const std::size_t k = b.cols();
  const Mat at = a.transpose();
  const Mat bt = b.transpose();
  return with_arith(a.field(), [&](auto ar) -> std::optional<Mat> {
    Echelon<decltype(ar)> e(ar, n + k);
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      e.clear_work();
      support.clear();
      load_column(e, ar, at, i, 0, support);
      load_column(e, ar, bt, i, n, support);
      e.insert_work(support);
    }
    std::vector<Triplet> t;
    for (std::size_t r = 0; r < e.rank(); ++r) {
      const std::size_t c = e.pivot(r);
      if (c >= n) return std::nullopt;
      for (std::size_t j = 0; j < k; ++j) {
        const auto& v = e.row(r)[n + j];
        if (!decltype(ar)::is_zero(v)) t.push_back({c, j, ar.to(a.field(), v)});
      }
    }
    return Mat::from_triplets(a.field(), n, k, std::move(t));
  });
}

Mat inverse(const Mat& a) {
  require_shape(a.rows() == a.cols(), "inverse of non-square " + a.shape_string());
  if (rank(a) != a.rows()) throw std::domain_error("matrix is singular");
  return *solve(a, Mat::identity(a.field(), a.rows()));
}

Mat left_inverse(const Mat& basis) {
  auto lt = solve(basis.transpose(), Mat::identity(basis.field(), basis.cols()));
  if (!lt) throw std::domain_error("basis columns are dependent");
  return lt->transpose();
}

Subspace Subspace::span_of(const Mat& spanning) { return Subspace(image_basis(spanning)); }

bool Subspace::contains(const Mat& vectors) const {
  require_shape(vectors.rows() == ambient(), "subspace membership");
  if (vectors.cols() == 0) return true;
  return rank(hstack({basis_, vectors})) == dim();
}

bool Subspace::equals(const Subspace& other) const {
  return ambient() == other.ambient() && dim() == other.dim() && contains(other.basis());
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_shape(a.ambient() == b.ambient(), "intersection ambient");
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.field(), a.ambient());
  const Mat k = kernel_basis(hstack({a.basis(), b.basis().scaled(-Scalar::one(b.field()))}));
  const Mat coords = Mat::from_triplets(a.field(), a.dim(), k.cols(), [&] {
    std::vector<Triplet> t;
    for (Triplet& x : k.triplets()) {
      if (x.row < a.dim()) t.push_back(std::move(x));
    }
    return t;
  }());
  return Subspace::span_of(a.basis() * coords);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_shape(a.ambient() == b.ambient(), "sum ambient");
  return Subspace::span_of(hstack({a.basis(), b.basis()}));
}

Subspace equalizer(const Mat& f, const Mat& g) {
  require_same_field(f.field(), g.field(), "equalizer");
  require_shape(f.rows() == g.rows() && f.cols() == g.cols(),
                "equalizer of " + f.shape_string() + " and " + g.shape_string());
  return Subspace(kernel_basis(f - g));
}

Coequalizer cokernel(const Mat& relations) {
  const Field& f = relations.field();
  return with_arith(f, [&](auto ar) {
    const auto e = reduce_columns(ar, relations, true);
    const auto vecs = kernel_vectors(e, ar);
    const auto free = e.free_columns();
    std::vector<Triplet> q, s;
    for (std::size_t k = 0; k < vecs.size(); ++k) {
      for (std::size_t i = 0; i < vecs[k].size(); ++i) {
        if (!decltype(ar)::is_zero(vecs[k][i])) q.push_back({k, i, ar.to(f, vecs[k][i])});
      }
      // Each kernel vector is 1 on its own free coordinate and 0 on the
      // other free coordinates, so those coordinates form a section.
      s.push_back({free[k], k, Scalar::one(f)});
    }
    Coequalizer out;
    out.dim = vecs.size();
    out.quotient_map = Mat::from_triplets(f, out.dim, relations.rows(), std::move(q));
    out.section = Mat::from_triplets(f, relations.rows(), out.dim, std::move(s));
    return out;
  });
}

Coequalizer coequalizer(const Mat& f, const Mat& g) {
  require_same_field(f.field(), g.field(), "coequalizer");
  require_shape(f.rows() == g.rows() && f.cols() == g.cols(),
                "coequalizer of " + f.shape_string() + " and " + g.shape_string());
  return cokernel(f - g);
}

}  // namespace contra
