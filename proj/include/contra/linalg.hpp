#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "contra/mat.hpp"

namespace contra {

/// A linear subspace of k^ambient, given by a basis of independent columns.
class Subspace {
 public:
  Subspace() = default;
  /// Takes ownership of an already independent basis (ambient x dim).
  explicit Subspace(Mat basis) : basis_(std::move(basis)) {}
  /// Column space of an arbitrary spanning matrix.
  static Subspace span_of(const Mat& spanning);
  static Subspace zero(const Field& f, std::size_t ambient) { return Subspace(Mat(f, ambient, 0)); }
  static Subspace full(const Field& f, std::size_t ambient) {
    return Subspace(Mat::identity(f, ambient));
  }

  const Mat& basis() const { return basis_; }
  std::size_t dim() const { return basis_.cols(); }
  std::size_t ambient() const { return basis_.rows(); }
  const Field& field() const { return basis_.field(); }

  /// True iff every column of vectors lies in the subspace.
  bool contains(const Mat& vectors) const;
  bool equals(const Subspace& other) const;

 private:
  Mat basis_;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

std::size_t rank(const Mat& a);
/// Basis of {x : a x = 0}, as the columns of a cols(a) x k matrix.
Mat kernel_basis(const Mat& a);
/// Rows spanning {y : y a = 0}; the result is a surjection onto k^q whose
/// kernel is the column space of a.
Mat left_kernel(const Mat& a);
/// The independent columns of a (greedy, left to right).
Mat image_basis(const Mat& a);
/// Some X with a X = b, or nullopt when the system is inconsistent.
std::optional<Mat> solve(const Mat& a, const Mat& b);
/// Throws std::domain_error when a is singular.
Mat inverse(const Mat& a);
/// L with L * basis = I for a basis with independent columns.
Mat left_inverse(const Mat& basis);

/// Kernel of f - g: the largest subspace on which f and g agree.
Subspace equalizer(const Mat& f, const Mat& g);

struct Coequalizer {
  /// Surjection codomain -> k^dim whose kernel is the image of f - g.
  Mat quotient_map;
  /// A right inverse of quotient_map (quotient_map * section = I).
  Mat section;
  std::size_t dim = 0;
};

Coequalizer coequalizer(const Mat& f, const Mat& g);
/// Quotient of k^rows(relations) by the column space of relations.
Coequalizer cokernel(const Mat& relations);

}  // namespace contra
