#pragma once

#include <cstdint>
#include <random>

#include "contra/mat.hpp"

namespace contra {

using Rng = std::mt19937_64;

/// Small nonzero-biased scalar: residues for F_p, fractions a/b with
/// |a| <= 3, 1 <= b <= 2 for Q.
Scalar random_scalar(const Field& f, Rng& rng);
/// Each entry is nonzero with probability `density`.
Mat random_mat(const Field& f, std::size_t rows, std::size_t cols, Rng& rng,
               double density = 0.5);
Mat random_invertible(const Field& f, std::size_t n, Rng& rng);
/// Uniform integer in [lo, hi].
inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace contra
