#include "contra/random.hpp"

#include "contra/linalg.hpp"

namespace contra {

Scalar random_scalar(const Field& f, Rng& rng) {
  if (!f.is_rational()) {
    std::uniform_int_distribution<std::uint32_t> d(0, f.characteristic() - 1);
    return Scalar(f, static_cast<long>(d(rng)));
  }
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 2);
  return Scalar(f, mpq_class(num(rng), den(rng)));
}

Mat random_mat(const Field& f, std::size_t rows, std::size_t cols, Rng& rng, double density) {
  std::bernoulli_distribution keep(density);
  std::vector<Triplet> t;
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) {
      if (keep(rng)) t.push_back({i, j, random_scalar(f, rng)});
    }
  }
  return Mat::from_triplets(f, rows, cols, std::move(t));
}

Mat random_invertible(const Field& f, std::size_t n, Rng& rng) {
  for (;;) {
    Mat m = random_mat(f, n, n, rng, 0.7);
    if (rank(m) == n) return m;
  }
}

}  // namespace contra
