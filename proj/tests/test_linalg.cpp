#include "doctest.h"

#include "contra/linalg.hpp"
#include "contra/random.hpp"
#include "oracle.hpp"

using namespace contra;

namespace {
const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);
const Field QQ = Field::rationals();
}  // namespace

TEST_CASE("scalar arithmetic") {
  CHECK(Scalar(F3, 2L) + Scalar(F3, 2L) == Scalar(F3, 1L));
  CHECK(Scalar(F3, -1L) == Scalar(F3, 2L));
  CHECK(Scalar(F3, 2L).inverse() == Scalar(F3, 2L));
  CHECK(Scalar::parse(QQ, "6/-4").to_string() == "-3/2");
  CHECK(Scalar::parse(QQ, "2/4") * Scalar(QQ, 2L) == Scalar::one(QQ));
  CHECK(Scalar::parse(F3, "1/2") == Scalar(F3, 2L));
  CHECK_THROWS(Scalar::parse(F3, "1/3"));
  CHECK_THROWS(Scalar(F2, 1L) + Scalar(F3, 1L));
  CHECK_THROWS(Field::prime(4));
  CHECK(Field::parse("Fp:5") == Field::prime(5));
  CHECK(Field::parse("Q").is_rational());
}

TEST_CASE("equalizer basics") {
  Rng rng(1);
  const Mat f = random_mat(QQ, 3, 3, rng);
  CHECK(equalizer(f, f).dim() == 3);
  CHECK(equalizer(Mat::identity(QQ, 2), Mat(QQ, 2, 2)).dim() == 0);
  CHECK_THROWS_AS(equalizer(Mat(QQ, 2, 3), Mat(QQ, 3, 2)), std::invalid_argument);
}

TEST_CASE("equalizer over F2 matches exhaustive enumeration") {
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const Mat f = random_mat(F2, 4, 3, rng);
    const Mat g = random_mat(F2, 4, 3, rng);
    const std::size_t solutions =
        oracle::count_solutions(F2, 3, [&](const Mat& x) { return f * x == g * x; });
    const Subspace e = equalizer(f, g);
    CHECK(oracle::ipow(2, e.dim()) == solutions);
    CHECK(f * e.basis() == g * e.basis());
    CHECK(oracle::dense_rank(e.basis()) == e.dim());
  }
}

TEST_CASE("coequalizer dimension against dense rank") {
  Rng rng(11);
  CHECK(coequalizer(Mat::identity(QQ, 2), Mat(QQ, 2, 2)).dim == 0);
  const Mat f = random_mat(QQ, 3, 3, rng);
  const Coequalizer same = coequalizer(f, f);
  CHECK(same.dim == 3);
  CHECK(same.quotient_map == Mat::identity(QQ, 3));
  for (int trial = 0; trial < 30; ++trial) {
    const Field& k = trial % 3 == 0 ? F2 : (trial % 3 == 1 ? F3 : QQ);
    const Mat a = random_mat(k, 4, 3, rng);
    const Mat b = random_mat(k, 4, 3, rng);
    const Coequalizer c = coequalizer(a, b);
    CHECK(c.dim == 4 - oracle::dense_rank(a - b));
    CHECK((c.quotient_map * (a - b)).is_zero());
    CHECK(c.quotient_map * c.section == Mat::identity(k, c.dim));
    CHECK(oracle::dense_rank(c.quotient_map) == c.dim);
  }
}

TEST_CASE("rank, kernel and left kernel agree with dense oracle") {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Field& k = trial % 2 ? F3 : QQ;
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    const Mat a = random_mat(k, r, c, rng, 0.4);
    const std::size_t rk = oracle::dense_rank(a);
    CHECK(rank(a) == rk);
    const Mat kb = kernel_basis(a);
    CHECK(kb.cols() == c - rk);
    CHECK((a * kb).is_zero());
    const Mat lk = left_kernel(a);
    CHECK(lk.rows() == r - rk);
    CHECK((lk * a).is_zero());
    CHECK(image_basis(a).cols() == rk);
  }
}

TEST_CASE("solve, inverse and left inverse") {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat a = random_invertible(QQ, 4, rng);
    CHECK(a * inverse(a) == Mat::identity(QQ, 4));
    const Mat b = random_mat(QQ, 4, 2, rng);
    auto x = solve(a, b);
    REQUIRE(x);
    CHECK(a * *x == b);
    const Mat basis = a.cols_range(0, 3);
    CHECK(left_inverse(basis) * basis == Mat::identity(QQ, 3));
  }
  const Mat singular = Mat::from_rows(QQ, 2, 2, {1, 2, 2, 4});
  CHECK_THROWS_AS(inverse(singular), std::domain_error);
  CHECK_FALSE(solve(singular, Mat::column(QQ, {1, 0})));
}

TEST_CASE("kron conventions") {
  Rng rng(3);
  CHECK(kron(Mat::identity(QQ, 2), Mat::identity(QQ, 2)) == Mat::identity(QQ, 4));
  for (int trial = 0; trial < 20; ++trial) {
    const Mat f = random_mat(F3, 2, 3, rng), g = random_mat(F3, 3, 2, rng);
    const Mat u = random_mat(F3, 3, 2, rng), v = random_mat(F3, 2, 4, rng);
    CHECK(kron(f, g) * kron(u, v) == kron(f * u, g * v));
    CHECK(kron(f, g) == oracle::kron_by_definition(f, g));
    const Mat h = random_mat(F3, 2, 2, rng);
    CHECK(kron(kron(f, g), h) == kron(f, kron(g, h)));
    const Mat x = random_mat(F3, 6, 3, rng);
    CHECK(kron_apply(f, g, x) == kron(f, g) * x);
  }
}

TEST_CASE("subspace operations") {
  const Mat a = Mat::from_rows(QQ, 3, 2, {1, 0, 0, 1, 0, 0});
  const Mat b = Mat::from_rows(QQ, 3, 2, {0, 0, 1, 0, 0, 1});
  const Subspace sa = Subspace::span_of(a), sb = Subspace::span_of(b);
  CHECK(intersect(sa, sb).dim() == 1);
  CHECK(sum(sa, sb).dim() == 3);
  CHECK(sa.contains(Mat::column(QQ, {2, 3, 0})));
  CHECK_FALSE(sa.contains(Mat::column(QQ, {0, 0, 1})));
  CHECK(intersect(sa, sb).contains(Mat::column(QQ, {0, 1, 0})));
}
