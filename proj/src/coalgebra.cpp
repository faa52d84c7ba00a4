#include "contra/coalgebra.hpp"

#include <regex>
#include <stdexcept>

#include "contra/linalg.hpp"
#include "contra/sl2.hpp"

namespace contra {

namespace {

bool shape_ok(const Coalgebra& c, Verdict& v) {
  if (c.delta.rows() != c.dim * c.dim || c.delta.cols() != c.dim) {
    v.fail("delta shape " + c.delta.shape_string());
    return false;
  }
  if (c.epsilon.rows() != 1 || c.epsilon.cols() != c.dim) {
    v.fail("epsilon shape " + c.epsilon.shape_string());
    return false;
  }
  if (!(c.delta.field() == c.field) || !(c.epsilon.field() == c.field)) {
    v.fail("field");
    return false;
  }
  return true;
}

}  // namespace

Verdict check_coalgebra(const Coalgebra& c) {
  Verdict v;
  if (!shape_ok(c, v)) return v;
  const Mat id = Mat::identity(c.field, c.dim);
  if (!(kron_apply(c.delta, id, c.delta) == kron_apply(id, c.delta, c.delta))) {
    v.fail("coassociativity");
  }
  if (!(kron_apply(c.epsilon, id, c.delta) == id)) v.fail("left counit");
  if (!(kron_apply(id, c.epsilon, c.delta) == id)) v.fail("right counit");
  return v;
}

Verdict check_morphism(const CoalgebraMorphism& rho) {
  Verdict v;
  if (!rho.source || !rho.target) {
    v.fail("missing coalgebra");
    return v;
  }
  const Coalgebra& c = *rho.source;
  const Coalgebra& d = *rho.target;
  if (rho.matrix.rows() != d.dim || rho.matrix.cols() != c.dim || !(c.field == d.field)) {
    v.fail("matrix shape " + rho.matrix.shape_string());
    return v;
  }
  if (!(d.delta * rho.matrix == kron_apply(rho.matrix, rho.matrix, c.delta))) {
    v.fail("comultiplicativity");
  }
  if (!(d.epsilon * rho.matrix == c.epsilon)) v.fail("counit compatibility");
  const bool onto = rank(rho.matrix) == d.dim;
  if (onto != rho.surjective) v.fail(rho.surjective ? "not surjective" : "surjectivity flag");
  return v;
}

Verdict check_algebra(const Algebra& a) {
  Verdict v;
  const std::size_t n = a.dim;
  if (a.mult.rows() != n || a.mult.cols() != n * n || a.unit.rows() != n || a.unit.cols() != 1) {
    v.fail("shape");
    return v;
  }
  const Mat id = Mat::identity(a.field, n);
  // mult(mult (x) id) vs mult(id (x) mult), as maps A^{(x)3} -> A.
  const Mat id3 = Mat::identity(a.field, n * n * n);
  if (!(a.mult * kron_apply(a.mult, id, id3) == a.mult * kron_apply(id, a.mult, id3))) {
    v.fail("associativity");
  }
  if (!(a.mult * kron(a.unit, id) == id)) v.fail("left unit");
  if (!(a.mult * kron(id, a.unit) == id)) v.fail("right unit");
  return v;
}

Verdict check_bialgebra(const Bialgebra& b) {
  Verdict v;
  const Coalgebra& c = *b.coalgebra;
  const std::size_t n = c.dim;
  v.merge(check_coalgebra(c));
  v.merge(check_algebra({c.field, n, b.mult, b.unit, c.name}));
  if (!v.ok()) return v;
  // Delta(xy) = sum x1 y1 (x) x2 y2.
  MatBuilder rhs(c.field, n * n, n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const Mat::Column dx = c.delta.col(x);
    for (std::size_t y = 0; y < n; ++y) {
      const Mat::Column dy = c.delta.col(y);
      for (std::size_t s = 0; s < dx.size(); ++s) {
        const std::size_t x1 = dx.rows[s] / n, x2 = dx.rows[s] % n;
        for (std::size_t t = 0; t < dy.size(); ++t) {
          const std::size_t y1 = dy.rows[t] / n, y2 = dy.rows[t] % n;
          const Scalar coeff = dx.values[s] * dy.values[t];
          const Mat::Column p1 = b.mult.col(x1 * n + y1);
          const Mat::Column p2 = b.mult.col(x2 * n + y2);
          for (std::size_t u = 0; u < p1.size(); ++u) {
            for (std::size_t w = 0; w < p2.size(); ++w) {
              rhs.add(std::size_t(p1.rows[u]) * n + p2.rows[w], x * n + y,
                      coeff * p1.values[u] * p2.values[w]);
            }
          }
        }
      }
    }
  }
  if (!(c.delta * b.mult == std::move(rhs).build())) v.fail("delta multiplicative");
  if (!(c.delta * b.unit == kron(b.unit, b.unit))) v.fail("delta unital");
  if (!(c.epsilon * b.mult == kron(c.epsilon, c.epsilon))) v.fail("epsilon multiplicative");
  if (!(c.epsilon * b.unit == Mat::identity(c.field, 1))) v.fail("epsilon unital");
  return v;
}

CoalgebraPtr grouplike(const Field& f, std::size_t n) {
  auto c = std::make_shared<Coalgebra>();
  c->field = f;
  c->dim = n;
  c->name = "grouplike(" + std::to_string(n) + ")";
  MatBuilder d(f, n * n, n), e(f, 1, n);
  for (std::size_t i = 0; i < n; ++i) {
    d.add(i * n + i, i, 1);
    e.add(0, i, 1);
  }
  c->delta = std::move(d).build();
  c->epsilon = std::move(e).build();
  return c;
}

CoalgebraPtr matrix_coalgebra(const Field& f, std::size_t n) {
  auto c = std::make_shared<Coalgebra>();
  const std::size_t dim = n * n;
  c->field = f;
  c->dim = dim;
  c->name = "matrix_coalgebra(" + std::to_string(n) + ")";
  MatBuilder d(f, dim * dim, dim), e(f, 1, dim);
  for (std::size_t i = 0; i < n; ++i) {
    e.add(0, i * n + i, 1);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) d.add((i * n + k) * dim + (k * n + j), i * n + j, 1);
    }
  }
  c->delta = std::move(d).build();
  c->epsilon = std::move(e).build();
  return c;
}

CoalgebraPtr divided_power_dual(const Field& f, std::size_t m) {
  auto c = std::make_shared<Coalgebra>();
  c->field = f;
  c->dim = m;
  c->name = "divided_power_dual(" + std::to_string(m) + ")";
  MatBuilder d(f, m * m, m), e(f, 1, m);
  if (m > 0) e.add(0, 0, 1);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i <= k; ++i) d.add(i * m + (k - i), k, 1);
  }
  c->delta = std::move(d).build();
  c->epsilon = std::move(e).build();
  return c;
}

CoalgebraPtr dual_of_algebra(const Algebra& a) {
  auto c = std::make_shared<Coalgebra>();
  c->field = a.field;
  c->dim = a.dim;
  c->name = "dual_of_algebra(" + a.name + ")";
  c->delta = a.mult.transpose();
  c->epsilon = a.unit.transpose();
  return c;
}

Algebra dual_algebra(const Coalgebra& c) {
  return {c.field, c.dim, c.delta.transpose(), c.epsilon.transpose(), "dual(" + c.name + ")"};
}

Algebra truncated_polynomial_algebra(const Field& f, std::size_t m) {
  MatBuilder mult(f, m, m * m), unit(f, m, 1);
  if (m > 0) unit.add(0, 0, 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; i + j < m; ++j) mult.add(i + j, i * m + j, 1);
  }
  return {f, m, std::move(mult).build(), std::move(unit).build(),
          "truncated(" + std::to_string(m) + ")"};
}

Algebra matrix_algebra(const Field& f, std::size_t n) {
  const std::size_t dim = n * n;
  MatBuilder mult(f, dim, dim * dim), unit(f, dim, 1);
  for (std::size_t i = 0; i < n; ++i) {
    unit.add(i * n + i, 0, 1);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) mult.add(i * n + k, (i * n + j) * dim + (j * n + k), 1);
    }
  }
  return {f, dim, std::move(mult).build(), std::move(unit).build(),
          "matrix_algebra(" + std::to_string(n) + ")"};
}

CoalgebraPtr catalog_coalgebra(const std::string& name, const Field& f) {
  static const std::regex pattern(R"(\s*([a-z_]+)\((.*)\)\s*)");
  std::smatch m;
  if (!std::regex_match(name, m, pattern)) {
    throw std::invalid_argument("unknown coalgebra '" + name + "'");
  }
  const std::string head = m[1];
  const std::string arg = m[2];
  if (head == "dual_of_algebra") {
    std::smatch inner;
    if (std::regex_match(arg, inner, pattern)) {
      const std::size_t k = std::stoul(inner[2]);
      if (inner[1] == "truncated") return dual_of_algebra(truncated_polynomial_algebra(f, k));
      if (inner[1] == "matrix_algebra") return dual_of_algebra(matrix_algebra(f, k));
    }
    throw std::invalid_argument("unknown algebra '" + arg + "'");
  }
  std::size_t k = 0;
  try {
    k = std::stoul(arg);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad parameter in '" + name + "'");
  }
  if (head == "grouplike") return grouplike(f, k);
  if (head == "matrix_coalgebra") return matrix_coalgebra(f, k);
  if (head == "divided_power_dual") return divided_power_dual(f, k);
  if (head == "frobenius_kernel") {
    if (f.characteristic() != 2) throw std::invalid_argument("frobenius_kernel needs Fp:2");
    return frobenius_kernel(k).coalgebra;
  }
  throw std::invalid_argument("unknown coalgebra '" + name + "'");
}

CoalgebraMorphism identity_morphism(const CoalgebraPtr& c) {
  return {c, c, Mat::identity(c->field, c->dim), true};
}

CoalgebraMorphism counit_morphism(const CoalgebraPtr& c) {
  return {c, grouplike(c->field, 1), c->epsilon, c->dim > 0};
}

CoalgebraMorphism divided_power_map(const Field& f, std::size_t m, std::size_t m2, std::size_t e) {
  MatBuilder r(f, m2, m);
  for (std::size_t k = 0; k < m; ++k) {
    if (k % e == 0 && k / e < m2) r.add(k / e, k, 1);
  }
  Mat mat = std::move(r).build();
  const bool onto = rank(mat) == m2;
  return {divided_power_dual(f, m), divided_power_dual(f, m2), std::move(mat), onto};
}

CoalgebraMorphism grouplike_map(const Field& f, std::size_t n, std::size_t n2,
                                const std::vector<std::size_t>& onto) {
  require_shape(onto.size() == n, "grouplike_map needs one image per basis element");
  MatBuilder r(f, n2, n);
  for (std::size_t i = 0; i < n; ++i) r.add(onto[i], i, 1);
  Mat mat = std::move(r).build();
  const bool surj = rank(mat) == n2;
  return {grouplike(f, n), grouplike(f, n2), std::move(mat), surj};
}

CoalgebraMorphism diagonal_morphism(const Field& f, std::size_t n) {
  MatBuilder r(f, n, n * n);
  for (std::size_t i = 0; i < n; ++i) r.add(i, i * n + i, 1);
  return {matrix_coalgebra(f, n), grouplike(f, n), std::move(r).build(), true};
}

Mat counit_column(const Coalgebra& c) { return c.epsilon.transpose(); }

}  // namespace contra
