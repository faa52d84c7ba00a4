#include "contra/sl2.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <regex>
#include <stdexcept>
#include <unordered_map>

namespace contra {

namespace {

std::uint32_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(a * b % p);
}

/// Binomial coefficient mod p by Lucas' theorem.
std::uint32_t binom_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  std::uint64_t result = 1;
  while (n || k) {
    const std::uint64_t ni = n % p, ki = k % p;
    if (ki > ni) return 0;
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t t = 0; t < ki; ++t) {
      num = num * ((ni - t) % p) % p;
      den = den * ((t + 1) % p) % p;
    }
    std::uint64_t inv = 1, base = den, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    result = result * num % p * inv % p;
    n /= p;
    k /= p;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

/// Product of two normal-form monomials as (monomial, coefficient) terms.
template <class Fn>
void mono_product(const SL2Mono& x, const SL2Mono& y, std::uint32_t p, Fn&& emit) {
  const std::uint32_t b = x.b + y.b, c = x.c + y.c;
  const std::int64_t ad = x.ad + y.ad;
  if ((x.ad >= 0) == (y.ad >= 0) || x.ad == 0 || y.ad == 0) {
    emit(SL2Mono{b, c, ad}, 1u);
    return;
  }
  // a^s d^t = (1 + bc)^min(s, t) times the leftover power.
  const std::uint64_t t = static_cast<std::uint64_t>(std::min(std::abs(x.ad), std::abs(y.ad)));
  for (std::uint64_t s = 0; s <= t; ++s) {
    const std::uint32_t coeff = binom_mod(t, s, p);
    if (coeff) emit(SL2Mono{b + static_cast<std::uint32_t>(s), c + static_cast<std::uint32_t>(s), ad}, coeff);
  }
}

}  // namespace

SL2Poly SL2Poly::constant(std::uint32_t p, long v) {
  SL2Poly r(p);
  long m = v % static_cast<long>(p);
  if (m < 0) m += p;
  r.add_term({}, static_cast<std::uint64_t>(m));
  return r;
}

SL2Poly SL2Poly::mono(std::uint32_t p, SL2Mono m, std::uint32_t coeff) {
  SL2Poly r(p);
  r.add_term(m, coeff);
  return r;
}

void SL2Poly::add_term(const SL2Mono& m, std::uint64_t coeff) {
  coeff %= p_;
  if (!coeff) return;
  auto [it, inserted] = terms_.emplace(m, static_cast<std::uint32_t>(coeff));
  if (!inserted) {
    it->second = static_cast<std::uint32_t>((it->second + coeff) % p_);
    if (!it->second) terms_.erase(it);
  }
}

std::uint32_t SL2Poly::constant_term() const {
  auto it = terms_.find(SL2Mono{});
  return it == terms_.end() ? 0 : it->second;
}

SL2Poly SL2Poly::operator+(const SL2Poly& o) const {
  SL2Poly r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

SL2Poly SL2Poly::operator-(const SL2Poly& o) const {
  SL2Poly r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, p_ - c);
  return r;
}

SL2Poly SL2Poly::operator*(const SL2Poly& o) const {
  if (p_ != o.p_) throw std::invalid_argument("SL2Poly characteristic mismatch");
  SL2Poly r(p_);
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      const std::uint32_t c = mod_mul(c1, c2, p_);
      mono_product(m1, m2, p_, [&](const SL2Mono& m, std::uint32_t k) { r.add_term(m, mod_mul(c, k, p_)); });
    }
  }
  return r;
}

SL2Poly SL2Poly::scaled(std::uint32_t s) const {
  SL2Poly r(p_);
  for (const auto& [m, c] : terms_) r.add_term(m, mod_mul(c, s, p_));
  return r;
}

SL2Poly SL2Poly::pow(std::uint64_t e) const {
  SL2Poly result = constant(p_, 1), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

SL2Poly SL2Poly::frobenius(unsigned s) const {
  const std::uint64_t q = ipow(p_, s);
  SL2Poly r(p_);
  for (const auto& [m, c] : terms_) {
    r.add_term({static_cast<std::uint32_t>(m.b * q), static_cast<std::uint32_t>(m.c * q),
                m.ad * static_cast<std::int64_t>(q)},
               c);
  }
  return r;
}

SL2Poly SL2Poly::antipode() const {
  SL2Poly r(p_);
  for (const auto& [m, c] : terms_) {
    const bool negate = (m.b + m.c) % 2 == 1;
    r.add_term({m.b, m.c, -m.ad}, negate ? p_ - c : c);
  }
  return r;
}

std::uint32_t SL2Poly::counit() const {
  std::uint64_t s = 0;
  for (const auto& [m, c] : terms_) {
    if (m.b == 0 && m.c == 0) s += c;
  }
  return static_cast<std::uint32_t>(s % p_);
}

std::string SL2Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string mono;
    auto put = [&](const char* v, std::int64_t e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    put("b", m.b);
    put("c", m.c);
    put(m.ad >= 0 ? "a" : "d", std::abs(m.ad));
    if (mono.empty()) {
      out += std::to_string(c);
    } else {
      out += (c == 1 ? "" : std::to_string(c) + "*") + mono;
    }
  }
  return out;
}

namespace {

SL2Tensor tensor_mul(const SL2Tensor& x, const SL2Tensor& y, std::uint32_t p) {
  SL2Tensor r;
  for (const auto& [m1, c1] : x) {
    for (const auto& [m2, c2] : y) {
      const std::uint32_t c = mod_mul(c1, c2, p);
      mono_product(m1.first, m2.first, p, [&](const SL2Mono& l, std::uint32_t kl) {
        mono_product(m1.second, m2.second, p, [&](const SL2Mono& rr, std::uint32_t kr) {
          auto& slot = r[{l, rr}];
          slot = static_cast<std::uint32_t>((slot + std::uint64_t(mod_mul(c, kl, p)) * kr) % p);
        });
      });
    }
  }
  std::erase_if(r, [](const auto& e) { return e.second == 0; });
  return r;
}

SL2Tensor tensor_pow(const SL2Tensor& x, std::uint64_t e, std::uint32_t p) {
  SL2Tensor result{{{SL2Mono{}, SL2Mono{}}, 1 % p}};
  for (std::uint64_t i = 0; i < e; ++i) result = tensor_mul(result, x, p);
  return result;
}

}  // namespace

SL2Tensor sl2_tensor(const SL2Poly& x, const SL2Poly& y) {
  SL2Tensor r;
  const std::uint32_t p = x.characteristic();
  for (const auto& [m1, c1] : x.terms()) {
    for (const auto& [m2, c2] : y.terms()) {
      auto& slot = r[{m1, m2}];
      slot = static_cast<std::uint32_t>((slot + std::uint64_t(mod_mul(c1, c2, p))) % p);
    }
  }
  std::erase_if(r, [](const auto& e) { return e.second == 0; });
  return r;
}

SL2Tensor sl2_tensor_add(SL2Tensor a, const SL2Tensor& b, std::uint32_t p) {
  for (const auto& [k, c] : b) {
    auto& slot = a[k];
    slot = static_cast<std::uint32_t>((std::uint64_t(slot) + c) % p);
  }
  std::erase_if(a, [](const auto& e) { return e.second == 0; });
  return a;
}

SL2Tensor sl2_coproduct(const SL2Poly& x) {
  const std::uint32_t p = x.characteristic();
  const SL2Poly a = SL2Poly::a(p), b = SL2Poly::b(p), c = SL2Poly::c(p), d = SL2Poly::d(p);
  const SL2Tensor da = sl2_tensor_add(sl2_tensor(a, a), sl2_tensor(b, c), p);
  const SL2Tensor db = sl2_tensor_add(sl2_tensor(a, b), sl2_tensor(b, d), p);
  const SL2Tensor dc = sl2_tensor_add(sl2_tensor(c, a), sl2_tensor(d, c), p);
  const SL2Tensor dd = sl2_tensor_add(sl2_tensor(c, b), sl2_tensor(d, d), p);
  SL2Tensor out;
  for (const auto& [m, coeff] : x.terms()) {
    SL2Tensor t = tensor_mul(tensor_pow(db, m.b, p), tensor_pow(dc, m.c, p), p);
    t = tensor_mul(t, tensor_pow(m.ad >= 0 ? da : dd, std::abs(m.ad), p), p);
    for (auto& [k, v] : t) v = mod_mul(v, coeff, p);
    out = sl2_tensor_add(std::move(out), t, p);
  }
  return out;
}

Verdict check_rational(const RationalComodule& m) {
  Verdict v;
  if (m.coeff.size() != m.dim * m.dim) {
    v.fail("coefficient count");
    return v;
  }
  for (std::size_t i = 0; i < m.dim; ++i) {
    for (std::size_t j = 0; j < m.dim; ++j) {
      SL2Tensor rhs;
      for (std::size_t k = 0; k < m.dim; ++k) {
        rhs = sl2_tensor_add(std::move(rhs), sl2_tensor(m.at(i, k), m.at(k, j)), m.p);
      }
      if (sl2_coproduct(m.at(i, j)) != rhs) {
        v.fail("coassociativity at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      }
      if (m.at(i, j).counit() != (i == j ? 1u : 0u)) {
        v.fail("counit at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
  }
  return v;
}

RationalComodule trivial_rational(std::uint32_t p) {
  return {p, 1, {SL2Poly::constant(p, 1)}, "L(0)"};
}

RationalComodule natural_rational(std::uint32_t p) {
  return {p, 2, {SL2Poly::a(p), SL2Poly::b(p), SL2Poly::c(p), SL2Poly::d(p)}, "L(1)"};
}

RationalComodule tensor_rational(const RationalComodule& m, const RationalComodule& n) {
  if (m.p != n.p) throw std::invalid_argument("tensor_rational characteristic mismatch");
  const std::size_t d = m.dim * n.dim;
  RationalComodule out{m.p, d, std::vector<SL2Poly>(d * d, SL2Poly(m.p)), m.label + "*" + n.label};
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t i2 = 0; i2 < n.dim; ++i2)
      for (std::size_t j = 0; j < m.dim; ++j)
        for (std::size_t j2 = 0; j2 < n.dim; ++j2) {
          out.coeff[(i * n.dim + i2) * d + (j * n.dim + j2)] = m.at(i, j) * n.at(i2, j2);
        }
  return out;
}

RationalComodule direct_sum_rational(const RationalComodule& m, const RationalComodule& n) {
  if (m.p != n.p) throw std::invalid_argument("direct_sum_rational characteristic mismatch");
  const std::size_t d = m.dim + n.dim;
  RationalComodule out{m.p, d, std::vector<SL2Poly>(d * d, SL2Poly(m.p)), m.label + "+" + n.label};
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t j = 0; j < m.dim; ++j) out.coeff[i * d + j] = m.at(i, j);
  for (std::size_t i = 0; i < n.dim; ++i)
    for (std::size_t j = 0; j < n.dim; ++j) out.coeff[(m.dim + i) * d + m.dim + j] = n.at(i, j);
  return out;
}

RationalComodule frobenius_twist(const RationalComodule& m, unsigned s) {
  RationalComodule out = m;
  for (SL2Poly& x : out.coeff) x = x.frobenius(s);
  out.label = m.label + "^Fr" + (s > 1 ? std::to_string(s) : "");
  return out;
}

Character character(const RationalComodule& m) {
  const Field f = Field::prime(m.p);
  std::map<long, MatBuilder> parts;
  for (std::size_t i = 0; i < m.dim; ++i) {
    for (std::size_t j = 0; j < m.dim; ++j) {
      for (const auto& [mono, c] : m.at(i, j).terms()) {
        if (mono.b || mono.c) continue;
        auto it = parts.try_emplace(mono.ad, f, m.dim, m.dim).first;
        it->second.add(i, j, static_cast<long>(c));
      }
    }
  }
  Character ch;
  for (auto& [w, builder] : parts) {
    const std::size_t r = rank(std::move(builder).build());
    if (r) ch[w] = static_cast<long>(r);
  }
  return ch;
}

Character character_product(const Character& x, const Character& y) {
  Character r;
  for (const auto& [w1, m1] : x)
    for (const auto& [w2, m2] : y) r[w1 + w2] += m1 * m2;
  std::erase_if(r, [](const auto& e) { return e.second == 0; });
  return r;
}

Character character_sum(const Character& x, const Character& y) {
  Character r = x;
  for (const auto& [w, m] : y) r[w] += m;
  std::erase_if(r, [](const auto& e) { return e.second == 0; });
  return r;
}

Character simple_character(std::uint32_t p, long lambda) {
  if (lambda < 0) throw std::invalid_argument("negative highest weight");
  Character ch{{0, 1}};
  long scale = 1;
  while (lambda > 0) {
    const long digit = lambda % p;
    Character weyl;
    for (long w = -digit; w <= digit; w += 2) weyl[w * scale] = 1;
    ch = character_product(ch, weyl);
    lambda /= p;
    scale *= p;
  }
  return ch;
}

long f_multiplicity(std::uint32_t p, long lambda, const Character& ch) {
  Character rest = ch;
  long result = 0;
  while (!rest.empty()) {
    const auto [w, mult] = *rest.rbegin();
    if (w < 0 || mult < 0) {
      throw std::logic_error("character does not decompose into simple characters");
    }
    if (w == lambda) result = mult;
    for (const auto& [u, k] : simple_character(p, w)) {
      rest[u] -= mult * k;
    }
    std::erase_if(rest, [](const auto& e) { return e.second == 0; });
  }
  return result;
}

long f_multiplicity(long lambda, const RationalComodule& v) {
  return f_multiplicity(v.p, lambda, character(v));
}

long max_weight(const Character& ch) {
  long w = 0;
  for (const auto& [k, m] : ch) {
    if (m) w = std::max(w, std::abs(k));
  }
  return w;
}

Subspace hom_G(const RationalComodule& m, const RationalComodule& n) {
  if (m.p != n.p) throw std::invalid_argument("hom_G characteristic mismatch");
  const Field f = Field::prime(m.p);
  const std::size_t dm = m.dim, dn = n.dim;
  std::map<SL2Mono, std::size_t> index;
  auto row = [&](const SL2Mono& mono, std::size_t i, std::size_t j) {
    auto it = index.try_emplace(mono, index.size()).first;
    return (it->second * dn + i) * dm + j;
  };
  std::vector<Triplet> t;
  // (A^N T - T A^M)[i, j] for T[y, x] at unknown x*dn + y.
  for (std::size_t i = 0; i < dn; ++i)
    for (std::size_t l = 0; l < dn; ++l)
      for (const auto& [mono, c] : n.at(i, l).terms())
        for (std::size_t j = 0; j < dm; ++j) t.push_back({row(mono, i, j), j * dn + l, Scalar(f, static_cast<long>(c))});
  for (std::size_t l = 0; l < dm; ++l)
    for (std::size_t j = 0; j < dm; ++j)
      for (const auto& [mono, c] : m.at(l, j).terms())
        for (std::size_t i = 0; i < dn; ++i) t.push_back({row(mono, i, j), l * dn + i, -Scalar(f, static_cast<long>(c))});
  const Mat eq = Mat::from_triplets(f, std::max<std::size_t>(index.size(), 1) * dn * dm, dm * dn, std::move(t));
  return Subspace(kernel_basis(eq));
}

std::vector<std::pair<std::size_t, std::uint32_t>> FrobeniusKernel::reduce(const SL2Poly& x) const {
  std::map<std::size_t, std::uint64_t> acc;
  for (const auto& [m, c] : x.terms()) {
    const std::size_t k = static_cast<std::size_t>(((m.ad % std::int64_t(N)) + std::int64_t(N)) % std::int64_t(N));
    if (m.ad >= 0) {
      if (m.b < N && m.c < N) acc[index(m.b, m.c, k)] += c;
      continue;
    }
    // d^l = a^{-l} (1 + bc)^l.
    const std::uint64_t l = static_cast<std::uint64_t>(-m.ad);
    for (std::uint64_t s = 0; s <= l && m.b + s < N && m.c + s < N; ++s) {
      const std::uint32_t bin = binom_mod(l, s, p);
      if (bin) acc[index(m.b + s, m.c + s, k)] += std::uint64_t(c) * bin;
    }
  }
  std::vector<std::pair<std::size_t, std::uint32_t>> out;
  for (const auto& [i, c] : acc) {
    if (c % p) out.emplace_back(i, static_cast<std::uint32_t>(c % p));
  }
  return out;
}

namespace {

using KTensor = std::unordered_map<std::uint64_t, std::uint32_t>;

std::unique_ptr<FrobeniusKernel> build_kernel(unsigned r, std::uint32_t p) {
  auto g = std::make_unique<FrobeniusKernel>();
  g->p = p;
  g->r = r;
  g->N = ipow(p, r);
  const std::size_t N = g->N, n = N * N * N;
  const Field f = Field::prime(p);
  auto split = [&](std::size_t x, std::size_t& i, std::size_t& j, std::size_t& k) {
    k = x % N;
    j = (x / N) % N;
    i = x / (N * N);
  };
  // Product of basis elements, or n when it vanishes.
  auto mul = [&](std::size_t x, std::size_t y) -> std::size_t {
    std::size_t i1, j1, k1, i2, j2, k2;
    split(x, i1, j1, k1);
    split(y, i2, j2, k2);
    if (i1 + i2 >= N || j1 + j2 >= N) return n;
    return g->index(i1 + i2, j1 + j2, (k1 + k2) % N);
  };
  auto tmul = [&](const KTensor& x, const KTensor& y) {
    KTensor out;
    for (const auto& [kx, cx] : x) {
      for (const auto& [ky, cy] : y) {
        const std::size_t l = mul(kx / n, ky / n);
        const std::size_t rr = mul(kx % n, ky % n);
        if (l == n || rr == n) continue;
        auto& slot = out[std::uint64_t(l) * n + rr];
        slot = static_cast<std::uint32_t>((slot + std::uint64_t(cx) * cy) % p);
      }
    }
    std::erase_if(out, [](const auto& e) { return e.second == 0; });
    return out;
  };
  auto lift = [&](const SL2Tensor& t) {
    KTensor out;
    for (const auto& [key, c] : t) {
      for (const auto& [l, cl] : g->reduce(SL2Poly::mono(p, key.first, c))) {
        for (const auto& [rr, cr] : g->reduce(SL2Poly::mono(p, key.second))) {
          auto& slot = out[std::uint64_t(l) * n + rr];
          slot = static_cast<std::uint32_t>((slot + std::uint64_t(cl) * cr) % p);
        }
      }
    }
    std::erase_if(out, [](const auto& e) { return e.second == 0; });
    return out;
  };
  const KTensor da = lift(sl2_coproduct(SL2Poly::a(p)));
  const KTensor db = lift(sl2_coproduct(SL2Poly::b(p)));
  const KTensor dc = lift(sl2_coproduct(SL2Poly::c(p)));
  const KTensor one{{0, 1}};
  std::vector<KTensor> pb{one}, pc{one}, pa{one};
  for (std::size_t e = 1; e < N; ++e) {
    pb.push_back(tmul(pb.back(), db));
    pc.push_back(tmul(pc.back(), dc));
    pa.push_back(tmul(pa.back(), da));
  }
  std::vector<Triplet> delta, eps, mult;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      const KTensor bc = tmul(pb[i], pc[j]);
      for (std::size_t k = 0; k < N; ++k) {
        const std::size_t col = g->index(i, j, k);
        for (const auto& [key, c] : tmul(bc, pa[k])) {
          delta.push_back({static_cast<std::size_t>(key), col, Scalar(f, static_cast<long>(c))});
        }
        if (i == 0 && j == 0) eps.push_back({0, col, Scalar::one(f)});
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t z = mul(x, y);
      if (z != n) mult.push_back({z, x * n + y, Scalar::one(f)});
    }
  }
  auto c = std::make_shared<Coalgebra>();
  c->field = f;
  c->dim = n;
  c->name = "frobenius_kernel(" + std::to_string(r) + ")";
  c->delta = Mat::from_triplets(f, n * n, n, std::move(delta));
  c->epsilon = Mat::from_triplets(f, 1, n, std::move(eps));
  g->coalgebra = std::move(c);
  g->mult = Mat::from_triplets(f, n, n * n, std::move(mult));
  MatBuilder u(f, n, 1);
  u.add(0, 0, 1);
  g->unit = std::move(u).build();
  return g;
}

}  // namespace

const FrobeniusKernel& frobenius_kernel(unsigned r, std::uint32_t p) {
  static std::mutex lock;
  static std::map<std::pair<unsigned, std::uint32_t>, std::unique_ptr<FrobeniusKernel>> cache;
  if (r == 0 || !is_prime(p)) throw std::invalid_argument("frobenius_kernel needs r >= 1 and p prime");
  std::lock_guard<std::mutex> guard(lock);
  auto& slot = cache[{r, p}];
  if (!slot) slot = build_kernel(r, p);
  return *slot;
}

Comodule restrict_to_kernel(const RationalComodule& m, unsigned r) {
  const FrobeniusKernel& g = frobenius_kernel(r, m.p);
  const Field& f = g.coalgebra->field;
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < m.dim; ++i) {
    for (std::size_t j = 0; j < m.dim; ++j) {
      for (const auto& [c, v] : g.reduce(m.at(i, j).antipode())) {
        t.push_back({c * m.dim + i, j, Scalar(f, static_cast<long>(v))});
      }
    }
  }
  return {g.coalgebra, Side::left, m.dim,
          Mat::from_triplets(f, g.coalgebra->dim * m.dim, m.dim, std::move(t)), m.label};
}

RationalComodule simple_rational(long lambda, std::uint32_t p) {
  if (lambda < 0) throw std::invalid_argument("negative highest weight");
  RationalComodule out = trivial_rational(p);
  const long label = lambda;
  unsigned s = 0;
  while (lambda > 0) {
    const long digit = lambda % p;
    if (digit > 1) throw std::invalid_argument("simple modules are catalogued only for p = 2");
    if (digit == 1) {
      const RationalComodule factor = s == 0 ? natural_rational(p) : frobenius_twist(natural_rational(p), s);
      out = out.dim == 1 && out.label == "L(0)" ? factor : tensor_rational(out, factor);
    }
    lambda /= p;
    ++s;
  }
  out.label = "L(" + std::to_string(label) + ")";
  return out;
}

RationalComodule catalog_P(long lambda) {
  constexpr std::uint32_t p = 2;
  if (lambda == 1) {
    RationalComodule st = natural_rational(p);
    st.label = "P(1)";
    return st;
  }
  if (lambda != 0) throw std::invalid_argument("P(lambda) is catalogued for lambda in {0, 1}");
  const SL2Poly a = SL2Poly::a(p), b = SL2Poly::b(p), c = SL2Poly::c(p), d = SL2Poly::d(p);
  // Row (i, i'), column (j, j'): x_ij x_i'j' for x = [[a, b], [c, d]].
  std::vector<SL2Poly> coeff = {
      a * a, a * b, b * a, b * b,
      a * c, a * d, b * c, b * d,
      c * a, c * b, d * a, d * b,
      c * c, c * d, d * c, d * d,
  };
  return {p, 4, std::move(coeff), "P(0)"};
}

Mat catalog_q() { return Mat::from_rows(Field::prime(2), 1, 4, {0, 1, -1, 0}); }

RationalComodule catalog_rational(const std::string& name) {
  static const std::regex atom(R"(\s*([LP])\(?(\d+)\)?(\^Fr(\d*))?\s*)");
  auto parse_atom = [&](const std::string& s) {
    std::smatch m;
    if (s == "k" || s == "trivial") return trivial_rational(2);
    if (!std::regex_match(s, m, atom)) throw std::invalid_argument("unknown module '" + s + "'");
    const long lambda = std::stol(m[2]);
    RationalComodule r = m[1] == "L" ? simple_rational(lambda) : catalog_P(lambda);
    if (m[3].matched) r = frobenius_twist(r, m[4].length() ? std::stoul(m[4]) : 1);
    return r;
  };
  auto parse_product = [&](const std::string& s) {
    std::optional<RationalComodule> acc;
    std::size_t start = 0;
    for (;;) {
      const std::size_t star = s.find('*', start);
      RationalComodule f = parse_atom(s.substr(start, star - start));
      acc = acc ? tensor_rational(*acc, f) : f;
      if (star == std::string::npos) break;
      start = star + 1;
    }
    return *acc;
  };
  std::optional<RationalComodule> acc;
  std::size_t start = 0;
  for (;;) {
    const std::size_t plus = name.find('+', start);
    RationalComodule t = parse_product(name.substr(start, plus - start));
    acc = acc ? direct_sum_rational(*acc, t) : t;
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  acc->label = name;
  return *acc;
}

std::vector<Comodule> kernel_simples(unsigned r, std::uint32_t p) {
  std::vector<Comodule> out;
  const long top = static_cast<long>(ipow(p, r));
  for (long mu = 0; mu < top; ++mu) out.push_back(restrict_to_kernel(simple_rational(mu, p), r));
  return out;
}

}  // namespace contra

namespace contra {

RationalTower build_tower(long lambda, unsigned m_max) {
  if (lambda < 0) throw std::invalid_argument("negative highest weight");
  std::vector<long> digits;
  for (long l = lambda; l > 0; l /= 2) digits.push_back(l % 2);
  RationalTower t;
  t.lambda = lambda;
  t.m0 = std::max<unsigned>(1, static_cast<unsigned>(digits.size()));
  if (m_max < t.m0) throw std::invalid_argument("m_max must exceed the top digit of lambda");
  auto digit = [&](unsigned i) { return i < digits.size() ? digits[i] : 0L; };
  RationalComodule acc = catalog_P(digit(0));
  for (unsigned i = 1; i < t.m0; ++i) acc = tensor_rational(acc, frobenius_twist(catalog_P(digit(i)), i));
  acc.label = "P(" + std::to_string(lambda) + "," + std::to_string(t.m0) + ")";
  t.stages.push_back(acc);
  for (unsigned m = t.m0 + 1; m <= m_max; ++m) {
    const RationalComodule& prev = t.stages.back();
    RationalComodule next = tensor_rational(prev, frobenius_twist(catalog_P(0), m - 1));
    next.label = "P(" + std::to_string(lambda) + "," + std::to_string(m) + ")";
    t.transitions.push_back(kron(Mat::identity(Field::prime(2), prev.dim), catalog_q()));
    t.stages.push_back(std::move(next));
  }
  return t;
}

}  // namespace contra
