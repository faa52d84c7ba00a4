#include "contra/field.hpp"

#include <charconv>
#include <stdexcept>

namespace contra {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw std::invalid_argument("field characteristic must be a prime below 2^31, got " +
                                std::to_string(p));
  }
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  std::string_view digits;
  if (text.starts_with("Fp:")) {
    digits = text.substr(3);
  } else if (text.starts_with("F")) {
    digits = text.substr(1);
  } else {
    throw std::invalid_argument("unknown field '" + std::string(text) + "'");
  }
  std::uint32_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw std::invalid_argument("bad field characteristic in '" + std::string(text) + "'");
  }
  return prime(p);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

namespace {

std::uint32_t reduce(long v, std::uint32_t p) {
  long r = v % static_cast<long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

Scalar::Scalar(const Field& f, long value) : p_(f.characteristic()) {
  if (p_ != 0) {
    r_ = reduce(value, p_);
  } else if (value != 0) {
    q_ = std::make_unique<mpq_class>(value);
  }
}

Scalar::Scalar(const Field& f, const mpq_class& value) : p_(f.characteristic()) {
  if (p_ != 0) {
    mpz_class num = value.get_num() % p_;
    mpz_class den = value.get_den() % p_;
    if (den == 0) throw std::domain_error("denominator vanishes in F" + std::to_string(p_));
    auto n = static_cast<std::uint32_t>(mpz_class((num + p_) % p_).get_ui());
    auto d = static_cast<std::uint32_t>(den.get_ui());
    r_ = mul_mod(n, pow_mod(d, p_ - 2, p_), p_);
  } else if (sgn(value) != 0) {
    q_ = std::make_unique<mpq_class>(value);
    q_->canonicalize();
  }
}

Scalar::Scalar(const Scalar& other) : p_(other.p_), r_(other.r_) {
  if (other.q_) q_ = std::make_unique<mpq_class>(*other.q_);
}

Scalar& Scalar::operator=(const Scalar& other) {
  if (this != &other) {
    p_ = other.p_;
    r_ = other.r_;
    q_ = other.q_ ? std::make_unique<mpq_class>(*other.q_) : nullptr;
  }
  return *this;
}

Scalar Scalar::parse(const Field& f, std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0 || sgn(q.get_den()) == 0) {
    throw std::invalid_argument("not an exact scalar: '" + s + "'");
  }
  q.canonicalize();
  return Scalar(f, q);
}

bool Scalar::is_one() const {
  if (p_ != 0) return r_ == 1 % p_;
  return q_ && *q_ == 1;
}

mpq_class Scalar::rational() const {
  if (p_ != 0) return mpq_class(r_);
  return q_ ? *q_ : mpq_class(0);
}

std::string Scalar::to_string() const {
  if (p_ != 0) return std::to_string(r_);
  return q_ ? q_->get_str() : "0";
}

void Scalar::check_same(const Scalar& o) const {
  if (p_ != o.p_) {
    throw std::invalid_argument("scalar field mismatch: F" + std::to_string(p_) + " vs F" +
                                std::to_string(o.p_));
  }
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  if (p_ != 0) {
    r.r_ = r_ == 0 ? 0 : p_ - r_;
  } else if (r.q_) {
    *r.q_ = -*r.q_;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (p_ != 0) {
    std::uint32_t s = r_ + o.r_;
    r_ = s >= p_ ? s - p_ : s;
  } else if (o.q_) {
    if (q_) {
      *q_ += *o.q_;
      if (sgn(*q_) == 0) q_.reset();
    } else {
      q_ = std::make_unique<mpq_class>(*o.q_);
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (p_ != 0) {
    r_ = mul_mod(r_, o.r_, p_);
  } else if (q_ && o.q_) {
    *q_ *= *o.q_;
  } else {
    q_.reset();
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar r(*this);
  if (p_ != 0) {
    r.r_ = pow_mod(r_, p_ - 2, p_);
  } else {
    *r.q_ = 1 / *q_;
  }
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  if (a.p_ != 0) return a.r_ == b.r_;
  if (!a.q_ || !b.q_) return a.is_zero() && b.is_zero();
  return *a.q_ == *b.q_;
}

}  // namespace contra
