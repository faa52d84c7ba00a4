#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace contra {

/// Ground field: the rationals or a prime field F_p.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws std::invalid_argument unless p is prime and fits in 31 bits.
  static Field prime(std::uint32_t p);
  /// Accepts "Q" or "Fp:<p>" / "F<p>".
  static Field parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  bool operator==(const Field&) const = default;

 private:
  friend class Scalar;
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// An element of a Field. Prime-field elements are stored as canonical
/// residues 0..p-1; rationals as normalized GMP fractions.
class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;
  Scalar(const Field& f, long value);
  Scalar(const Field& f, const mpq_class& value);

  Scalar(const Scalar& other);
  Scalar(Scalar&&) noexcept = default;
  Scalar& operator=(const Scalar& other);
  Scalar& operator=(Scalar&&) noexcept = default;
  ~Scalar() = default;

  static Scalar zero(const Field& f) { return Scalar(f, 0L); }
  static Scalar one(const Field& f) { return Scalar(f, 1L); }
  /// Parses a decimal integer or "num/den". Throws std::invalid_argument.
  static Scalar parse(const Field& f, std::string_view text);

  Field field() const { return Field(p_); }
  bool is_zero() const { return p_ != 0 ? r_ == 0 : (!q_ || sgn(*q_) == 0); }
  bool is_one() const;

  /// Residue for prime fields (undefined for rationals).
  std::uint32_t residue() const { return r_; }
  /// Exact rational value; prime residues are returned as integers.
  mpq_class rational() const;

  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws std::domain_error on division by zero.
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a *= b.inverse(); }
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void check_same(const Scalar& o) const;

  std::uint32_t p_ = 0;
  std::uint32_t r_ = 0;
  std::unique_ptr<mpq_class> q_;  // null means zero
};

bool is_prime(std::uint64_t n);

}  // namespace contra
