#pragma once

#include <gmpxx.h>

#include <string>

namespace sl2coh {

/// Base ring tag: the integers, or ZZ/m for some m >= 2.
class Ring {
 public:
  static Ring integers() { return Ring{}; }
  static Ring modulo(const mpz_class& m);

  bool is_integers() const { return modulus_ == 0; }
  /// 0 for ZZ.
  const mpz_class& modulus() const { return modulus_; }

  /// Brings `v` into the canonical range [0, m); no-op over ZZ.
  void reduce(mpz_class& v) const {
    if (modulus_ != 0) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), modulus_.get_mpz_t());
  }
  mpz_class reduced(mpz_class v) const {
    reduce(v);
    return v;
  }

  /// True if reduction from *this to `coarser` is a ring map (coarser modulus divides ours).
  bool reduces_to(const Ring& coarser) const;

  std::string name() const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.modulus_ == b.modulus_; }
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

 private:
  mpz_class modulus_ = 0;
};

/// Throws RingMismatch unless both rings agree.
void require_same_ring(const Ring& a, const Ring& b, const char* context);

/// An element of ZZ or ZZ/m. Residues are always stored reduced.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Ring& ring, mpz_class value) : ring_(ring), value_(std::move(value)) {
    ring_.reduce(value_);
  }
  static Scalar integer(long v) { return Scalar(Ring::integers(), mpz_class(v)); }

  const Ring& ring() const { return ring_; }
  const mpz_class& value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  Scalar operator-() const { return Scalar(ring_, -value_); }
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);

  /// Multiplicative inverse: +-1 over ZZ, a unit residue over ZZ/m.
  Scalar inverse() const;
  /// Exact quotient; over ZZ the remainder must vanish, over ZZ/m `b` must be a unit.
  Scalar divide_exact(const Scalar& b) const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.ring_ == b.ring_ && a.value_ == b.value_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string to_string() const { return value_.get_str(); }

 private:
  Ring ring_;
  mpz_class value_ = 0;
};

bool is_prime(const mpz_class& n);
mpz_class binomial(unsigned long n, unsigned long k);

}  // namespace sl2coh
