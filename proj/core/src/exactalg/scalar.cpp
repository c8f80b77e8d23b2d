#include "sl2coh/exactalg/scalar.hpp"

#include "sl2coh/errors.hpp"

namespace sl2coh {

Ring Ring::modulo(const mpz_class& m) {
  if (m < 2) throw InvalidArgument("modulus must be >= 2, got " + m.get_str());
  Ring r;
  r.modulus_ = m;
  return r;
}

bool Ring::reduces_to(const Ring& coarser) const {
  if (coarser.is_integers()) return is_integers();
  if (is_integers()) return true;
  return mpz_divisible_p(modulus_.get_mpz_t(), coarser.modulus_.get_mpz_t()) != 0;
}

std::string Ring::name() const { return is_integers() ? "ZZ" : "ZZ/" + modulus_.get_str(); }

void require_same_ring(const Ring& a, const Ring& b, const char* context) {
  if (a != b)
    throw RingMismatch(std::string(context) + ": ring mismatch " + a.name() + " vs " + b.name());
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_ring(a.ring_, b.ring_, "scalar +");
  return Scalar(a.ring_, a.value_ + b.value_);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same_ring(a.ring_, b.ring_, "scalar -");
  return Scalar(a.ring_, a.value_ - b.value_);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_ring(a.ring_, b.ring_, "scalar *");
  return Scalar(a.ring_, a.value_ * b.value_);
}

Scalar Scalar::inverse() const {
  if (value_ == 0) throw DivisionByZero("inverse of zero in " + ring_.name());
  if (ring_.is_integers()) {
    if (value_ == 1 || value_ == -1) return *this;
    throw NotDivisible("no inverse of " + value_.get_str() + " in ZZ", value_.get_str());
  }
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), value_.get_mpz_t(), ring_.modulus().get_mpz_t()) == 0)
    throw NotDivisible(value_.get_str() + " is not a unit in " + ring_.name(), value_.get_str());
  return Scalar(ring_, inv);
}

Scalar Scalar::divide_exact(const Scalar& b) const {
  require_same_ring(ring_, b.ring_, "scalar /");
  if (b.is_zero()) throw DivisionByZero("division by zero in " + ring_.name());
  if (!ring_.is_integers()) return *this * b.inverse();
  if (!mpz_divisible_p(value_.get_mpz_t(), b.value_.get_mpz_t()))
    throw NotDivisible(value_.get_str() + " is not divisible by " + b.value_.get_str(),
                       value_.get_str());
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), value_.get_mpz_t(), b.value_.get_mpz_t());
  return Scalar(ring_, q);
}

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace sl2coh
