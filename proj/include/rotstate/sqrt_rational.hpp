#pragma once

#include <gmpxx.h>

#include <cmath>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace rotstate {
namespace detail {

/// Splits n > 0 as s^2 * d with d squarefree, returning (s, d). Factors by
/// trial division over small primes; any leftover cofactor must itself be a
/// perfect square or a prime, which covers every radicand arising from
/// ratios of factorials of the sizes used here.
inline std::pair<mpz_class, mpz_class> squarefree_decompose(const mpz_class& n) {
  if (sgn(n) <= 0) throw std::domain_error("squarefree_decompose expects n > 0");
  mpz_class rest = n, root = 1, sqfree = 1;
  for (mpz_class p = 2; p * p <= rest && p < 100000; p += (p == 2 ? 1 : 2)) {
    if (rest % p != 0) continue;
    int mult = 0;
    while (rest % p == 0) {
      rest /= p;
      ++mult;
    }
    for (int i = 0; i < mult / 2; ++i) root *= p;
    if (mult % 2 != 0) sqfree *= p;
  }
  if (rest > 1) {
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      mpz_class r;
      mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
      root *= r;
    } else if (mpz_probab_prime_p(rest.get_mpz_t(), 32)) {
      sqfree *= rest;
    } else {
      throw std::domain_error("radicand has an unfactorable square part: " +
                              rest.get_str());
    }
  }
  return {root, sqfree};
}

}  // namespace detail

/// Exact number of the form sign * sqrt(radicand) with a non-negative
/// rational radicand held in lowest terms. This is the natural codomain of
/// the Wigner symbols: every 3-j, 6-j and Clebsch-Gordan coefficient is a
/// signed square root of a rational.
class SignedSqrtRational {
 public:
  SignedSqrtRational() : sign_(0), radicand_(0) {}

  SignedSqrtRational(int sign, mpq_class radicand)
      : sign_(sign), radicand_(std::move(radicand)) {
    if (sign_ < -1 || sign_ > 1) throw std::domain_error("sign must be -1, 0 or +1");
    if (sgn(radicand_) < 0) throw std::domain_error("radicand must be non-negative");
    radicand_.canonicalize();
    if (sgn(radicand_) == 0) sign_ = 0;
    if (sign_ == 0) radicand_ = 0;
  }

  /// The value r itself, encoded as sign(r) * sqrt(r^2).
  static SignedSqrtRational of_rational(const mpq_class& r) {
    return SignedSqrtRational(sgn(r), r * r);
  }

  /// sqrt(r) for r >= 0.
  static SignedSqrtRational sqrt_of(const mpq_class& r) {
    if (sgn(r) < 0) throw std::domain_error("sqrt of negative rational");
    return SignedSqrtRational(sgn(r) > 0 ? 1 : 0, r);
  }

  int sign() const { return sign_; }
  const mpq_class& radicand() const { return radicand_; }
  bool is_zero() const { return sign_ == 0; }

  /// Exact rational value when the radicand is a perfect square.
  std::optional<mpq_class> as_rational() const {
    if (sign_ == 0) return mpq_class(0);
    const mpz_class& num = radicand_.get_num();
    const mpz_class& den = radicand_.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) ||
        !mpz_perfect_square_p(den.get_mpz_t()))
      return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    mpq_class q(sign_ * rn, rd);
    q.canonicalize();
    return q;
  }

  /// Correctly rounded double value. mpf_get_d truncates, so compare the
  /// truncated double with its upward neighbor against the 192-bit root.
  double to_double() const {
    if (sign_ == 0) return 0.0;
    mpf_class f(radicand_, 192);
    mpf_class r(0, 192);
    mpf_sqrt(r.get_mpf_t(), f.get_mpf_t());
    double lo = r.get_d();
    double hi = std::nextafter(lo, std::numeric_limits<double>::infinity());
    mpf_class mid(0, 192);
    mid = mpf_class(lo, 192) + mpf_class(hi, 192);
    double best = (2 * r > mid) ? hi : lo;
    return sign_ * best;
  }

  SignedSqrtRational operator-() const {
    return SignedSqrtRational(-sign_, radicand_);
  }

  friend SignedSqrtRational operator*(const SignedSqrtRational& a,
                                      const SignedSqrtRational& b) {
    return SignedSqrtRational(a.sign_ * b.sign_, a.radicand_ * b.radicand_);
  }

  friend SignedSqrtRational operator/(const SignedSqrtRational& a,
                                      const SignedSqrtRational& b) {
    if (b.sign_ == 0) throw std::domain_error("division by zero");
    return SignedSqrtRational(a.sign_ * b.sign_, a.radicand_ / b.radicand_);
  }

  friend bool operator==(const SignedSqrtRational& a, const SignedSqrtRational& b) {
    return a.sign_ == b.sign_ && a.radicand_ == b.radicand_;
  }

  /// Rational coefficient and squarefree integer d with value = coeff*sqrt(d).
  /// sqrt(p/q) = sqrt(p*q)/q, so the pair is (sign*s/q, d) where p*q = s^2*d.
  std::pair<mpq_class, mpz_class> canonical_parts() const {
    if (sign_ == 0) return {mpq_class(0), mpz_class(1)};
    auto [root, sqfree] =
        detail::squarefree_decompose(radicand_.get_num() * radicand_.get_den());
    mpq_class coeff(sign_ * root, radicand_.get_den());
    coeff.canonicalize();
    return {coeff, sqfree};
  }

  /// Renders as "p/q*sqrt(d)" with d the squarefree part of the radicand,
  /// e.g. sqrt(27/25) -> "3/5*sqrt(3)" and -sqrt(121/400) -> "-11/20".
  std::string to_string() const {
    auto [coeff, d] = canonical_parts();
    std::string s = coeff.get_str();
    if (d != 1) s += "*sqrt(" + d.get_str() + ")";
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const SignedSqrtRational& v) {
    return os << v.to_string();
  }

 private:
  int sign_;
  mpq_class radicand_;
};

}  // namespace rotstate
