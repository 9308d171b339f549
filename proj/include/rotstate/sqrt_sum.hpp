#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "rotstate/sqrt_rational.hpp"

namespace rotstate {

/// Exact element of a multiquadratic extension of the rationals: a finite sum
/// sum_d q_d * sqrt(d) over squarefree positive integers d with rational
/// coefficients q_d. Closed under +, -, *, / and equipped with an exact sign,
/// which is what the polytope geometry and the exact state classification run
/// on. SignedSqrtRational embeds as the single-term case.
class SqrtSum {
 public:
  SqrtSum() = default;

  SqrtSum(const mpq_class& q) {
    if (sgn(q) != 0) {
      terms_[1] = q;
      terms_[1].canonicalize();
    }
  }
  SqrtSum(int n) : SqrtSum(mpq_class(n)) {}

  SqrtSum(const SignedSqrtRational& v) {
    auto [coeff, d] = v.canonical_parts();
    if (sgn(coeff) != 0) terms_[d] = coeff;
  }

  /// sqrt(r) for a non-negative rational r.
  static SqrtSum sqrt_of(const mpq_class& r) {
    return SqrtSum(SignedSqrtRational::sqrt_of(r));
  }

  bool is_zero() const { return terms_.empty(); }

  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
  }

  std::optional<mpq_class> as_rational() const {
    if (terms_.empty()) return mpq_class(0);
    if (is_rational()) return terms_.begin()->second;
    return std::nullopt;
  }

  /// Single-term view when the value is s*sqrt(p/q); nullopt otherwise.
  std::optional<SignedSqrtRational> as_single_sqrt() const {
    if (terms_.empty()) return SignedSqrtRational();
    if (terms_.size() != 1) return std::nullopt;
    const auto& [d, q] = *terms_.begin();
    return SignedSqrtRational(sgn(q), q * q * d);
  }

  const std::map<mpz_class, mpq_class>& terms() const { return terms_; }

  SqrtSum& operator+=(const SqrtSum& o) {
    for (const auto& [d, q] : o.terms_) add_term(d, q);
    return *this;
  }
  SqrtSum& operator-=(const SqrtSum& o) {
    for (const auto& [d, q] : o.terms_) add_term(d, -q);
    return *this;
  }
  SqrtSum& operator*=(const SqrtSum& o) { return *this = *this * o; }
  SqrtSum& operator/=(const SqrtSum& o) { return *this = *this / o; }

  friend SqrtSum operator+(SqrtSum a, const SqrtSum& b) { return a += b; }
  friend SqrtSum operator-(SqrtSum a, const SqrtSum& b) { return a -= b; }

  SqrtSum operator-() const {
    SqrtSum r;
    for (const auto& [d, q] : terms_) r.terms_[d] = -q;
    return r;
  }

  friend SqrtSum operator*(const SqrtSum& a, const SqrtSum& b) {
    SqrtSum r;
    for (const auto& [da, qa] : a.terms_)
      for (const auto& [db, qb] : b.terms_) {
        // sqrt(da)*sqrt(db) = g*sqrt(da*db/g^2) with g = gcd; the reduced
        // radical is squarefree because da and db are.
        mpz_class g = gcd(da, db);
        r.add_term((da / g) * (db / g), qa * qb * g);
      }
    return r;
  }

  friend SqrtSum operator/(SqrtSum a, SqrtSum b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    // Rationalize the denominator one prime at a time: write b = x + y*sqrt(p),
    // multiply both sides by the conjugate x - y*sqrt(p).
    while (!b.is_rational()) {
      mpz_class p = b.largest_prime_in_radicals();
      auto [x, y] = b.split_by_prime(p);
      SqrtSum conj = x - y * sqrt_of(mpq_class(p));
      a = a * conj;
      b = x * x - y * y * SqrtSum(mpq_class(p));
    }
    mpq_class d = *b.as_rational();
    SqrtSum r;
    for (const auto& [rad, q] : a.terms_) r.terms_[rad] = q / d;
    return r;
  }

  /// Exact sign of the represented real number.
  int sign() const {
    if (terms_.empty()) return 0;
    if (terms_.size() == 1) return sgn(terms_.begin()->second);
    mpz_class p = largest_prime_in_radicals();
    auto [x, y] = split_by_prime(p);
    int sx = x.sign(), sy = y.sign();
    if (sy == 0) return sx;
    if (sx == 0) return sy;
    if (sx == sy) return sx;
    // Opposite signs: |x| vs |y|*sqrt(p) decides, compare squares.
    SqrtSum diff = x * x - y * y * SqrtSum(mpq_class(p));
    return sx * diff.sign();
  }

  friend bool operator==(const SqrtSum& a, const SqrtSum& b) {
    return a.terms_ == b.terms_;
  }

  /// Exact total order (via the sign of the difference).
  friend bool operator<(const SqrtSum& a, const SqrtSum& b) {
    return (a - b).sign() < 0;
  }

  double to_double() const {
    if (terms_.empty()) return 0.0;
    mpf_class acc(0, 256);
    for (const auto& [d, q] : terms_) {
      mpf_class fd(d, 256), r(0, 256);
      mpf_sqrt(r.get_mpf_t(), fd.get_mpf_t());
      acc += mpf_class(q, 256) * r;
    }
    return acc.get_d();
  }

  /// "q" | "q*sqrt(d)" terms joined with " + " / " - ", e.g. "1/2 - 3/5*sqrt(3)".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [d, q] : terms_) {
      mpq_class a = abs(q);
      std::string term;
      if (d == 1)
        term = a.get_str();
      else if (a == 1)
        term = "sqrt(" + d.get_str() + ")";
      else
        term = a.get_str() + "*sqrt(" + d.get_str() + ")";
      if (out.empty())
        out = (sgn(q) < 0 ? "-" : "") + term;
      else
        out += (sgn(q) < 0 ? " - " : " + ") + term;
    }
    return out;
  }

  /// Inverse of to_string; also accepts plain "p/q" rationals.
  static SqrtSum parse(const std::string& text);

  friend std::ostream& operator<<(std::ostream& os, const SqrtSum& v) {
    return os << v.to_string();
  }

 private:
  void add_term(const mpz_class& d, const mpq_class& q) {
    if (sgn(q) == 0) return;
    auto it = terms_.find(d);
    if (it == terms_.end()) {
      terms_.emplace(d, q);
    } else {
      it->second += q;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  mpz_class largest_prime_in_radicals() const {
    // Radicals are squarefree, so the largest prime factor of the largest
    // radical > 1 can be found by peeling small primes.
    mpz_class d = terms_.rbegin()->first;
    mpz_class best = 1;
    for (mpz_class p = 2; p * p <= d; p += (p == 2 ? 1 : 2)) {
      while (d % p == 0) {
        d /= p;
        best = p;
      }
    }
    if (d > 1) best = d;
    if (best == 1) throw std::logic_error("no prime radical to split on");
    return best;
  }

  /// Writes the value as x + y*sqrt(p); x collects terms whose radical is
  /// coprime to p, y the rest with the factor sqrt(p) removed.
  std::pair<SqrtSum, SqrtSum> split_by_prime(const mpz_class& p) const {
    SqrtSum x, y;
    for (const auto& [d, q] : terms_) {
      if (d % p == 0)
        y.terms_[d / p] = q;
      else
        x.terms_[d] = q;
    }
    return {x, y};
  }

  // Invariant: keys are squarefree positive integers, no zero coefficients,
  // key 1 holds the rational part.
  std::map<mpz_class, mpq_class> terms_;
};

namespace detail {

/// mpq from text with an explicit zero-denominator check; gmp would raise
/// SIGFPE in canonicalize() otherwise.
inline mpq_class parse_mpq(const std::string& t) {
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw std::invalid_argument("bad rational: " + t);
  if (sgn(q.get_den()) == 0)
    throw std::invalid_argument("zero denominator: " + t);
  q.canonicalize();
  return q;
}

inline SqrtSum parse_sqrt_term(const std::string& t) {
  auto star = t.find("*sqrt(");
  if (star == std::string::npos) {
    if (t.rfind("sqrt(", 0) == 0 && t.back() == ')')
      return SqrtSum::sqrt_of(parse_mpq(t.substr(5, t.size() - 6)));
    return SqrtSum(parse_mpq(t));
  }
  if (t.back() != ')') throw std::invalid_argument("bad sqrt term: " + t);
  return SqrtSum(parse_mpq(t.substr(0, star))) *
         SqrtSum::sqrt_of(parse_mpq(t.substr(star + 6, t.size() - star - 7)));
}

}  // namespace detail

inline SqrtSum SqrtSum::parse(const std::string& text) {
  // The canonical rendering separates terms with " + " / " - "; only the
  // first term may carry an attached leading minus.
  SqrtSum out;
  size_t pos = 0;
  int sign = 1;
  while (pos < text.size()) {
    size_t plus = text.find(" + ", pos);
    size_t minus = text.find(" - ", pos);
    size_t cut = std::min(plus, minus);
    std::string term = text.substr(pos, cut == std::string::npos ? cut : cut - pos);
    if (!term.empty() && term.front() == '-') {
      sign = -sign;
      term = term.substr(1);
    }
    if (term.empty()) throw std::invalid_argument("empty term in: " + text);
    out += SqrtSum(mpq_class(sign)) * detail::parse_sqrt_term(term);
    if (cut == std::string::npos) break;
    sign = (cut == minus) ? -1 : 1;
    pos = cut + 3;
  }
  return out;
}

}  // namespace rotstate
