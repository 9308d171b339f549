#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "rotstate/half_int.hpp"
#include "rotstate/sqrt_rational.hpp"

namespace rotstate {
namespace detail {

/// Growable table of exact factorials. Readers take a shared lock; a missing
/// entry upgrades to the writer lock and extends the table. std::deque keeps
/// references to existing entries stable across growth.
class FactorialCache {
 public:
  mpz_class get(int n) {
    if (n < 0) throw std::domain_error("factorial of negative argument");
    {
      std::shared_lock lock(mutex_);
      if (n < static_cast<int>(table_.size())) return table_[n];
    }
    std::unique_lock lock(mutex_);
    if (table_.empty()) table_.push_back(1);
    while (static_cast<int>(table_.size()) <= n)
      table_.push_back(table_.back() * static_cast<int>(table_.size()));
    return table_[n];
  }

  static FactorialCache& instance() {
    static FactorialCache cache;
    return cache;
  }

 private:
  std::deque<mpz_class> table_;
  std::shared_mutex mutex_;
};

inline mpz_class factorial(int n) { return FactorialCache::instance().get(n); }

/// Factorial of a half-integer that must in fact be a non-negative integer.
inline mpz_class factorial(HalfInt h) {
  if (h.twice() % 2 != 0 || h.twice() < 0)
    throw std::domain_error("factorial argument not a non-negative integer");
  return factorial(h.twice() / 2);
}

inline int parity_phase(HalfInt h) {
  if (h.twice() % 2 != 0)
    throw std::domain_error("phase exponent not an integer");
  return (h.twice() / 2) % 2 == 0 ? 1 : -1;
}

/// Triangle coefficient Delta(a,b,c) = (a+b-c)!(a-b+c)!(-a+b+c)!/(a+b+c+1)!.
inline mpq_class triangle_coefficient(HalfInt a, HalfInt b, HalfInt c) {
  mpq_class q(factorial(a + b - c) * factorial(a - b + c) * factorial(-a + b + c),
              factorial((a + b + c).twice() / 2 + 1));
  q.canonicalize();
  return q;
}

}  // namespace detail

namespace wigner {

/// Triangle selection rule: |j1-j2| <= j3 <= j1+j2 with integer perimeter.
inline bool triangle_ok(HalfInt j1, HalfInt j2, HalfInt j3) {
  if (!j1.is_valid_magnitude() || !j2.is_valid_magnitude() || !j3.is_valid_magnitude())
    throw std::domain_error("angular momentum magnitude must be >= 0");
  if ((j1 + j2 + j3).twice() % 2 != 0) return false;
  return (j1 - j2).twice() <= j3.twice() && j3.twice() <= (j1 + j2).twice() &&
         (j2 - j1).twice() <= j3.twice();
}

/// Wigner 3-j symbol in the Condon-Shortley convention, evaluated exactly by
/// the Racah single-sum formula.
inline SignedSqrtRational three_j(HalfInt j1, HalfInt j2, HalfInt j3,
                                  HalfInt m1, HalfInt m2, HalfInt m3) {
  using detail::factorial;
  if (!m1.is_projection_of(j1) || !m2.is_projection_of(j2) || !m3.is_projection_of(j3))
    throw std::domain_error("projection out of range or parity mismatch");
  if ((m1 + m2 + m3).twice() != 0 || !triangle_ok(j1, j2, j3))
    return SignedSqrtRational();

  // radicand part: Delta(j1 j2 j3) * prod (j_i +- m_i)!
  mpq_class radicand = detail::triangle_coefficient(j1, j2, j3);
  radicand *= factorial(j1 + m1) * factorial(j1 - m1) * factorial(j2 + m2) *
              factorial(j2 - m2) * factorial(j3 + m3) * factorial(j3 - m3);

  // alternating sum over k
  int k_min = std::max({0, (j2 - j3 - m1).twice() / 2, (j1 - j3 + m2).twice() / 2});
  int k_max = std::min({(j1 + j2 - j3).twice() / 2, (j1 - m1).twice() / 2,
                        (j2 + m2).twice() / 2});
  mpq_class sum(0);
  for (int k = k_min; k <= k_max; ++k) {
    mpz_class den = factorial(k);
    den *= factorial((j1 + j2 - j3).twice() / 2 - k);
    den *= factorial((j1 - m1).twice() / 2 - k);
    den *= factorial((j2 + m2).twice() / 2 - k);
    den *= factorial((j3 - j2 + m1).twice() / 2 + k);
    den *= factorial((j3 - j1 - m2).twice() / 2 + k);
    mpq_class term(k % 2 == 0 ? 1 : -1, den);
    term.canonicalize();
    sum += term;
  }
  int phase = detail::parity_phase(j1 - j2 - m3);
  int sign = phase * sgn(sum);
  return SignedSqrtRational(sign, sum * sum * radicand);
}

/// Clebsch-Gordan coefficient <j1 m1 j2 m2|J M>, exact.
inline SignedSqrtRational clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2,
                                         HalfInt m2, HalfInt J, HalfInt M) {
  SignedSqrtRational w = three_j(j1, j2, J, m1, m2, -M);
  if (w.is_zero()) return w;
  int phase = detail::parity_phase(j1 - j2 + M);
  // prefactor sqrt(2J+1); 2J+1 = twice(J)+1 is integral for any J.
  return SignedSqrtRational(phase, mpq_class(J.twice() + 1)) * w;
}

/// Wigner 6-j symbol {j1 j2 j3; j4 j5 j6}, exact via the Racah sum.
inline SignedSqrtRational six_j_uncached(HalfInt j1, HalfInt j2, HalfInt j3,
                                         HalfInt j4, HalfInt j5, HalfInt j6) {
  using detail::factorial;
  if (!triangle_ok(j1, j2, j3) || !triangle_ok(j1, j5, j6) ||
      !triangle_ok(j4, j2, j6) || !triangle_ok(j4, j5, j3))
    return SignedSqrtRational();

  mpq_class radicand = detail::triangle_coefficient(j1, j2, j3);
  radicand *= detail::triangle_coefficient(j1, j5, j6);
  radicand *= detail::triangle_coefficient(j4, j2, j6);
  radicand *= detail::triangle_coefficient(j4, j5, j3);

  int s1 = (j1 + j2 + j3).twice() / 2;
  int s2 = (j1 + j5 + j6).twice() / 2;
  int s3 = (j4 + j2 + j6).twice() / 2;
  int s4 = (j4 + j5 + j3).twice() / 2;
  int q1 = (j1 + j2 + j4 + j5).twice() / 2;
  int q2 = (j2 + j3 + j5 + j6).twice() / 2;
  int q3 = (j3 + j1 + j6 + j4).twice() / 2;

  mpq_class sum(0);
  for (int k = std::max({s1, s2, s3, s4}); k <= std::min({q1, q2, q3}); ++k) {
    mpz_class den = factorial(k - s1) * factorial(k - s2) * factorial(k - s3) *
                    factorial(k - s4) * factorial(q1 - k) * factorial(q2 - k) *
                    factorial(q3 - k);
    mpq_class term(factorial(k + 1), den);
    term.canonicalize();
    if (k % 2 != 0) term = -term;
    sum += term;
  }
  return SignedSqrtRational(sgn(sum), sum * sum * radicand);
}

inline SignedSqrtRational six_j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4,
                                HalfInt j5, HalfInt j6) {
  // Memo keyed on the raw arguments; concurrent readers share the lock.
  using Key = std::array<int, 6>;
  static std::map<Key, SignedSqrtRational> cache;
  static std::shared_mutex mutex;
  Key key{j1.twice(), j2.twice(), j3.twice(),
          j4.twice(), j5.twice(), j6.twice()};
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  SignedSqrtRational value = six_j_uncached(j1, j2, j3, j4, j5, j6);
  std::unique_lock lock(mutex);
  cache.emplace(key, value);
  return value;
}

/// sqrt((2J+1)(2K+1)) * {j j J; j j K} computed literally as the six-fold sum
/// over magnetic quantum numbers of products of four 3-j symbols, with the
/// per-term phase (-1)^{j+m1}(-1)^{j+m2}(-1)^{J+m3}(-1)^{j+m4}(-1)^{j+m5}
/// (-1)^{K+m6}. Each term is exactly rational: every m_i enters two of the
/// four symbols, so the irrational factors pair up.
inline SignedSqrtRational six_j_via_3j_sum(HalfInt j, HalfInt J, HalfInt K) {
  if (!J.is_integer() || !K.is_integer())
    throw std::domain_error("J and K must be integers");
  mpq_class sum(0);
  for (int tm1 = -j.twice(); tm1 <= j.twice(); tm1 += 2)
    for (int tm2 = -j.twice(); tm2 <= j.twice(); tm2 += 2)
      for (int tm4 = -j.twice(); tm4 <= j.twice(); tm4 += 2) {
        HalfInt m1 = HalfInt::from_twice(tm1);
        HalfInt m2 = HalfInt::from_twice(tm2);
        HalfInt m4 = HalfInt::from_twice(tm4);
        HalfInt m3 = -(m1 + m2);   // selection rule of the first symbol
        HalfInt m6 = m4 + m2;      // selection rule of the third symbol
        HalfInt m5 = m1 + m6;      // selection rule of the second symbol
        if (!m3.is_projection_of(J) || !m6.is_projection_of(K) ||
            !m5.is_projection_of(j))
          continue;
        SignedSqrtRational t = three_j(j, j, J, m1, m2, m3);
        if (t.is_zero()) continue;
        t = t * three_j(j, j, K, -m1, m5, -m6);
        if (t.is_zero()) continue;
        t = t * three_j(j, j, K, -m4, -m2, m6);
        if (t.is_zero()) continue;
        t = t * three_j(j, j, J, m4, -m5, -m3);
        if (t.is_zero()) continue;
        auto rational = t.as_rational();
        if (!rational)
          throw std::logic_error("non-rational term in 6-j recoupling sum");
        int chi = detail::parity_phase(j + m1) * detail::parity_phase(j + m2) *
                  detail::parity_phase(J + m3) * detail::parity_phase(j + m4) *
                  detail::parity_phase(j + m5) * detail::parity_phase(K + m6);
        sum += chi * *rational;
      }
  mpq_class scale((J.twice() + 1) * (K.twice() + 1), 1);
  return SignedSqrtRational(sgn(sum), sum * sum * scale);
}

}  // namespace wigner
}  // namespace rotstate
