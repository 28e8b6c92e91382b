#include "hofstadter/rationals.hpp"

#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace hofstadter {

namespace {

void check_q_max(std::int64_t q_max) {
  if (q_max < 1 || q_max > kMaxDenominator) {
    throw std::invalid_argument("q_max must lie in [1, " + std::to_string(kMaxDenominator) +
                                "], got " + std::to_string(q_max));
  }
}

}  // namespace

ReducedFraction::ReducedFraction(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
  if (q < 1) throw std::invalid_argument("denominator must be >= 1");
  if (p < 0) throw std::invalid_argument("numerator must be >= 0");
  if (std::gcd(p, q) != 1) {
    throw std::invalid_argument(std::to_string(p) + "/" + std::to_string(q) +
                                " is not in lowest terms");
  }
}

ReducedFraction ReducedFraction::reduce(std::int64_t p, std::int64_t q) {
  if (q < 1) throw std::invalid_argument("denominator must be >= 1");
  if (p < 0) throw std::invalid_argument("numerator must be >= 0");
  const std::int64_t g = std::gcd(p, q);
  return {p / g, q / g};
}

std::string ReducedFraction::to_string() const {
  return std::to_string(p_) + "/" + std::to_string(q_);
}

std::ostream& operator<<(std::ostream& os, const ReducedFraction& f) {
  return os << f.p() << '/' << f.q();
}

GcdResult extended_gcd(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) throw std::invalid_argument("extended_gcd expects non-negative inputs");
  if (a == 0 && b == 0) throw std::invalid_argument("extended_gcd(0, 0) is undefined");

  // Invariants: old_r = a*old_x + b*old_y, r = a*x + b*y.
  std::int64_t old_r = a, r = b;
  std::int64_t old_x = 1, x = 0;
  std::int64_t old_y = 0, y = 1;
  while (r != 0) {
    const std::int64_t quotient = old_r / r;
    old_r = std::exchange(r, old_r - quotient * r);
    old_x = std::exchange(x, old_x - quotient * x);
    old_y = std::exchange(y, old_y - quotient * y);
  }
  return {old_r, old_x, old_y};
}

DiophantinePair conjugate_pair(const ReducedFraction& f) {
  const std::int64_t p = f.p();
  const std::int64_t q = f.q();
  if (q == 1) {
    // p*0 - 1*n = 1.
    return {0, -1};
  }
  const GcdResult r = extended_gcd(p, q);
  // p*x + q*y = 1 -> m = x (mod q), then n follows exactly.
  std::int64_t m = r.x % q;
  if (m < 0) m += q;
  const std::int64_t n = (p * m - 1) / q;
  return {m, n};
}

DiophantinePair conjugate_pair(std::int64_t p, std::int64_t q) {
  if (q >= 1 && p >= 0 && std::gcd(p, q) != 1) {
    throw std::invalid_argument("p*m - q*n = 1 has no solution: gcd(" + std::to_string(p) + ", " +
                                std::to_string(q) + ") != 1");
  }
  return conjugate_pair(ReducedFraction(p, q));
}

std::vector<ReducedFraction> farey_sequence(std::int64_t q_max) {
  check_q_max(q_max);
  std::vector<ReducedFraction> out;
  // Next-term recurrence: from neighbours a/b < c/d the successor is
  // (k*c - a)/(k*d - b) with k = (q_max + b) / d.
  std::int64_t a = 0, b = 1, c = 1, d = q_max;
  out.emplace_back(0, 1);
  while (c <= q_max) {
    out.emplace_back(c, d);
    if (c == d) break;
    const std::int64_t k = (q_max + b) / d;
    const std::int64_t next_c = k * c - a;
    const std::int64_t next_d = k * d - b;
    a = c;
    b = d;
    c = next_c;
    d = next_d;
  }
  return out;
}

ReducedFraction best_approximant(double x, std::int64_t q_max) {
  check_q_max(q_max);
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument("best_approximant expects x in [0, 1]");
  }
  std::int64_t best_p = 0, best_q = 1;
  double best_dist = x;
  for (std::int64_t q = 1; q <= q_max; ++q) {
    const auto lower = static_cast<std::int64_t>(std::floor(x * static_cast<double>(q)));
    for (std::int64_t p = lower; p <= lower + 1; ++p) {
      if (p < 0 || p > q || std::gcd(p, q) != 1) continue;
      const double dist = std::abs(x - static_cast<double>(p) / static_cast<double>(q));
      if (dist < best_dist) {
        best_dist = dist;
        best_p = p;
        best_q = q;
      }
    }
  }
  return {best_p, best_q};
}

ReducedFraction best_approximant(std::int64_t num, std::int64_t den, std::int64_t q_max) {
  check_q_max(q_max);
  if (den < 1 || num < 0 || num > den) {
    throw std::invalid_argument("best_approximant expects a target in [0, 1]");
  }
  __extension__ using wide = __int128;
  // |num/den - p/q| = |num*q - p*den| / (den*q); den is common to every candidate.
  std::int64_t best_p = 0, best_q = 1;
  wide best_err = num;  // distance to 0/1, scaled by den
  for (std::int64_t q = 1; q <= q_max; ++q) {
    const std::int64_t lower = static_cast<std::int64_t>((static_cast<wide>(num) * q) / den);
    for (std::int64_t p = lower; p <= lower + 1; ++p) {
      if (p > q || std::gcd(p, q) != 1) continue;
      wide err = static_cast<wide>(num) * q - static_cast<wide>(p) * den;
      if (err < 0) err = -err;
      // err/q < best_err/best_q
      if (err * best_q < best_err * q) {
        best_err = err;
        best_p = p;
        best_q = q;
      }
    }
  }
  return {best_p, best_q};
}

}  // namespace hofstadter
