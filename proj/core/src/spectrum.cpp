#include "hofstadter/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hofstadter {

double TurnFraction::radians() const noexcept {
  return 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
}

double two_cos_turns(std::int64_t num, std::int64_t den) {
  if (den < 1) throw std::invalid_argument("two_cos_turns: denominator must be >= 1");
  // Work in units of 1/(4 den) of a turn so every fold below stays integral.
  const std::int64_t full = 4 * den;
  std::int64_t a = (4 * (num % den)) % full;
  if (a < 0) a += full;
  a = std::min(a, full - a);  // cos(-x) = cos(x): now a in [0, 2 den]
  double sign = 1.0;
  if (a > den) {  // cos(pi - x) = -cos(x)
    a = 2 * den - a;
    sign = -1.0;
  }
  // a in [0, den], i.e. the angle lies in [0, pi/2].
  const double quarter = std::numbers::pi / 2.0 / static_cast<double>(den);
  double value;
  if (2 * a > den) {
    value = std::sin(quarter * static_cast<double>(den - a));
  } else {
    value = std::cos(quarter * static_cast<double>(a));
  }
  return 2.0 * sign * value;
}

namespace {

void add_hopping(Matrix& m, std::size_t q, double wrap_sign) {
  if (q == 1) {
    // The wrap bond couples the single site to itself from both sides.
    m(0, 0) += 2.0 * wrap_sign;
    return;
  }
  for (std::size_t n = 0; n + 1 < q; ++n) {
    m(n, n + 1) += 1.0;
    m(n + 1, n) += 1.0;
  }
  m(q - 1, 0) += wrap_sign;
  m(0, q - 1) += wrap_sign;
}

}  // namespace

HarperMatrix harper_matrix(const ReducedFraction& f, double phase, Boundary boundary) {
  const auto q = static_cast<std::size_t>(f.q());
  HarperMatrix h{f, phase, boundary, Matrix(q)};
  for (std::size_t n = 0; n < q; ++n) {
    // (p n mod q) keeps the diagonal identical for p and p + q.
    const std::int64_t turns = (f.p() * static_cast<std::int64_t>(n)) % f.q();
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(turns) / static_cast<double>(f.q());
    h.entries(n, n) = 2.0 * std::cos(angle + phase);
  }
  add_hopping(h.entries, q, sign_of(boundary));
  return h;
}

HarperMatrix harper_matrix(const ReducedFraction& f, TurnFraction phase, Boundary boundary) {
  if (phase.den < 1) throw std::invalid_argument("harper_matrix: phase denominator must be >= 1");
  const auto q = static_cast<std::size_t>(f.q());
  HarperMatrix h{f, phase.radians(), boundary, Matrix(q)};
  // p n / q + num / den = (p n den + num q) / (q den), reduced modulo one turn.
  const std::int64_t den = f.q() * phase.den;
  const std::int64_t offset = (phase.num % phase.den) * f.q();
  for (std::size_t n = 0; n < q; ++n) {
    const std::int64_t pn = (f.p() * static_cast<std::int64_t>(n)) % f.q();
    h.entries(n, n) = two_cos_turns((pn * phase.den + offset) % den, den);
  }
  add_hopping(h.entries, q, sign_of(boundary));
  return h;
}

std::vector<double> band_edges(const ReducedFraction& f) {
  // Periodic: nu = 0. Antiperiodic: nu = pi/q, i.e. 1/(2q) of a turn.
  const auto periodic = harper_matrix(f, TurnFraction{0, 1}, Boundary::Periodic);
  const auto antiperiodic = harper_matrix(f, TurnFraction{1, 2 * f.q()}, Boundary::Antiperiodic);
  std::vector<double> edges = symmetric_eigenvalues(periodic.entries);
  const std::vector<double> other = symmetric_eigenvalues(antiperiodic.entries);
  edges.insert(edges.end(), other.begin(), other.end());
  std::sort(edges.begin(), edges.end());
  return edges;
}

SpectrumAtFlux bands_and_gaps(std::span<const double> edges, const ReducedFraction& f) {
  if (edges.size() % 2 != 0) {
    throw std::invalid_argument("bands_and_gaps: odd number of edges (" + std::to_string(edges.size()) + ")");
  }
  if (edges.size() != 2 * static_cast<std::size_t>(f.q())) {
    throw std::invalid_argument("bands_and_gaps: expected 2q edges for " + f.to_string());
  }
  if (!std::is_sorted(edges.begin(), edges.end())) {
    throw std::invalid_argument("bands_and_gaps: edges must be sorted");
  }
  SpectrumAtFlux s;
  s.flux = f;
  s.edges.assign(edges.begin(), edges.end());
  const std::size_t q = edges.size() / 2;
  s.bands.reserve(q);
  for (std::size_t r = 0; r < q; ++r) s.bands.push_back({edges[2 * r], edges[2 * r + 1]});
  s.gaps.reserve(q > 0 ? q - 1 : 0);
  for (std::size_t j = 1; j < q; ++j) {
    const double lo = edges[2 * j - 1];
    const double hi = edges[2 * j];
    s.gaps.push_back({static_cast<int>(j), lo, hi, std::max(0.0, hi - lo)});
  }
  return s;
}

SpectrumAtFlux spectrum_at(const ReducedFraction& f) {
  const auto edges = band_edges(f);
  return bands_and_gaps(edges, f);
}

}  // namespace hofstadter
