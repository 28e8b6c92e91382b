#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "hofstadter/chern.hpp"
#include "hofstadter/spectrum.hpp"
#include "hofstadter/verify.hpp"
#include "support/oracles.hpp"

namespace hofstadter {
namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);

TEST(BlochHamiltonian, ReducesToHarperMatrices) {
  for (const ReducedFraction f : {ReducedFraction(1, 2), ReducedFraction(1, 3), ReducedFraction(3, 7)}) {
    const auto q = static_cast<std::size_t>(f.q());
    const double nu = 0.3;
    const auto periodic = harper_matrix(f, nu, Boundary::Periodic);
    const auto bloch0 = bloch_hamiltonian(f, 0.0, nu);
    const auto anti = harper_matrix(f, nu, Boundary::Antiperiodic);
    const auto bloch_pi = bloch_hamiltonian(f, std::numbers::pi / static_cast<double>(f.q()), nu);
    for (std::size_t i = 0; i < q; ++i) {
      for (std::size_t j = 0; j < q; ++j) {
        EXPECT_NEAR(std::abs(bloch0(i, j) - periodic.entries(i, j)), 0.0, 1e-14);
        EXPECT_NEAR(std::abs(bloch_pi(i, j) - anti.entries(i, j)), 0.0, 1e-14);
      }
    }
  }
}

TEST(BlochHamiltonian, OneThirdCubic) {
  // At k1 = k2 = pi/3 the characteristic polynomial is E^3 - 6E + 4.
  const auto h = bloch_hamiltonian(ReducedFraction(1, 3), std::numbers::pi / 3, std::numbers::pi / 3);
  const auto ev = hermitian_eigenvalues(h);
  const auto want = oracle::harper_cubic_roots(4.0);
  ASSERT_EQ(ev.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(ev[i], want[i], 1e-12);
  EXPECT_NEAR(ev[0], -1 - kSqrt3, 1e-12);
  EXPECT_NEAR(ev[1], -1 + kSqrt3, 1e-12);
  EXPECT_NEAR(ev[2], 2.0, 1e-12);
}

TEST(BlochHamiltonian, UnitFluxScalar) {
  for (double k1 : {0.0, 0.4, 2.0}) {
    for (double k2 : {0.0, 1.1, 5.0}) {
      const auto h = bloch_hamiltonian(ReducedFraction(1, 1), k1, k2);
      ASSERT_EQ(h.order, 1u);
      EXPECT_NEAR(h(0, 0).real(), 2 * std::cos(k2) + 2 * std::cos(k1), 1e-14);
      EXPECT_EQ(h(0, 0).imag(), 0.0);
    }
  }
}

TEST(BlochHamiltonian, AlwaysExactlyHermitian) {
  for (std::int64_t q = 1; q <= 12; ++q) {
    for (std::int64_t p = 0; p <= q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      for (double k1 : {0.0, 0.123, 1.7}) {
        EXPECT_TRUE(bloch_hamiltonian(ReducedFraction(p, q), k1, 2.9).is_hermitian());
      }
    }
  }
}

TEST(SpectrumOracle, ClosedForms) {
  const auto one = spectrum_oracle(ReducedFraction(1, 1), 512);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_LT(std::abs(one[0].lo + 4.0), 1e-3);
  EXPECT_LT(std::abs(one[0].hi - 4.0), 1e-3);

  const auto half = spectrum_oracle(ReducedFraction(1, 2), 512);
  ASSERT_EQ(half.size(), 2u);
  EXPECT_NEAR(half[0].lo, -2 * kSqrt2, 1e-3);
  EXPECT_NEAR(half[0].hi, 0.0, 1e-3);
  EXPECT_NEAR(half[1].lo, 0.0, 1e-3);
  EXPECT_NEAR(half[1].hi, 2 * kSqrt2, 1e-3);

  const auto third = spectrum_oracle(ReducedFraction(1, 3), 512);
  const auto edges = band_edges(ReducedFraction(1, 3));
  for (std::size_t r = 0; r < 3; ++r) {
    EXPECT_NEAR(third[r].lo, edges[2 * r], 1e-3);
    EXPECT_NEAR(third[r].hi, edges[2 * r + 1], 1e-3);
  }
  EXPECT_THROW(spectrum_oracle(ReducedFraction(1, 3), 8), std::invalid_argument);
}

TEST(SpectrumOracle, BandEdgesMatchDenseGrid) {
  const int n = 512;
  const double tol = 5.0 * std::pow(2.0 * std::numbers::pi / n, 2);
  for (const ReducedFraction f : {ReducedFraction(1, 1), ReducedFraction(1, 2), ReducedFraction(1, 3),
                                  ReducedFraction(1, 4), ReducedFraction(2, 5), ReducedFraction(3, 7),
                                  ReducedFraction(3, 8)}) {
    const auto grid = spectrum_oracle(f, n);
    const auto s = spectrum_at(f);
    for (std::size_t r = 0; r < grid.size(); ++r) {
      EXPECT_NEAR(grid[r].lo, s.bands[r].lo, tol) << f << " band " << r + 1;
      EXPECT_NEAR(grid[r].hi, s.bands[r].hi, tol) << f << " band " << r + 1;
      EXPECT_GE(grid[r].lo, s.bands[r].lo - 1e-9);
      EXPECT_LE(grid[r].hi, s.bands[r].hi + 1e-9);
    }
  }
}

double hausdorff(const std::vector<Band>& grid, const SpectrumAtFlux& s) {
  double d = 0.0;
  for (std::size_t r = 0; r < grid.size(); ++r) {
    d = std::max({d, std::abs(grid[r].lo - s.bands[r].lo), std::abs(grid[r].hi - s.bands[r].hi)});
  }
  return d;
}

TEST(SpectrumOracle, ConvergesQuadratically) {
  // Grids that miss the band extrema, so the error is a sampling error and
  // not round-off. Distances are floored at 1e-12 for round-off.
  for (const ReducedFraction f : {ReducedFraction(1, 3), ReducedFraction(2, 5), ReducedFraction(1, 4)}) {
    const auto s = spectrum_at(f);
    const double coarse = std::max(hausdorff(spectrum_oracle(f, 512), s), 1e-12);
    const double fine = std::max(hausdorff(spectrum_oracle(f, 1024), s), 1e-12);
    EXPECT_LE(coarse, 4.0 * fine + 1e-12) << f << " d512=" << coarse << " d1024=" << fine;
  }
}

TEST(BandChernOracle, OneThird) {
  const ReducedFraction f(1, 3);
  const auto c1 = band_chern_oracle(f, 1, 30);
  EXPECT_EQ(c1.chern, 1);
  EXPECT_LT(c1.residual, 1e-3);
  std::vector<std::int64_t> all;
  for (int r = 1; r <= 3; ++r) all.push_back(band_chern_oracle(f, r, 30).chern);
  EXPECT_EQ(all, (std::vector<std::int64_t>{1, -2, 1}));
}

TEST(BandChernOracle, RefusesTouchingBands) {
  EXPECT_THROW(band_chern_oracle(ReducedFraction(1, 2), 1, 30), DegenerateBandError);
  EXPECT_THROW(band_chern_oracle(ReducedFraction(1, 4), 2, 30), DegenerateBandError);
  // The touching pair as a multiplet is fine: bands 2-3 of 1/4 carry -2.
  EXPECT_EQ(multiplet_chern_oracle(ReducedFraction(1, 4), 2, 3, 30).chern, -2);
  EXPECT_EQ(multiplet_chern_oracle(ReducedFraction(1, 2), 1, 2, 30).chern, 0);
  EXPECT_THROW(band_chern_oracle(ReducedFraction(1, 3), 4, 30), std::invalid_argument);
}

TEST(BandChernOracle, MatchesDiophantineBandCherns) {
  for (std::int64_t q : {3, 5, 7}) {
    for (std::int64_t p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const ReducedFraction f(p, q);
      const auto want = band_cherns(gap_labels(f, Regime::TightBinding), f, Regime::TightBinding);
      std::int64_t total = 0;
      for (int r = 1; r <= q; ++r) {
        const auto c = band_chern_oracle(f, r, 30);
        EXPECT_EQ(c.chern, want[static_cast<std::size_t>(r - 1)]) << f << " band " << r;
        total += c.chern;
      }
      EXPECT_EQ(total, 0);
    }
  }
}

TEST(BandChernOracle, GridStable) {
  for (std::int64_t q = 1; q <= 7; q += 2) {
    for (std::int64_t p = 1; p <= q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const ReducedFraction f(p, q);
      for (int r = 1; r <= q; ++r) {
        const auto a = band_chern_oracle(f, r, 24);
        const auto b = band_chern_oracle(f, r, 48);
        ASSERT_LT(a.residual, kOracleResidualLimit);
        ASSERT_LT(b.residual, kOracleResidualLimit);
        EXPECT_EQ(a.chern, b.chern) << f << " band " << r;
      }
    }
  }
}

TEST(VerifyLabels, Examples) {
  const auto third = verify_labels(ReducedFraction(1, 3), 30);
  EXPECT_TRUE(third.passed);
  ASSERT_EQ(third.gaps.size(), 2u);
  EXPECT_EQ(third.gaps[0].cumulative, 1);
  EXPECT_EQ(third.gaps[1].cumulative, -1);

  const auto two_fifths = verify_labels(ReducedFraction(2, 5), 30);
  EXPECT_TRUE(two_fifths.passed);
  std::vector<std::int64_t> cumulative;
  for (const auto& g : two_fifths.gaps) cumulative.push_back(g.cumulative);
  EXPECT_EQ(cumulative, (std::vector<std::int64_t>{-2, 1, -1, 2}));

  const auto one = verify_labels(ReducedFraction(1, 1), 30);
  EXPECT_TRUE(one.passed);
  EXPECT_TRUE(one.gaps.empty());
}

TEST(VerifyLabels, ClosedGapsNeedCompositeMode) {
  EXPECT_THROW(verify_labels(ReducedFraction(1, 2), 30), DegenerateBandError);
  const auto report = verify_labels(ReducedFraction(3, 8), 30, true);
  EXPECT_TRUE(report.passed);
  EXPECT_EQ(report.gaps.size(), 6u);
  EXPECT_THROW(verify_labels(ReducedFraction(1, 3), 10), std::invalid_argument);
}

}  // namespace
}  // namespace hofstadter
