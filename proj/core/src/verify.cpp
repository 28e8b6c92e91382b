#include "hofstadter/verify.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hofstadter/chern.hpp"

namespace hofstadter {

namespace {

using ComplexMatrix = Eigen::MatrixXcd;

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Minimum eigenvalue separation accepted at any grid point.
constexpr double kMinSeparation = 1e-8;
// Gap width below which two bands are treated as touching.
constexpr double kClosedGapWidth = 1e-9;

ComplexMatrix to_eigen(const BlochHamiltonian& h) {
  const auto n = static_cast<Eigen::Index>(h.order);
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = h(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
  return m;
}

double k1_at(const ReducedFraction& f, int i, int n_grid) {
  return kTwoPi * static_cast<double>(i) / (static_cast<double>(f.q()) * n_grid);
}

double k2_at(int j, int n_grid) { return kTwoPi * static_cast<double>(j) / n_grid; }

// Eigen-decomposition of the Bloch Hamiltonian at every grid point.
class BlochGrid {
 public:
  BlochGrid(const ReducedFraction& f, int n_grid) : n_(n_grid), q_(static_cast<int>(f.q())) {
    values_.reserve(static_cast<std::size_t>(n_) * n_);
    vectors_.reserve(static_cast<std::size_t>(n_) * n_);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver;
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        solver.compute(to_eigen(bloch_hamiltonian(f, k1_at(f, i, n_), k2_at(j, n_))));
        values_.push_back(solver.eigenvalues());
        vectors_.push_back(solver.eigenvectors());
      }
    }
  }

  [[nodiscard]] int size() const noexcept { return n_; }
  [[nodiscard]] int bands() const noexcept { return q_; }

  // Periodic indexing: the Hamiltonian is periodic over the zone, so the
  // decomposition at index n_ is the one at index 0.
  [[nodiscard]] const Eigen::VectorXd& values(int i, int j) const { return values_[index(i, j)]; }
  [[nodiscard]] const ComplexMatrix& vectors(int i, int j) const { return vectors_[index(i, j)]; }

  // Smallest separation between band `lower` and `lower + 1` (0-based).
  [[nodiscard]] double min_separation(int lower) const {
    double sep = std::numeric_limits<double>::infinity();
    for (const auto& v : values_) sep = std::min(sep, v(lower + 1) - v(lower));
    return sep;
  }

 private:
  [[nodiscard]] std::size_t index(int i, int j) const {
    return static_cast<std::size_t>((i % n_) * n_ + (j % n_));
  }

  int n_;
  int q_;
  std::vector<Eigen::VectorXd> values_;
  std::vector<ComplexMatrix> vectors_;
};

// Normalised U(1) link between the band subspaces at two grid points.
std::complex<double> link(const ComplexMatrix& a, const ComplexMatrix& b, int first, int count) {
  const ComplexMatrix overlap =
      a.middleCols(first, count).adjoint() * b.middleCols(first, count);
  const std::complex<double> d = count == 1 ? overlap(0, 0) : overlap.determinant();
  const double norm = std::abs(d);
  if (norm == 0.0) return {1.0, 0.0};
  return d / norm;
}

// Sum of plaquette field strengths for bands first..last (0-based, inclusive).
OracleChern integrate(const BlochGrid& grid, int first, int last) {
  const int n = grid.size();
  const int count = last - first + 1;
  // Fixed summation order: row-major over plaquettes.
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const ComplexMatrix& v00 = grid.vectors(i, j);
      const ComplexMatrix& v10 = grid.vectors(i + 1, j);
      const ComplexMatrix& v11 = grid.vectors(i + 1, j + 1);
      const ComplexMatrix& v01 = grid.vectors(i, j + 1);
      // Loop traversed k2 first, then k1. This orientation makes the lowest
      // band at flux 1/3 carry +1.
      const std::complex<double> loop = link(v00, v01, first, count) * link(v01, v11, first, count) *
                                        std::conj(link(v10, v11, first, count)) *
                                        std::conj(link(v00, v10, first, count));
      total += std::arg(loop);
    }
  }
  OracleChern out;
  out.raw = total / kTwoPi;
  out.chern = static_cast<std::int64_t>(std::llround(out.raw));
  out.residual = std::abs(out.raw - static_cast<double>(out.chern));
  return out;
}

void check_grid(int n_grid, int minimum) {
  if (n_grid < minimum) {
    throw std::invalid_argument("grid size must be >= " + std::to_string(minimum) + ", got " +
                                std::to_string(n_grid));
  }
}

// Throws DegenerateBandError if bands first..last (1-based) touch the rest of
// the spectrum, either through a closed gap or at a sampled grid point.
void require_isolated(const ReducedFraction& f, const SpectrumAtFlux& spectrum, const BlochGrid& grid,
                      int first, int last) {
  const int q = static_cast<int>(f.q());
  const auto fail = [&](int gap) {
    throw DegenerateBandError("bands " + std::to_string(first) + ".." + std::to_string(last) + " at flux " +
                                  f.to_string() + " touch across gap " + std::to_string(gap),
                              first);
  };
  for (int gap : {first - 1, last}) {
    if (gap < 1 || gap > q - 1) continue;
    if (spectrum.gaps[static_cast<std::size_t>(gap - 1)].width < kClosedGapWidth) fail(gap);
    if (grid.min_separation(gap - 1) < kMinSeparation) fail(gap);
  }
}

void check_band_range(const ReducedFraction& f, int first, int last) {
  if (first < 1 || last < first || last > f.q()) {
    throw std::invalid_argument("band range " + std::to_string(first) + ".." + std::to_string(last) +
                                " outside 1.." + std::to_string(f.q()));
  }
}

}  // namespace

bool BlochHamiltonian::is_hermitian() const noexcept {
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if ((*this)(i, j) != std::conj((*this)(j, i))) return false;
    }
  }
  return true;
}

BlochHamiltonian bloch_hamiltonian(const ReducedFraction& f, double k1, double k2) {
  const auto q = static_cast<std::size_t>(f.q());
  BlochHamiltonian h{f, k1, k2, q, std::vector<std::complex<double>>(q * q)};
  for (std::size_t n = 0; n < q; ++n) {
    const std::int64_t turns = (f.p() * static_cast<std::int64_t>(n)) % f.q();
    h(n, n) = 2.0 * std::cos(k2 + kTwoPi * static_cast<double>(turns) / static_cast<double>(f.q()));
  }
  for (std::size_t n = 0; n + 1 < q; ++n) {
    h(n, n + 1) += 1.0;
    h(n + 1, n) += 1.0;
  }
  const std::complex<double> wrap = std::polar(1.0, static_cast<double>(q) * k1);
  h(q - 1, 0) += wrap;
  h(0, q - 1) += std::conj(wrap);
  return h;
}

std::vector<double> hermitian_eigenvalues(const BlochHamiltonian& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(to_eigen(h), Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& v = solver.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

std::vector<Band> spectrum_oracle(const ReducedFraction& f, int n_grid) {
  check_grid(n_grid, 16);
  const auto q = static_cast<std::size_t>(f.q());
  std::vector<Band> bands(q, Band{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()});
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver;
  for (int i = 0; i < n_grid; ++i) {
    for (int j = 0; j < n_grid; ++j) {
      solver.compute(to_eigen(bloch_hamiltonian(f, k1_at(f, i, n_grid), k2_at(j, n_grid))),
                     Eigen::EigenvaluesOnly);
      const Eigen::VectorXd& v = solver.eigenvalues();
      for (std::size_t r = 0; r < q; ++r) {
        bands[r].lo = std::min(bands[r].lo, v(static_cast<Eigen::Index>(r)));
        bands[r].hi = std::max(bands[r].hi, v(static_cast<Eigen::Index>(r)));
      }
    }
  }
  return bands;
}

OracleChern multiplet_chern_oracle(const ReducedFraction& f, int first, int last, int n_grid) {
  check_grid(n_grid, 2);
  check_band_range(f, first, last);
  const BlochGrid grid(f, n_grid);
  require_isolated(f, spectrum_at(f), grid, first, last);
  return integrate(grid, first - 1, last - 1);
}

OracleChern band_chern_oracle(const ReducedFraction& f, int band, int n_grid) {
  return multiplet_chern_oracle(f, band, band, n_grid);
}

ChernReport verify_labels(const ReducedFraction& f, int n_grid, bool composite) {
  check_grid(n_grid, 20);
  ChernReport report;
  report.flux = f;
  report.grid = n_grid;

  const int q = static_cast<int>(f.q());
  const SpectrumAtFlux spectrum = spectrum_at(f);
  const auto labels = gap_labels(f, Regime::TightBinding);

  // Partition bands into groups separated by open gaps.
  std::vector<std::pair<int, int>> ranges;
  int start = 1;
  for (int j = 1; j < q; ++j) {
    const bool closed = spectrum.gaps[static_cast<std::size_t>(j - 1)].width < kClosedGapWidth;
    if (closed && !composite) {
      throw DegenerateBandError("gap " + std::to_string(j) + " at flux " + f.to_string() +
                                    " is closed; bands " + std::to_string(j) + " and " + std::to_string(j + 1) +
                                    " touch (use a composite multiplet)",
                                j);
    }
    if (!closed) {
      ranges.emplace_back(start, j);
      start = j + 1;
    }
  }
  ranges.emplace_back(start, q);

  const BlochGrid grid(f, n_grid);
  std::int64_t cumulative = 0;
  for (const auto& [first, last] : ranges) {
    require_isolated(f, spectrum, grid, first, last);
    const OracleChern c = integrate(grid, first - 1, last - 1);
    report.groups.push_back({first, last, c.chern, c.residual});
    report.max_residual = std::max(report.max_residual, c.residual);
    cumulative += c.chern;
    if (last < q) {
      const std::int64_t label = labels[static_cast<std::size_t>(last - 1)].sigma;
      report.gaps.push_back({last, true, cumulative, label, cumulative == label});
    }
  }

  report.passed = report.max_residual < kOracleResidualLimit &&
                  std::all_of(report.gaps.begin(), report.gaps.end(), [](const GapCheck& g) { return g.match; });
  return report;
}

}  // namespace hofstadter
