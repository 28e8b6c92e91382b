#pragma once

// Independent numerical checks on the Harper model at rational flux.
//
// The Bloch Hamiltonian on the magnetic Brillouin zone [0, 2pi/q) x [0, 2pi)
// is sampled on a regular grid. Band intervals are read off the sampled
// eigenvalues, and Chern numbers are obtained by summing the gauge-invariant
// plaquette phases of eigenvector overlaps (lattice field-strength method).

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hofstadter/rationals.hpp"
#include "hofstadter/spectrum.hpp"

namespace hofstadter {

/// Thrown when a requested band touches a neighbour.
class DegenerateBandError : public std::runtime_error {
 public:
  DegenerateBandError(const std::string& what, int band) : std::runtime_error(what), band_(band) {}
  [[nodiscard]] int band() const noexcept { return band_; }

 private:
  int band_;
};

struct BlochHamiltonian {
  ReducedFraction flux;
  double k1 = 0.0;  // [0, 2pi/q)
  double k2 = 0.0;  // [0, 2pi)
  std::size_t order = 0;
  std::vector<std::complex<double>> entries;  // row-major

  std::complex<double> operator()(std::size_t row, std::size_t col) const { return entries[row * order + col]; }
  std::complex<double>& operator()(std::size_t row, std::size_t col) { return entries[row * order + col]; }

  /// Exact check: entries(i, j) == conj(entries(j, i)).
  [[nodiscard]] bool is_hermitian() const noexcept;
};

/// diag n = 2 cos(k2 + 2 pi p n / q); unit hopping (n, n+1); the wrap bond
/// (q-1 -> 0) carries exp(i q k1).
BlochHamiltonian bloch_hamiltonian(const ReducedFraction& f, double k1, double k2);

/// Ascending eigenvalues of a Bloch Hamiltonian.
std::vector<double> hermitian_eigenvalues(const BlochHamiltonian& h);

/// [min, max] of each sorted eigenvalue branch over an n_grid x n_grid grid.
/// Requires n_grid >= 16.
std::vector<Band> spectrum_oracle(const ReducedFraction& f, int n_grid);

struct OracleChern {
  std::int64_t chern = 0;
  double raw = 0.0;       // plaquette phase sum / 2 pi
  double residual = 0.0;  // |raw - chern|
};

/// Chern number of band `band` (1-based). Throws DegenerateBandError when the
/// band touches a neighbour.
OracleChern band_chern_oracle(const ReducedFraction& f, int band, int n_grid);

/// Chern number of the multiplet of bands first..last (1-based, inclusive),
/// using determinants of the overlap matrices as link variables.
OracleChern multiplet_chern_oracle(const ReducedFraction& f, int first, int last, int n_grid);

struct BandGroup {
  int first = 0;  // 1-based, inclusive
  int last = 0;
  std::int64_t chern = 0;
  double residual = 0.0;
};

struct GapCheck {
  int index = 0;                // gap j
  bool open = true;
  std::int64_t cumulative = 0;  // sum of oracle Cherns below the gap
  std::int64_t label = 0;       // tight-binding Diophantine label
  bool match = false;
};

struct ChernReport {
  ReducedFraction flux;
  int grid = 0;
  std::vector<BandGroup> groups;  // single bands unless composite was requested
  std::vector<GapCheck> gaps;     // open gaps only are compared
  double max_residual = 0.0;
  bool passed = false;
};

/// Residual above which an oracle integer is not trusted.
inline constexpr double kOracleResidualLimit = 0.01;

/// Compares cumulative oracle Cherns with the tight-binding gap labels at
/// every open gap. Without `composite` any closed gap raises
/// DegenerateBandError; with it, bands joined by closed gaps are integrated
/// as one multiplet. Requires n_grid >= 20.
ChernReport verify_labels(const ReducedFraction& f, int n_grid, bool composite = false);

}  // namespace hofstadter
