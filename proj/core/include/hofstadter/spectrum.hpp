#pragma once

// Harper matrices at rational flux and the band structure they determine.
//
// For flux p/q the Harper operator
//   psi(n+1) + psi(n-1) + 2 cos(2 pi (p/q) n + nu) psi(n) = E psi(n)
// is q-periodic. The band edges are the eigenvalues of two q x q matrices:
// the periodic one (nu = 0) and the antiperiodic one, which must carry the
// transverse phase nu = pi/q so that both Bloch phases sit at an extremum.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hofstadter/rationals.hpp"

namespace hofstadter {

/// Dense square real matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t order) : order_(order), data_(order * order, 0.0) {}

  [[nodiscard]] std::size_t order() const noexcept { return order_; }
  double& operator()(std::size_t row, std::size_t col) { return data_[row * order_ + col]; }
  double operator()(std::size_t row, std::size_t col) const { return data_[row * order_ + col]; }

  [[nodiscard]] bool is_symmetric() const noexcept;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<double> data_;
};

enum class Boundary : int { Periodic = +1, Antiperiodic = -1 };

constexpr double sign_of(Boundary b) noexcept { return b == Boundary::Periodic ? 1.0 : -1.0; }

/// Exact fraction of a full turn: angle = 2 pi * num / den.
struct TurnFraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
  [[nodiscard]] double radians() const noexcept;
};

/// 2 cos(2 pi num/den), with the argument reduced in integer arithmetic so
/// that symmetric angles give bit-identical results and quarter turns give 0.
double two_cos_turns(std::int64_t num, std::int64_t den);

struct HarperMatrix {
  ReducedFraction flux;
  double phase = 0.0;  // nu, radians
  Boundary boundary = Boundary::Periodic;
  Matrix entries;
};

/// Diagonal n = 2 cos(2 pi p n / q + nu); unit hopping between n and n+1,
/// except the wrap bond (q-1 -> 0) which carries the boundary sign. For q = 1
/// and q = 2 the wrap bond lands on entries already occupied and is added.
HarperMatrix harper_matrix(const ReducedFraction& f, double phase, Boundary boundary);

/// Same, with the phase given exactly as a fraction of a turn.
HarperMatrix harper_matrix(const ReducedFraction& f, TurnFraction phase, Boundary boundary);

/// Eigenvalues of a real symmetric matrix in ascending order
/// (Householder tridiagonalisation followed by implicit-shift QL).
/// Throws std::invalid_argument for an empty or asymmetric matrix.
std::vector<double> symmetric_eigenvalues(const Matrix& m);

/// Eigenvalues of the symmetric tridiagonal matrix with the given diagonal and
/// sub-diagonal (off.size() == diag.size() - 1), ascending.
std::vector<double> tridiagonal_eigenvalues(std::vector<double> diag, std::vector<double> off);

/// The 2q sorted band edges at flux f.
std::vector<double> band_edges(const ReducedFraction& f);

struct Band {
  double lo = 0.0;
  double hi = 0.0;
};

struct Gap {
  int index = 0;  // 1-based, j = 1..q-1
  double lo = 0.0;
  double hi = 0.0;
  double width = 0.0;  // max(0, hi - lo)
  [[nodiscard]] bool is_open() const noexcept { return width > 0.0; }
};

struct SpectrumAtFlux {
  ReducedFraction flux;
  std::vector<double> edges;
  std::vector<Band> bands;
  std::vector<Gap> gaps;
};

/// Groups sorted edges into bands [e(2r-1), e(2r)] and gaps between them.
/// Throws std::invalid_argument on odd length or a length other than 2q.
SpectrumAtFlux bands_and_gaps(std::span<const double> edges, const ReducedFraction& f);

/// band_edges followed by bands_and_gaps.
SpectrumAtFlux spectrum_at(const ReducedFraction& f);

}  // namespace hofstadter
