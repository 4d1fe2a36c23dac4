#pragma once

#include <Eigen/Core>
#include <Eigen/Eigenvalues>
#include <Eigen/SparseCore>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "expander/error.hpp"
#include "expander/graph.hpp"

namespace expander {

template <typename Scalar>
using SparseOperator = Eigen::SparseMatrix<Scalar, Eigen::RowMajor, std::int64_t>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Adjacency matrix A of g.
template <typename Scalar = double>
SparseOperator<Scalar> adjacency_matrix(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  std::vector<Eigen::Triplet<Scalar, std::int64_t>> entries;
  entries.reserve(g.adjacency().size());
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v : g.neighbors(u)) entries.emplace_back(u, v, Scalar(1));
  }
  SparseOperator<Scalar> a(n, n);
  a.setFromTriplets(entries.begin(), entries.end());
  return a;
}

/// Normalized adjacency N = D^{-1/2} A D^{-1/2}. Throws InvalidInput on an
/// isolated vertex (D would be singular).
template <typename Scalar = double>
SparseOperator<Scalar> normalized_adjacency(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  Vector<Scalar> inv_sqrt(n);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) {
      throw InvalidInput("normalized adjacency undefined: vertex " + std::to_string(v) +
                         " is isolated");
    }
    inv_sqrt[v] = Scalar(1) / std::sqrt(static_cast<Scalar>(g.degree(v)));
  }
  std::vector<Eigen::Triplet<Scalar, std::int64_t>> entries;
  entries.reserve(g.adjacency().size());
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v : g.neighbors(u)) entries.emplace_back(u, v, inv_sqrt[u] * inv_sqrt[v]);
  }
  SparseOperator<Scalar> a(n, n);
  a.setFromTriplets(entries.begin(), entries.end());
  return a;
}

/// Deterministic start vector: entries in [-1, 1) from a splitmix64 hash of
/// (index, seed).
template <typename Scalar = double>
Vector<Scalar> hashed_start_vector(Eigen::Index n, std::uint64_t seed) {
  Vector<Scalar> x(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    std::uint64_t z = static_cast<std::uint64_t>(i) + seed * 0x9E3779B97F4A7C15ULL;
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z ^= z >> 31;
    x[i] = static_cast<Scalar>(static_cast<double>(z >> 11) * 0x1.0p-52 - 1.0);
  }
  return x;
}

template <typename Scalar>
struct EigenEstimate {
  Scalar value{};
  Scalar residual{};
  std::size_t iterations = 0;
};

enum class SpectrumEnd { top, bottom };

/// Extreme eigenvalue of the symmetric operator m on the orthogonal
/// complement of the unit vector `principal`, by power iteration on
/// shift*I + m (top end) or shift*I - m (bottom end). `shift` must bound the
/// spectral radius of m so the shifted operator is positive semidefinite.
///
/// Returns the Rayleigh quotient theta of m at the final iterate x, which
/// satisfies ||m x - theta x|| <= residual_tol. Throws ConvergenceError after
/// max_iter iterations.
template <typename Scalar>
EigenEstimate<Scalar> deflated_power_iteration(const SparseOperator<Scalar>& m,
                                               const Vector<Scalar>& principal, Scalar shift,
                                               SpectrumEnd end, Scalar residual_tol,
                                               std::size_t max_iter, std::uint64_t seed = 0) {
  const Eigen::Index n = m.rows();
  if (n < 2) throw InvalidInput("a nontrivial eigenvalue needs at least two vertices");
  const Scalar sign = end == SpectrumEnd::top ? Scalar(1) : Scalar(-1);

  Vector<Scalar> x = hashed_start_vector<Scalar>(n, seed);
  x -= principal.dot(x) * principal;
  x.normalize();
  Vector<Scalar> y(n);

  EigenEstimate<Scalar> est;
  Scalar previous = std::numeric_limits<Scalar>::quiet_NaN();
  for (std::size_t it = 1; it <= max_iter; ++it) {
    y.noalias() = m * x;
    const Scalar theta = x.dot(y);
    est.value = theta;
    est.residual = (y - theta * x).norm();
    est.iterations = it;
    if (est.residual <= residual_tol) return est;
    previous = theta;
    // x <- (shift I + sign m) x, re-projected every step to suppress drift
    // back into the principal direction.
    x = sign * y + shift * x;
    x -= principal.dot(x) * principal;
    const Scalar norm = x.norm();
    if (norm == Scalar(0)) {
      // x fell into the kernel of the shifted operator; restart elsewhere.
      x = hashed_start_vector<Scalar>(n, seed + it);
      x -= principal.dot(x) * principal;
    }
    x.normalize();
  }
  throw ConvergenceError(std::string("power iteration did not converge on the ") +
                             (end == SpectrumEnd::top ? "top" : "bottom") +
                             " of the spectrum; last Rayleigh quotient " +
                             std::to_string(static_cast<double>(est.value)) + ", previous " +
                             std::to_string(static_cast<double>(previous)),
                         static_cast<double>(est.residual), est.iterations);
}

/// Extreme eigenvalue of the symmetric operator m on the orthogonal
/// complement of the unit vector `principal`, by explicitly restarted Lanczos
/// with full reorthogonalization. Each cycle builds an orthonormal Krylov
/// basis of up to `basis_size` vectors, takes the extreme Ritz pair, and
/// restarts from its Ritz vector.
///
/// The returned value is the Rayleigh quotient theta at the final Ritz vector
/// x, with ||m x - theta x|| <= residual_tol checked explicitly. Iterations
/// count matrix-vector products; exceeding max_iter throws ConvergenceError.
template <typename Scalar>
EigenEstimate<Scalar> deflated_lanczos(const SparseOperator<Scalar>& m,
                                       const Vector<Scalar>& principal, SpectrumEnd end,
                                       Scalar residual_tol, std::size_t max_iter,
                                       std::uint64_t seed = 0, Eigen::Index basis_size = 64) {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index n = m.rows();
  if (n < 2) throw InvalidInput("a nontrivial eigenvalue needs at least two vertices");
  const Eigen::Index width = std::max<Eigen::Index>(2, std::min(basis_size, n));

  const auto deflate = [&principal](Vector<Scalar>& v) { v -= principal.dot(v) * principal; };

  Vector<Scalar> x = hashed_start_vector<Scalar>(n, seed);
  deflate(x);
  x.normalize();

  Matrix basis(n, width);
  Vector<Scalar> w(n);
  Vector<Scalar> alpha(width);
  Vector<Scalar> beta(width);
  EigenEstimate<Scalar> est;
  std::size_t products = 0;

  for (;;) {
    basis.col(0) = x;
    Eigen::Index size = 0;
    Scalar scale = 0;
    for (Eigen::Index j = 0; j < width; ++j) {
      w.noalias() = m * basis.col(j);
      ++products;
      alpha[j] = basis.col(j).dot(w);
      size = j + 1;
      scale = std::max(scale, std::abs(alpha[j]));
      // Two passes of classical Gram-Schmidt against the basis and the
      // principal vector keep the basis orthonormal to working precision.
      for (int pass = 0; pass < 2; ++pass) {
        w.noalias() -= basis.leftCols(size) * (basis.leftCols(size).transpose() * w);
        deflate(w);
      }
      beta[j] = w.norm();
      scale = std::max(scale, beta[j]);
      if (j + 1 == width || beta[j] <= Scalar(1e-12) * std::max(scale, Scalar(1))) break;
      basis.col(j + 1) = w / beta[j];
    }

    Eigen::SelfAdjointEigenSolver<Matrix> tri;
    tri.computeFromTridiagonal(alpha.head(size), beta.head(std::max<Eigen::Index>(size - 1, 0)),
                               Eigen::ComputeEigenvectors);
    const Eigen::Index pick = end == SpectrumEnd::top ? size - 1 : 0;
    x.noalias() = basis.leftCols(size) * tri.eigenvectors().col(pick);
    deflate(x);
    x.normalize();

    w.noalias() = m * x;
    ++products;
    est.value = x.dot(w);
    est.residual = (w - est.value * x).norm();
    est.iterations = products;
    if (est.residual <= residual_tol) return est;
    if (products >= max_iter) {
      throw ConvergenceError(std::string("Lanczos did not converge on the ") +
                                 (end == SpectrumEnd::top ? "top" : "bottom") +
                                 " of the spectrum; last Ritz value " +
                                 std::to_string(static_cast<double>(est.value)),
                             static_cast<double>(est.residual), est.iterations);
    }
  }
}

enum class EigenMethod { lanczos, power };

struct SolverOptions {
  double tol = 1e-6;
  std::size_t max_iter = 100000;
  std::uint64_t seed = 0;
  EigenMethod method = EigenMethod::lanczos;
};

/// Nontrivial extreme eigenvalues of a regular graph's adjacency matrix.
struct RegularSpectrum {
  double degree = 0.0;
  double lambda_2 = 0.0;
  double lambda_n = 0.0;
  double lambda = 0.0;  // max(|lambda_2|, |lambda_n|)
  double residual = 0.0;
  std::size_t iterations = 0;
};

/// Nontrivial extreme eigenvalues of the normalized adjacency matrix.
struct NormalizedSpectrum {
  double mu_2 = 0.0;
  double mu_n = 0.0;
  double mu = 0.0;  // max(mu_2, -mu_n)
  double residual = 0.0;
  std::size_t iterations = 0;
};

/// Requires a regular graph of degree >= 1 with at least two vertices.
/// Each end of the spectrum is certified by ||Ax - theta x|| <= tol * d.
RegularSpectrum regular_spectrum(const Graph& g, const SolverOptions& options = {});
double lambda_regular(const Graph& g, double tol = 1e-6, std::size_t max_iter = 100000);

/// Requires no isolated vertices. Each end is certified by
/// ||Nx - theta x|| <= tol.
NormalizedSpectrum normalized_spectrum(const Graph& g, const SolverOptions& options = {});
double mu_normalized(const Graph& g, double tol = 1e-6, std::size_t max_iter = 100000);

/// lambda(G) <= 2 sqrt(d - 1) + tol.
bool ramanujan_check(const Graph& g, double tol = 1e-6, std::size_t max_iter = 100000);

struct SpectralSummary {
  std::size_t n = 0;
  std::size_t m = 0;
  DegreeStats stats;
  std::optional<double> lambda;  // regular graphs only
  double mu = 0.0;
  double two_sqrt_dm1 = 0.0;      // 2 sqrt(d - 1), with d = average degree if irregular
  std::optional<bool> ramanujan;  // regular graphs only
  double tol_achieved = 0.0;
  std::size_t iterations = 0;
};

/// For regular graphs mu is reported as lambda / d (N = A / d exactly).
SpectralSummary spectral_summary(const Graph& g, const SolverOptions& options = {});

struct MixingInterval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Expander mixing interval for e(S, T) in a d-regular graph:
/// d|S||T|/n -+ lambda sqrt(|S||T|(1 - |S|/n)(1 - |T|/n)).
MixingInterval mixing_interval_regular(double size_s, double size_t_, double n, double d,
                                       double lambda);

/// Interval for e(S, T) when (S, T) partitions V: c(1 -+ mu) with
/// c = vol(S) vol(T) / vol(V). Only valid for partitions; requires
/// vol(S) + vol(T) = vol(V) and both volumes positive.
MixingInterval mixing_interval_nonregular(double vol_s, double vol_t, double vol_v, double mu);

/// Degree-variance lower bound on e(S, T) for a partition (S, T):
/// (1 - mu)(d_bar|S| - sigma sqrt(|S|n))(d_bar|T| - sigma sqrt(|T|n)) / (d_bar n).
/// Returned unclamped; it can be negative.
double mixing_lower_hybrid(double size_s, double size_t_, double n, double d_bar, double sigma,
                           double mu);

}  // namespace expander
