#include "expander/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace expander {

namespace {

void require_nontrivial(const Graph& g) {
  if (g.num_vertices() < 2) throw InvalidInput("spectral quantities need at least two vertices");
}

// `shift` bounds the spectral radius; only the power method needs it.
EigenEstimate<double> extreme(const SparseOperator<double>& m, const Vector<double>& principal,
                              double shift, SpectrumEnd end, double residual_tol,
                              const SolverOptions& options, std::uint64_t seed) {
  if (options.method == EigenMethod::power) {
    return deflated_power_iteration<double>(m, principal, shift, end, residual_tol,
                                            options.max_iter, seed);
  }
  return deflated_lanczos<double>(m, principal, end, residual_tol, options.max_iter, seed);
}

}  // namespace

RegularSpectrum regular_spectrum(const Graph& g, const SolverOptions& options) {
  require_nontrivial(g);
  const DegreeStats st = degree_stats(g);
  if (!st.regular) throw InvalidInput("lambda(G) is defined here for regular graphs only");
  if (st.d_min == 0) throw InvalidInput("lambda(G) requires degree at least 1");

  const double d = static_cast<double>(st.d_min);
  const auto a = adjacency_matrix<double>(g);
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  const Vector<double> ones = Vector<double>::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));

  // Spectrum of A lies in [-d, d], so d I + A and d I - A are PSD.
  const auto top = extreme(a, ones, d, SpectrumEnd::top, options.tol * d, options, options.seed);
  const auto bottom =
      extreme(a, ones, d, SpectrumEnd::bottom, options.tol * d, options, options.seed + 1);
  RegularSpectrum out;
  out.degree = d;
  out.lambda_2 = top.value;
  out.lambda_n = bottom.value;
  out.lambda = std::max(std::abs(top.value), std::abs(bottom.value));
  out.residual = std::max(top.residual, bottom.residual);
  out.iterations = top.iterations + bottom.iterations;
  return out;
}

double lambda_regular(const Graph& g, double tol, std::size_t max_iter) {
  return regular_spectrum(g, {tol, max_iter, 0, EigenMethod::lanczos}).lambda;
}

NormalizedSpectrum normalized_spectrum(const Graph& g, const SolverOptions& options) {
  require_nontrivial(g);
  const auto nmat = normalized_adjacency<double>(g);
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  // f(v) = sqrt(deg v) spans the eigenvalue-1 eigenspace of a connected graph.
  Vector<double> principal(n);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    principal[v] = std::sqrt(static_cast<double>(g.degree(v)));
  }
  principal.normalize();

  const auto top = extreme(nmat, principal, 1.0, SpectrumEnd::top, options.tol, options,
                           options.seed);
  const auto bottom = extreme(nmat, principal, 1.0, SpectrumEnd::bottom, options.tol, options,
                              options.seed + 1);
  NormalizedSpectrum out;
  out.mu_2 = top.value;
  out.mu_n = bottom.value;
  out.mu = std::clamp(std::max(top.value, -bottom.value), 0.0, 1.0);
  out.residual = std::max(top.residual, bottom.residual);
  out.iterations = top.iterations + bottom.iterations;
  return out;
}

double mu_normalized(const Graph& g, double tol, std::size_t max_iter) {
  return normalized_spectrum(g, {tol, max_iter, 0, EigenMethod::lanczos}).mu;
}

bool ramanujan_check(const Graph& g, double tol, std::size_t max_iter) {
  const RegularSpectrum s = regular_spectrum(g, {tol, max_iter, 0, EigenMethod::lanczos});
  return s.lambda <= 2.0 * std::sqrt(s.degree - 1.0) + tol;
}

SpectralSummary spectral_summary(const Graph& g, const SolverOptions& options) {
  SpectralSummary out;
  out.n = g.num_vertices();
  out.m = g.num_edges();
  out.stats = degree_stats(g);
  if (out.stats.regular) {
    const RegularSpectrum s = regular_spectrum(g, options);
    const double d = s.degree;
    out.lambda = s.lambda;
    out.mu = s.lambda / d;
    out.two_sqrt_dm1 = 2.0 * std::sqrt(d - 1.0);
    out.ramanujan = s.lambda <= out.two_sqrt_dm1 + options.tol;
    out.tol_achieved = s.residual;
    out.iterations = s.iterations;
  } else {
    const NormalizedSpectrum s = normalized_spectrum(g, options);
    out.mu = s.mu;
    out.two_sqrt_dm1 = 2.0 * std::sqrt(std::max(out.stats.d_bar - 1.0, 0.0));
    out.tol_achieved = s.residual;
    out.iterations = s.iterations;
  }
  return out;
}

MixingInterval mixing_interval_regular(double size_s, double size_t_, double n, double d,
                                       double lambda) {
  if (!(n > 0) || !(size_s >= 0 && size_s <= n) || !(size_t_ >= 0 && size_t_ <= n)) {
    throw InvalidInput("set sizes must lie in [0, n] with n > 0");
  }
  if (!(d > 0)) throw InvalidInput("degree must be positive");
  if (!(lambda >= 0)) throw InvalidInput("lambda must be non-negative");
  const double center = d * size_s * size_t_ / n;
  const double spread = size_s * size_t_ * (1.0 - size_s / n) * (1.0 - size_t_ / n);
  const double radius = lambda * std::sqrt(std::max(spread, 0.0));
  return {center - radius, center + radius};
}

MixingInterval mixing_interval_nonregular(double vol_s, double vol_t, double vol_v, double mu) {
  if (!(vol_s > 0) || !(vol_t > 0)) throw InvalidInput("both sides of the partition need volume");
  if (std::abs(vol_s + vol_t - vol_v) > 1e-9 * std::max(vol_v, 1.0)) {
    throw InvalidInput("vol(S) + vol(T) must equal vol(V); the bound holds for partitions only");
  }
  if (!(mu >= 0 && mu <= 1)) throw InvalidInput("mu must lie in [0, 1]");
  const double center = vol_s * vol_t / vol_v;
  return {center * (1.0 - mu), center * (1.0 + mu)};
}

double mixing_lower_hybrid(double size_s, double size_t_, double n, double d_bar, double sigma,
                           double mu) {
  if (!(d_bar > 0)) throw InvalidInput("average degree must be positive");
  if (!(n > 0) || !(size_s >= 0) || !(size_t_ >= 0) || !(sigma >= 0)) {
    throw InvalidInput("sizes and sigma must be non-negative, n positive");
  }
  const double side_s = d_bar * size_s - sigma * std::sqrt(size_s * n);
  const double side_t = d_bar * size_t_ - sigma * std::sqrt(size_t_ * n);
  return (1.0 - mu) * side_s * side_t / (d_bar * n);
}

}  // namespace expander
