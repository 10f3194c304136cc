#ifndef GSOG_SIMILARITY_HPP
#define GSOG_SIMILARITY_HPP

#include <optional>

#include <Eigen/Core>

#include "gsog/gaussian.hpp"
#include "gsog/kinematics.hpp"

namespace gsog {

/// Closed-form overlap of one anisotropic and one isotropic Gaussian, together
/// with the completed-square intermediates it was computed from.
///
/// With P the anisotropic precision, m = 1/variance of the isotropic side and
/// B = P + mI, the combined exponent x^T B x - 2 h^T x + K (h = P*mu_i + m*mu_j,
/// K = mu_i^T P mu_i + m |mu_j|^2) factors through the Cholesky decomposition
/// B = R^T R into |R x - s|^2 + K - |s|^2 with R^T s = h. The q fields are the
/// entries of R and s, so that
///   value = w_i w_j (2pi)^{3/2} / (q11 q22 q33) * exp(-(K - L)/2),  L = |s|^2.
struct GaussianPairTerm {
  double value = 0.0;
  double q11 = 0.0, q22 = 0.0, q33 = 0.0;  // Cholesky diagonal of B (all > 0)
  double q12 = 0.0, q13 = 0.0, q23 = 0.0;  // Cholesky off-diagonal of B
  double q14 = 0.0, q24 = 0.0, q34 = 0.0;  // completed-square offsets s
  double K = 0.0;
  double Lterm = 0.0;
};

/// Similarity E between a template and a data model, optionally retaining the
/// per-pair matrix (template rows, data columns) for reuse.
struct SimilarityValue {
  double E = 0.0;
  std::optional<Eigen::MatrixXd> pair_terms;
};

struct SimilarityOptions {
  /// Skip pairs whose (negative) exponent falls below this threshold.
  /// Disabled by default: the double sum is computed in full.
  bool prune_far_pairs = false;
  double prune_exponent = -40.0;
  /// Worker threads for the pair sum. 1 keeps accumulation bit-reproducible.
  int threads = 1;
};

/// Exact closed-form integral over R^3 of the product of the two Gaussians.
/// Throws std::domain_error if the combined precision fails to factorize.
GaussianPairTerm pairSimilarity(const AnisotropicGaussian& gi, const IsotropicGaussian& gj);

/// Double sum of pairSimilarity over all (template, data) component pairs,
/// accumulated template-major.
SimilarityValue modelSimilarity(const GSoG& model, const SoG& data,
                                const SimilarityOptions& options = {},
                                bool retain_pair_terms = false);
SimilarityValue modelSimilarity(const PosedModel& posed, const SoG& data,
                                const SimilarityOptions& options = {},
                                bool retain_pair_terms = false);

}  // namespace gsog

#endif  // GSOG_SIMILARITY_HPP
