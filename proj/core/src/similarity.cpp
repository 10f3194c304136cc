#include "gsog/similarity.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

namespace gsog {

namespace {

const double kTwoPiPow32 = std::pow(2.0 * std::numbers::pi, 1.5);

}  // namespace

GaussianPairTerm pairSimilarity(const AnisotropicGaussian& gi,
                                const IsotropicGaussian& gj) {
  const Eigen::Matrix3d& p = gi.precision();
  const double m = 1.0 / gj.variance();
  const Eigen::Vector3d& mu_i = gi.mean();
  const Eigen::Vector3d& mu_j = gj.mean();

  // B = P + mI, factored as B = R^T R with R upper triangular.
  const double b00 = p(0, 0) + m, b11 = p(1, 1) + m, b22 = p(2, 2) + m;
  const double b01 = p(0, 1), b02 = p(0, 2), b12 = p(1, 2);

  GaussianPairTerm t;
  if (!(b00 > 0.0)) throw std::domain_error("pairSimilarity: factorization failed");
  t.q11 = std::sqrt(b00);
  t.q12 = b01 / t.q11;
  t.q13 = b02 / t.q11;
  const double d22 = b11 - t.q12 * t.q12;
  if (!(d22 > 0.0)) throw std::domain_error("pairSimilarity: factorization failed");
  t.q22 = std::sqrt(d22);
  t.q23 = (b12 - t.q12 * t.q13) / t.q22;
  const double d33 = b22 - t.q13 * t.q13 - t.q23 * t.q23;
  if (!(d33 > 0.0)) throw std::domain_error("pairSimilarity: factorization failed");
  t.q33 = std::sqrt(d33);

  // h = P mu_i + m mu_j; forward-substitute R^T s = h.
  const Eigen::Vector3d h = p * mu_i + m * mu_j;
  t.q14 = h[0] / t.q11;
  t.q24 = (h[1] - t.q12 * t.q14) / t.q22;
  t.q34 = (h[2] - t.q13 * t.q14 - t.q23 * t.q24) / t.q33;

  t.K = mu_i.dot(p * mu_i) + m * mu_j.squaredNorm();
  t.Lterm = t.q14 * t.q14 + t.q24 * t.q24 + t.q34 * t.q34;

  t.value = gi.weight() * gj.weight() * kTwoPiPow32 / (t.q11 * t.q22 * t.q33) *
            std::exp(-0.5 * (t.K - t.Lterm));
  return t;
}

namespace {

// Translation-invariant form of K - L; used for pruning decisions only.
double pairExponent(const AnisotropicGaussian& gi, const IsotropicGaussian& gj) {
  const Eigen::Vector3d d = gi.mean() - gj.mean();
  const double m = 1.0 / gj.variance();
  const Eigen::Matrix3d b = gi.precision() + m * Eigen::Matrix3d::Identity();
  return -d.dot(m * b.ldlt().solve(gi.precision() * d));
}

double rowSum(const AnisotropicGaussian& gi, const SoG& data,
              const SimilarityOptions& options, Eigen::MatrixXd* terms, int row) {
  double sum = 0.0;
  for (std::size_t j = 0; j < data.size(); ++j) {
    const IsotropicGaussian& gj = data.components()[j];
    if (options.prune_far_pairs && pairExponent(gi, gj) < options.prune_exponent) {
      if (terms) (*terms)(row, static_cast<Eigen::Index>(j)) = 0.0;
      continue;
    }
    const double e = pairSimilarity(gi, gj).value;
    if (terms) (*terms)(row, static_cast<Eigen::Index>(j)) = e;
    sum += e;
  }
  return sum;
}

}  // namespace

SimilarityValue modelSimilarity(const GSoG& model, const SoG& data,
                                const SimilarityOptions& options,
                                bool retain_pair_terms) {
  const int rows = static_cast<int>(model.size());
  SimilarityValue result;
  Eigen::MatrixXd terms;
  Eigen::MatrixXd* terms_ptr = nullptr;
  if (retain_pair_terms) {
    terms.resize(rows, static_cast<Eigen::Index>(data.size()));
    terms_ptr = &terms;
  }

  const int threads = std::min(std::max(options.threads, 1), rows);
  if (threads <= 1) {
    double sum = 0.0;
    for (int i = 0; i < rows; ++i)
      sum += rowSum(model.components()[static_cast<std::size_t>(i)], data, options,
                    terms_ptr, i);
    result.E = sum;
  } else {
    // Per-thread partials over contiguous row blocks, combined in block order,
    // so the result is deterministic for a fixed thread count.
    std::vector<double> partial(static_cast<std::size_t>(threads), 0.0);
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        const int begin = rows * w / threads;
        const int end = rows * (w + 1) / threads;
        double sum = 0.0;
        for (int i = begin; i < end; ++i)
          sum += rowSum(model.components()[static_cast<std::size_t>(i)], data, options,
                        terms_ptr, i);
        partial[static_cast<std::size_t>(w)] = sum;
      });
    }
    for (auto& t : workers) t.join();
    double sum = 0.0;
    for (double s : partial) sum += s;
    result.E = sum;
  }

  if (retain_pair_terms) result.pair_terms = std::move(terms);
  return result;
}

SimilarityValue modelSimilarity(const PosedModel& posed, const SoG& data,
                                const SimilarityOptions& options,
                                bool retain_pair_terms) {
  return modelSimilarity(posed.gaussians, data, options, retain_pair_terms);
}

}  // namespace gsog
