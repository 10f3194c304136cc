#include "gsog/gaussian.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include <Eigen/Geometry>

namespace gsog {

namespace {

// Sylvester's criterion for a symmetric 3x3 matrix.
bool isPositiveDefinite(const Eigen::Matrix3d& m) {
  const double d1 = m(0, 0);
  const double d2 = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  const double d3 = m.determinant();
  return d1 > 0.0 && d2 > 0.0 && d3 > 0.0 && m.allFinite();
}

Eigen::Matrix3d mirrorUpper(const Eigen::Matrix3d& m) {
  Eigen::Matrix3d s = m;
  s(1, 0) = s(0, 1);
  s(2, 0) = s(0, 2);
  s(2, 1) = s(1, 2);
  return s;
}

}  // namespace

IsotropicGaussian::IsotropicGaussian(const Eigen::Vector3d& mean, double variance,
                                     double weight)
    : mean_(mean), variance_(variance), weight_(weight) {
  if (!(variance > 0.0) || !std::isfinite(variance))
    throw std::domain_error("IsotropicGaussian: variance must be positive");
  if (!(weight > 0.0) || !std::isfinite(weight))
    throw std::domain_error("IsotropicGaussian: weight must be positive");
  if (!mean.allFinite())
    throw std::domain_error("IsotropicGaussian: mean must be finite");
}

double IsotropicGaussian::density(const Eigen::Vector3d& x) const {
  return weight_ * std::exp(-(x - mean_).squaredNorm() / (2.0 * variance_));
}

AnisotropicGaussian::AnisotropicGaussian(const Eigen::Vector3d& mean,
                                         const Eigen::Matrix3d& precision, double weight)
    : mean_(mean), precision_(mirrorUpper(precision)), weight_(weight) {
  if (!isPositiveDefinite(precision_))
    throw std::domain_error("AnisotropicGaussian: precision must be positive-definite");
  if (!(weight > 0.0) || !std::isfinite(weight))
    throw std::domain_error("AnisotropicGaussian: weight must be positive");
  if (!mean.allFinite())
    throw std::domain_error("AnisotropicGaussian: mean must be finite");
}

AnisotropicGaussian AnisotropicGaussian::fromEllipsoid(const Eigen::Vector3d& center,
                                                       const Eigen::Vector3d& semi_axes,
                                                       const Eigen::Vector4d& orientation,
                                                       double weight) {
  if (!(semi_axes.minCoeff() > 0.0))
    throw std::domain_error("AnisotropicGaussian: semi-axes must be positive");
  const double n = orientation.norm();
  if (!(n > 0.0))
    throw std::domain_error("AnisotropicGaussian: zero-norm orientation quaternion");
  const Eigen::Quaterniond q(orientation[3] / n, orientation[0] / n, orientation[1] / n,
                             orientation[2] / n);
  const Eigen::Matrix3d rot = q.toRotationMatrix();
  const Eigen::Vector3d inv_var = semi_axes.array().square().inverse();
  const Eigen::Matrix3d p = rot * inv_var.asDiagonal() * rot.transpose();
  return AnisotropicGaussian(center, p, weight);
}

double AnisotropicGaussian::density(const Eigen::Vector3d& x) const {
  const Eigen::Vector3d d = x - mean_;
  return weight_ * std::exp(-0.5 * d.dot(precision_ * d));
}

SoG::SoG(std::vector<IsotropicGaussian> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::domain_error("SoG: needs at least one component");
}

double SoG::density(const Eigen::Vector3d& x) const {
  double sum = 0.0;
  for (const auto& g : components_) sum += g.density(x);
  return sum;
}

GSoG::GSoG(std::vector<AnisotropicGaussian> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw std::domain_error("GSoG: needs at least one component");
}

double GSoG::density(const Eigen::Vector3d& x) const {
  double sum = 0.0;
  for (const auto& g : components_) sum += g.density(x);
  return sum;
}

AnisotropicGaussian isotropicToAnisotropic(const IsotropicGaussian& g) {
  const Eigen::Matrix3d p = Eigen::Matrix3d::Identity() / g.variance();
  return AnisotropicGaussian(g.mean(), p, g.weight());
}

}  // namespace gsog
