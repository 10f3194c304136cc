#ifndef GSOG_GAUSSIAN_HPP
#define GSOG_GAUSSIAN_HPP

#include <vector>

#include <Eigen/Core>

namespace gsog {

/// Un-normalized isotropic 3D Gaussian: weight * exp(-|x-mean|^2 / (2*variance)).
/// Immutable after construction.
class IsotropicGaussian {
 public:
  IsotropicGaussian(const Eigen::Vector3d& mean, double variance, double weight = 1.0);

  const Eigen::Vector3d& mean() const { return mean_; }
  double variance() const { return variance_; }
  double weight() const { return weight_; }

  /// Density at x; in (0, weight], equal to weight exactly at the mean.
  double density(const Eigen::Vector3d& x) const;

 private:
  Eigen::Vector3d mean_;
  double variance_;
  double weight_;
};

/// Un-normalized anisotropic 3D Gaussian:
/// weight * exp(-1/2 (x-mean)^T P (x-mean)) with P a symmetric positive-definite
/// precision matrix (inverse covariance). P is mirrored from its upper triangle
/// at construction, so symmetry holds exactly; positive-definiteness is checked
/// via the leading principal minors and failure throws std::domain_error.
class AnisotropicGaussian {
 public:
  AnisotropicGaussian(const Eigen::Vector3d& mean, const Eigen::Matrix3d& precision,
                      double weight = 1.0);

  /// Builds the precision from an authored ellipsoid: semi_axes are the standard
  /// deviations along the principal axes, orientation is a quaternion [x,y,z,w]
  /// rotating principal axes into the local frame.
  static AnisotropicGaussian fromEllipsoid(const Eigen::Vector3d& center,
                                           const Eigen::Vector3d& semi_axes,
                                           const Eigen::Vector4d& orientation,
                                           double weight = 1.0);

  const Eigen::Vector3d& mean() const { return mean_; }
  const Eigen::Matrix3d& precision() const { return precision_; }
  double weight() const { return weight_; }

  double density(const Eigen::Vector3d& x) const;

 private:
  Eigen::Vector3d mean_;
  Eigen::Matrix3d precision_;
  double weight_;
};

/// Sum of isotropic Gaussians; the observed-data representation. Non-empty.
class SoG {
 public:
  explicit SoG(std::vector<IsotropicGaussian> components);

  const std::vector<IsotropicGaussian>& components() const { return components_; }
  std::size_t size() const { return components_.size(); }

  double density(const Eigen::Vector3d& x) const;

 private:
  std::vector<IsotropicGaussian> components_;
};

/// Sum of anisotropic Gaussians; the shape-template representation. Non-empty.
class GSoG {
 public:
  explicit GSoG(std::vector<AnisotropicGaussian> components);

  const std::vector<AnisotropicGaussian>& components() const { return components_; }
  std::size_t size() const { return components_.size(); }

  double density(const Eigen::Vector3d& x) const;

 private:
  std::vector<AnisotropicGaussian> components_;
};

/// Embeds an isotropic Gaussian as an anisotropic one with precision (1/variance)*I.
/// Densities agree at every point.
AnisotropicGaussian isotropicToAnisotropic(const IsotropicGaussian& g);

}  // namespace gsog

#endif  // GSOG_GAUSSIAN_HPP
