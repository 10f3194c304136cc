#ifndef GSOG_GRADIENTS_HPP
#define GSOG_GRADIENTS_HPP

#include <vector>

#include <Eigen/Core>

#include "gsog/gaussian.hpp"
#include "gsog/kinematics.hpp"
#include "gsog/similarity.hpp"

namespace gsog {

/// Objective value and its gradient with respect to the flattened pose
/// parameters (length 4L+3, same layout as Pose::flatten).
struct SimilarityGradient {
  double E = 0.0;
  Eigen::VectorXd gradient;
};

/// Gradient of a pair term with respect to the world mean of the anisotropic
/// side, holding the precision fixed:
///   dE_ij/du_i = -E_ij * M (u_i - mu_j),  M = [P^-1 + (1/m) I]^-1.
/// Reuses the factorization cached in the term.
Eigen::Vector3d gradPairWrtMean(const GaussianPairTerm& term, const AnisotropicGaussian& gi,
                                const IsotropicGaussian& gj);

/// Jacobian of an attachment's world mean with respect to the pose parameters,
/// as a dense 3 x (4L+3) matrix. The translation block is the identity; the
/// quaternion block of joint k is nonzero only for k on the root-to-owner
/// chain and composes the rotation-by-quaternion derivative with the
/// normalization Jacobian dp/dr = (I - p p^T)/|r|.
Eigen::MatrixXd gradMeanWrtPose(const GSoGTemplate& tpl, const Pose& pose,
                                int attachment_index);

/// Assembles E and dE/dTheta in one pass over the pair terms. Means and
/// transforms of `posed` must correspond to `pose`; precisions are taken from
/// `posed` as-is and are not differentiated.
SimilarityGradient gradSimilarity(const PosedModel& posed, const SoG& data,
                                  const GSoGTemplate& tpl, const Pose& pose,
                                  const SimilarityOptions& options = {});

/// The optimizer's objective: similarity of the posed template against a data
/// SoG, with the world precision matrices frozen at a reference pose. Means
/// follow the evaluation pose through forward kinematics; precisions stay
/// fixed until refreshPrecisions() re-poses them, so value and gradient are
/// exactly consistent with each other.
class PoseObjective {
 public:
  PoseObjective(GSoGTemplate tpl, SoG data, const Pose& precision_pose,
                const SimilarityOptions& options = {});

  double value(const Pose& pose) const;
  SimilarityGradient valueAndGradient(const Pose& pose) const;

  /// Re-derives the frozen world precisions from the given pose.
  void refreshPrecisions(const Pose& pose);

  /// Posed model at `pose` with the frozen precisions substituted in.
  PosedModel posedAt(const Pose& pose) const;

  const GSoGTemplate& shapeTemplate() const { return tpl_; }
  const SoG& data() const { return data_; }
  int parameterCount() const { return 4 * tpl_.skeleton().jointCount() + 3; }

 private:
  GSoGTemplate tpl_;
  SoG data_;
  SimilarityOptions options_;
  std::vector<Eigen::Matrix3d> frozen_precisions_;
};

}  // namespace gsog

#endif  // GSOG_GRADIENTS_HPP
