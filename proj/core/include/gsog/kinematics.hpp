#ifndef GSOG_KINEMATICS_HPP
#define GSOG_KINEMATICS_HPP

#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "gsog/gaussian.hpp"

namespace gsog {

/// Parent index of the root joint.
inline constexpr int kRootParent = -1;

/// One joint of the kinematic tree. The offset is a fixed translation in the
/// parent's frame; the joint rotates about its own origin.
struct Joint {
  int parent = kRootParent;
  Eigen::Vector3d offset = Eigen::Vector3d::Zero();
  std::string name;
};

/// Hierarchical joint tree in topological order: joint 0 is the single root,
/// every other joint's parent index is smaller than its own.
class Skeleton {
 public:
  explicit Skeleton(std::vector<Joint> joints);

  int jointCount() const { return static_cast<int>(joints_.size()); }
  const Joint& joint(int l) const { return joints_[static_cast<std::size_t>(l)]; }
  const std::vector<Joint>& joints() const { return joints_; }

  /// Joint indices from the root down to l, inclusive.
  std::vector<int> chainFromRoot(int l) const;

  /// True if ancestor lies on the root-to-l chain (a joint is its own ancestor).
  bool isAncestorOf(int ancestor, int l) const;

 private:
  std::vector<Joint> joints_;
};

/// Pose parameters: a global translation plus one unnormalized quaternion per
/// joint, flattened as [t(3), r1(4), ..., rL(4)] for a total of 4L+3 values.
/// Quaternions are stored [x,y,z,w] with w the scalar part; (0,0,0,1) is the
/// identity rotation. Norms must be strictly positive.
class Pose {
 public:
  Pose(const Eigen::Vector3d& translation, std::vector<Eigen::Vector4d> quaternions);

  /// Identity pose: zero translation, identity quaternions.
  static Pose rest(int joint_count);

  const Eigen::Vector3d& translation() const { return translation_; }
  const std::vector<Eigen::Vector4d>& quaternions() const { return quaternions_; }
  const Eigen::Vector4d& quaternion(int l) const {
    return quaternions_[static_cast<std::size_t>(l)];
  }
  int jointCount() const { return static_cast<int>(quaternions_.size()); }
  int parameterCount() const { return 4 * jointCount() + 3; }

  Eigen::VectorXd flatten() const;
  static Pose unflatten(const Eigen::VectorXd& v);

  /// Copy with every quaternion scaled to unit norm; represents the same pose.
  Pose normalized() const;

 private:
  Eigen::Vector3d translation_;
  std::vector<Eigen::Vector4d> quaternions_;
};

/// An anisotropic Gaussian bound to a joint, expressed in the joint's frame.
struct Attachment {
  int joint = 0;
  AnisotropicGaussian local;
};

/// Shape template: skeleton plus at least one Gaussian attachment.
class GSoGTemplate {
 public:
  GSoGTemplate(Skeleton skeleton, std::vector<Attachment> attachments);

  const Skeleton& skeleton() const { return skeleton_; }
  const std::vector<Attachment>& attachments() const { return attachments_; }
  std::size_t size() const { return attachments_.size(); }

 private:
  Skeleton skeleton_;
  std::vector<Attachment> attachments_;
};

/// Template transformed to world coordinates under a pose.
struct PosedModel {
  GSoG gaussians;
  std::vector<Eigen::Isometry3d> transforms;
  std::vector<int> owners;  // owners[i] = joint of gaussians[i]
};

/// Normalizes r = [x,y,z,w] and returns the corresponding rotation matrix.
/// Throws std::domain_error for a zero-norm quaternion.
Eigen::Matrix3d quatToRotation(const Eigen::Vector4d& r);

/// World transform per joint: T_root = Trans(t) * Trans(offset_0) * Rot(q_0),
/// T_l = T_parent * Trans(offset_l) * Rot(q_l), processed in topological order.
std::vector<Eigen::Isometry3d> forwardKinematics(const Skeleton& skeleton,
                                                 const Pose& pose);

/// Transforms each attachment into world coordinates: mean through the owning
/// joint's transform, precision conjugated by its rotation block.
PosedModel poseTemplate(const GSoGTemplate& tpl, const Pose& pose);

}  // namespace gsog

#endif  // GSOG_KINEMATICS_HPP
