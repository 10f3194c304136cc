#include "gsog/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace gsog {

Skeleton::Skeleton(std::vector<Joint> joints) : joints_(std::move(joints)) {
  if (joints_.empty()) throw std::domain_error("Skeleton: needs at least one joint");
  if (joints_[0].parent != kRootParent)
    throw std::domain_error("Skeleton: joint 0 must be the root");
  for (std::size_t l = 1; l < joints_.size(); ++l) {
    const int p = joints_[l].parent;
    if (p < 0 || p >= static_cast<int>(l))
      throw std::domain_error("Skeleton: parent index must precede the joint");
  }
}

std::vector<int> Skeleton::chainFromRoot(int l) const {
  if (l < 0 || l >= jointCount()) throw std::domain_error("Skeleton: joint out of range");
  std::vector<int> chain;
  for (int k = l; k != kRootParent; k = joints_[static_cast<std::size_t>(k)].parent)
    chain.push_back(k);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

bool Skeleton::isAncestorOf(int ancestor, int l) const {
  for (int k = l; k != kRootParent; k = joints_[static_cast<std::size_t>(k)].parent)
    if (k == ancestor) return true;
  return false;
}

Pose::Pose(const Eigen::Vector3d& translation, std::vector<Eigen::Vector4d> quaternions)
    : translation_(translation), quaternions_(std::move(quaternions)) {
  if (quaternions_.empty()) throw std::domain_error("Pose: needs at least one quaternion");
  if (!translation_.allFinite()) throw std::domain_error("Pose: non-finite translation");
  for (const auto& q : quaternions_) {
    if (!q.allFinite() || !(q.norm() > 0.0))
      throw std::domain_error("Pose: quaternion norm must be strictly positive");
  }
}

Pose Pose::rest(int joint_count) {
  if (joint_count < 1) throw std::domain_error("Pose: joint count must be positive");
  std::vector<Eigen::Vector4d> quats(static_cast<std::size_t>(joint_count),
                                     Eigen::Vector4d(0, 0, 0, 1));
  return Pose(Eigen::Vector3d::Zero(), std::move(quats));
}

Eigen::VectorXd Pose::flatten() const {
  Eigen::VectorXd v(parameterCount());
  v.head<3>() = translation_;
  for (int l = 0; l < jointCount(); ++l)
    v.segment<4>(3 + 4 * l) = quaternions_[static_cast<std::size_t>(l)];
  return v;
}

Pose Pose::unflatten(const Eigen::VectorXd& v) {
  if (v.size() < 7 || (v.size() - 3) % 4 != 0)
    throw std::domain_error("Pose: flattened length must be 4L+3 with L >= 1");
  const int joints = static_cast<int>((v.size() - 3) / 4);
  std::vector<Eigen::Vector4d> quats;
  quats.reserve(static_cast<std::size_t>(joints));
  for (int l = 0; l < joints; ++l) quats.emplace_back(v.segment<4>(3 + 4 * l));
  return Pose(v.head<3>(), std::move(quats));
}

Pose Pose::normalized() const {
  std::vector<Eigen::Vector4d> quats;
  quats.reserve(quaternions_.size());
  for (const auto& q : quaternions_) quats.push_back(q / q.norm());
  return Pose(translation_, std::move(quats));
}

GSoGTemplate::GSoGTemplate(Skeleton skeleton, std::vector<Attachment> attachments)
    : skeleton_(std::move(skeleton)), attachments_(std::move(attachments)) {
  if (attachments_.empty())
    throw std::domain_error("GSoGTemplate: needs at least one attachment");
  for (const auto& a : attachments_) {
    if (a.joint < 0 || a.joint >= skeleton_.jointCount())
      throw std::domain_error("GSoGTemplate: attachment references unknown joint");
  }
}

Eigen::Matrix3d quatToRotation(const Eigen::Vector4d& r) {
  const double n = r.norm();
  if (!(n > 0.0)) throw std::domain_error("quatToRotation: zero-norm quaternion");
  const double x = r[0] / n, y = r[1] / n, z = r[2] / n, w = r[3] / n;
  Eigen::Matrix3d rot;
  rot << 1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w),
      2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w),
      2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y);
  return rot;
}

std::vector<Eigen::Isometry3d> forwardKinematics(const Skeleton& skeleton,
                                                 const Pose& pose) {
  if (pose.jointCount() != skeleton.jointCount())
    throw std::domain_error("forwardKinematics: pose/skeleton joint count mismatch");

  std::vector<Eigen::Isometry3d> transforms(
      static_cast<std::size_t>(skeleton.jointCount()));
  for (int l = 0; l < skeleton.jointCount(); ++l) {
    const Joint& j = skeleton.joint(l);
    Eigen::Isometry3d local = Eigen::Isometry3d::Identity();
    local.translate(j.offset);
    local.rotate(quatToRotation(pose.quaternion(l)));
    if (j.parent == kRootParent) {
      transforms[static_cast<std::size_t>(l)] =
          Eigen::Translation3d(pose.translation()) * local;
    } else {
      transforms[static_cast<std::size_t>(l)] =
          transforms[static_cast<std::size_t>(j.parent)] * local;
    }
  }
  return transforms;
}

PosedModel poseTemplate(const GSoGTemplate& tpl, const Pose& pose) {
  auto transforms = forwardKinematics(tpl.skeleton(), pose);

  std::vector<AnisotropicGaussian> world;
  std::vector<int> owners;
  world.reserve(tpl.size());
  owners.reserve(tpl.size());
  for (const auto& a : tpl.attachments()) {
    const Eigen::Isometry3d& t = transforms[static_cast<std::size_t>(a.joint)];
    const Eigen::Matrix3d rot = t.linear();
    world.emplace_back(t * a.local.mean(),
                       Eigen::Matrix3d(rot * a.local.precision() * rot.transpose()),
                       a.local.weight());
    owners.push_back(a.joint);
  }
  return PosedModel{GSoG(std::move(world)), std::move(transforms), std::move(owners)};
}

}  // namespace gsog
