#pragma once

#include <iosfwd>
#include <string>

#include "younglab/distribution.hpp"

namespace younglab {

/// Write a joint distribution as CSV: optional '#' comment lines, a
/// 'z,phi,value' header, then the outcome +1 block followed by the
/// outcome -1 block, phi ascending, 17 significant digits throughout.
void write_joint_csv(const JointDistribution& joint, std::ostream& os,
                     const std::string& comment = "");
void write_joint_csv(const JointDistribution& joint, const std::string& path,
                     const std::string& comment = "");

/// Parse a joint-distribution CSV produced by write_joint_csv (comments
/// tolerated). The phi column must form the midpoint grid over [0, 2pi)
/// in the documented block order; deviations raise IoError.
JointDistribution read_joint_csv(std::istream& is, OutcomeLabel label = OutcomeLabel::polarizer);
JointDistribution read_joint_csv(const std::string& path,
                                 OutcomeLabel label = OutcomeLabel::polarizer);

} // namespace younglab
