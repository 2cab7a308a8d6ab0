#pragma once

namespace mst::tol {

/// Minimum distance of a pole from the unit circle.
inline constexpr double kPole = 1e-8;
/// Roots closer than this are treated as one root with multiplicity.
inline constexpr double kCluster = 1e-8;
/// Relative size of |num(p)| below which a pole p cancels against the numerator.
inline constexpr double kCancel = 1e-9;
/// Poles closer than this (relative) are merged when forming common denominators.
inline constexpr double kPoleMerge = 1e-12;
/// Blaschke zeros must satisfy |a| < 1 - kZeroMargin.
inline constexpr double kZeroMargin = 1e-10;
/// Model-space membership: ||f - P f|| < kMembership * (1 + ||f||).
inline constexpr double kMembership = 1e-9;
/// Rank decisions: singular values above kRank * sigma_max are nonzero.
inline constexpr double kRank = 1e-10;
/// Number of circle samples used to estimate sup norms.
inline constexpr int kSupSamples = 256;

}  // namespace mst::tol
