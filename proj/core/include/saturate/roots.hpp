#pragma once

#include <span>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace saturate::roots {

using Real = boost::multiprecision::cpp_bin_float_50;
using Complex = boost::multiprecision::cpp_complex_50;

/// A disk known to contain exactly one root of the polynomial.
struct RootDisk {
  Complex center;
  Real radius;
};

/// All roots of a squarefree polynomial (lowest coefficient first, nonzero
/// leading coefficient) by Aberth-Ehrlich iteration, each with an inclusion
/// radius n |P(z_i)| / |a_n prod_{j != i} (z_i - z_j)|. The disks are checked
/// to be pairwise disjoint, which makes each one hold exactly one root.
/// Throws RootFindingFailure on non-convergence or overlapping disks, which
/// is what a repeated root produces.
std::vector<RootDisk> isolate_roots(std::span<const Complex> coeffs, unsigned max_iterations = 2000);

}  // namespace saturate::roots
