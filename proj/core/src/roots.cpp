#include "saturate/roots.hpp"

#include <limits>
#include <string>

#include <boost/math/constants/constants.hpp>

#include "saturate/error.hpp"

namespace saturate::roots {

namespace {

// Horner evaluation of p and p'.
void eval(std::span<const Complex> c, const Complex& z, Complex& p, Complex& dp) {
  p = c.back();
  dp = Complex(0);
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[i];
  }
}

}  // namespace

std::vector<RootDisk> isolate_roots(std::span<const Complex> coeffs, unsigned max_iterations) {
  if (coeffs.empty() || coeffs.back() == Complex(0)) {
    throw Error(ErrorKind::MalformedInput, "leading coefficient must be nonzero");
  }
  const std::size_t n = coeffs.size() - 1;
  if (n == 0) return {};
  std::vector<Complex> c(coeffs.begin(), coeffs.end());
  const Complex lead = c.back();
  for (auto& x : c) x /= lead;
  if (n == 1) return {RootDisk{-c[0], Real(0)}};

  // Cauchy bound for the starting circle; the angular offset breaks the
  // symmetry that stalls the iteration on real polynomials.
  Real bound = 0;
  for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, Real(abs(c[i])));
  bound += 1;
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Real theta = two_pi * Real(k) / Real(n) + Real(0.4);
    z[k] = Complex(bound * cos(theta), bound * sin(theta));
  }

  const Real converged = Real("1e-44");
  bool done = false;
  for (unsigned it = 0; it < max_iterations && !done; ++it) {
    Real worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
      Complex p, dp;
      eval(c, z[k], p, dp);
      if (p == Complex(0)) continue;
      Complex s(0);
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) s += Complex(1) / (z[k] - z[j]);
      const Complex ratio = (dp == Complex(0)) ? Complex(1) : p / dp;
      const Complex corr = ratio / (Complex(1) - ratio * s);
      z[k] -= corr;
      worst = std::max(worst, Real(abs(corr)) / std::max(Real(1), Real(abs(z[k]))));
    }
    done = worst < converged;
  }
  if (!done) {
    throw Error(ErrorKind::RootFindingFailure,
                "Aberth iteration did not converge in " + std::to_string(max_iterations) + " steps");
  }

  // |P(z)| is only known up to the rounding error of Horner's scheme,
  // bounded by 2 n eps sum |a_i| |z|^i.
  const Real eps = std::numeric_limits<Real>::epsilon();
  std::vector<RootDisk> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex p, dp;
    eval(c, z[k], p, dp);
    Real mag = 0;
    const Real az = abs(z[k]);
    for (std::size_t i = c.size(); i-- > 0;) mag = mag * az + Real(abs(c[i]));
    const Real residual = Real(abs(p)) + 2 * Real(n + 1) * eps * mag;
    Complex denom(1);
    for (std::size_t j = 0; j < n; ++j)
      if (j != k) denom *= z[k] - z[j];
    if (denom == Complex(0)) throw Error(ErrorKind::RootFindingFailure, "two approximations coincide");
    out[k] = RootDisk{z[k], Real(n) * residual / Real(abs(denom))};
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // Written so that a NaN radius also counts as overlap.
      if (!(Real(abs(out[i].center - out[j].center)) > out[i].radius + out[j].radius)) {
        throw Error(ErrorKind::RootFindingFailure, "inclusion disks overlap; roots are not isolated");
      }
    }
  }
  return out;
}

}  // namespace saturate::roots
