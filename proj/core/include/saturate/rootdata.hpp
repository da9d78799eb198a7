#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace saturate::rootdata {

using Vec = std::vector<std::int64_t>;
using Rational = boost::rational<std::int64_t>;

/// One irreducible block of a (possibly reducible) root system.
struct Component {
  char type;
  unsigned rank;
  /// Index of the first simple root of this block.
  unsigned offset;
};

/// Split semisimple root system in Bourbaki numbering.
///
/// Conventions: cartan[i][j] = <alpha_i^vee, alpha_j>. Roots are vectors in
/// the simple-root basis; weights are vectors in the fundamental-weight basis,
/// so a weight's i-th coordinate is its pairing with alpha_i^vee.
///   B_n: alpha_n short.  C_n: alpha_n long.  F_4: alpha_1, alpha_2 long.
///   G_2: alpha_1 short, highest root 3 alpha_1 + 2 alpha_2.
///   E_n: alpha_2 hangs off alpha_4; the chain is 1-3-4-5-...-n.
class RootSystem {
 public:
  const std::vector<Component>& components() const noexcept { return components_; }
  unsigned rank() const noexcept { return static_cast<unsigned>(cartan_.size()); }
  bool is_irreducible() const noexcept { return components_.size() == 1; }
  /// "A3", "B2xG2", ...
  std::string name() const;

  const std::vector<Vec>& cartan() const noexcept { return cartan_; }
  /// Squared root lengths of the simple roots, short roots of each block = 1
  /// (so 1, 2 or 3).
  const Vec& simple_lengths() const noexcept { return lengths_; }
  /// Positive roots ordered by height, then lexicographically.
  const std::vector<Vec>& positive_roots() const noexcept { return positive_; }
  /// Highest root of each component, as a full-rank vector.
  std::vector<Vec> highest_roots() const;
  /// Highest root of an irreducible system.
  const Vec& highest_root() const;
  /// Highest short root of an irreducible system (the highest root when simply laced).
  const Vec& highest_short_root() const;
  /// rho = sum of fundamental weights: all ones in the weight basis.
  Vec rho() const { return Vec(rank(), 1); }

  /// Squared length (alpha, alpha) of a root in the normalized form.
  Rational root_length(const Vec& root) const;
  /// Coroot of a root, in the simple-coroot basis.
  Vec coroot(const Vec& root) const;
  /// <lambda, beta^vee> for lambda in the weight basis, beta a root.
  std::int64_t pairing(const Vec& weight, const Vec& root) const;
  /// A root expressed in the fundamental-weight basis.
  Vec root_as_weight(const Vec& root) const;
  bool is_dominant(const Vec& weight) const;

 private:
  friend RootSystem root_system(char type, unsigned rank);
  friend RootSystem product(std::span<const RootSystem> factors);
  void finish();

  std::vector<Component> components_;
  std::vector<Vec> cartan_;
  Vec lengths_;
  std::vector<Vec> positive_;
  std::vector<std::size_t> highest_;
  std::vector<std::size_t> highest_short_;
};

/// Throws InvalidType outside A>=1, B>=2, C>=2, D>=3, E6-8, F4, G2.
RootSystem root_system(char type, unsigned rank);
/// Orthogonal product; simple roots are concatenated in the given order.
RootSystem product(std::span<const RootSystem> factors);

/// |R^+| by the classical formulas.
std::size_t expected_positive_root_count(char type, unsigned rank);

/// 1 + sum of the highest-root coefficients; the maximum over components.
std::int64_t coxeter_number(const RootSystem& rs);
/// <rho, beta^vee> + 1 for beta the highest short root. Needs an irreducible system.
std::int64_t coxeter_via_rho(const RootSystem& rs);

/// A multiset of weights in the fundamental-weight basis of `system`.
struct RepWeights {
  RootSystem system;
  std::vector<Vec> weights;
  std::size_t dim() const noexcept { return weights.size(); }
};

RepWeights trivial_rep(const RootSystem& rs);
/// Standard representation of A_{n-1}: eps_1 = w_1, eps_j = w_j - w_{j-1}, eps_n = -w_{n-1}.
RepWeights standard_rep(const RootSystem& rs);
/// Weights of the i-th exterior power (sums over i-element subsets).
RepWeights exterior_power(const RepWeights& rep, unsigned i);
/// Roots together with rank copies of zero.
RepWeights adjoint_rep(const RootSystem& rs);
/// The Weyl orbit of a dominant weight: the extremal weights of the
/// irreducible representation with that highest weight. Throws NotDominant.
RepWeights weyl_orbit(const RootSystem& rs, const Vec& dominant);
/// External tensor product over product(a.system, b.system).
RepWeights external_tensor(const RepWeights& a, const RepWeights& b);

/// max over weights of sum over positive roots of <lambda, beta^vee>.
/// Throws WeightLatticeMismatch for weights of the wrong length.
std::int64_t dynkin_height(const RepWeights& rep);
/// sum m_i where highest - lowest = sum m_i alpha_i, lowest = w_0(highest),
/// solved exactly. Throws NotDominant.
Rational dynkin_height_from_highest(const RootSystem& rs, const Vec& highest);
/// w_0 of a dominant weight, found by reflecting until antidominant.
Vec lowest_weight(const RootSystem& rs, const Vec& dominant);

bool is_low_height(const RepWeights& rep, std::int64_t ell);
/// Sum of factor heights; throws HypothesisViolated if it disagrees with the
/// height of the external tensor product computed directly.
std::int64_t height_under_tensor(std::span<const RepWeights> factors);
/// ht_H(V) <= ht_G(V) for a saturated subgroup H of G.
bool height_inequality_holds(const RepWeights& sub, const RepWeights& ambient);

struct AlcoveReport {
  std::int64_t pairing;
  /// pairing <= 2(n-1)
  bool within_bound;
  /// pairing < ell
  bool below_ell;
  bool pass() const noexcept { return within_bound && below_ell; }
};
/// <rho + mu, alpha_0^vee> for alpha_0 the highest short root. Throws NotDominant.
AlcoveReport low_alcove_check(const RootSystem& rs, const Vec& mu, std::int64_t n, std::int64_t ell);

struct WeightConditionReport {
  bool multiplicity_one = true;
  bool reduced = true;
  bool exponents_below_ell = true;
  /// Repeated root for (i).
  std::optional<Vec> multiplicity_witness;
  /// A pair (alpha, beta) with beta a multiple of alpha other than +-alpha, for (ii).
  std::optional<std::pair<Vec, Vec>> reducedness_witness;
  /// (alpha, i) with i*alpha an End(V)-weight and i >= ell, for (iii).
  std::optional<std::pair<Vec, std::int64_t>> exponent_witness;
  bool pass() const noexcept { return multiplicity_one && reduced && exponents_below_ell; }
};
/// Torus characters of V as integer vectors; `roots` is the candidate root
/// multiset, defaulting to the distinct nonzero End(V)-weights.
WeightConditionReport weight_conditions(std::span<const Vec> weights_on_v, std::int64_t ell,
                                        std::optional<std::vector<Vec>> roots = std::nullopt);

struct SimpleGroupData {
  char type;
  unsigned rank;
  /// Center of the simply connected group.
  std::int64_t center_order;
  std::int64_t min_faithful_dim;
  std::int64_t coxeter;
};
/// Valid for A>=1, B>=3, C>=2, D>=4, E6-8, F4, G2; InvalidType otherwise.
SimpleGroupData simple_group_data(char type, unsigned rank);
/// Splits a weight of a product system into the weights of its components.
std::vector<Vec> tensor_weight_split(const RootSystem& product_system, const Vec& weight);

}  // namespace saturate::rootdata
