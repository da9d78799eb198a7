#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "saturate/group.hpp"

namespace saturate::envelope {

using ff::Elem;
using ff::Field;
using matgrp::FiniteMatrixGroup;
using matgrp::SquareMatrix;

/// Scalars over which a LieSubspace is spanned.
enum class Scalars { prime, full };

/// A subspace of n x n matrices over F_q, kept in reduced row echelon form.
///
/// With `Scalars::full` rows are the n^2 entries; with `Scalars::prime` rows
/// are the n^2 * k coordinates over F_ell. Pivots are normalized to 1 and
/// cleared above and below, so two equal subspaces have identical bases.
class LieSubspace {
 public:
  LieSubspace(Field field, std::size_t n, Scalars scalars);

  const Field& field() const noexcept { return field_; }
  std::size_t dim_n() const noexcept { return n_; }
  Scalars scalars() const noexcept { return scalars_; }
  std::size_t dimension() const noexcept { return rows_.size(); }
  /// Basis matrices in canonical order.
  std::vector<SquareMatrix> basis() const;

  bool contains(const SquareMatrix& x) const;
  /// Returns true if `x` enlarged the span.
  bool insert(const SquareMatrix& x);

  friend bool operator==(const LieSubspace& a, const LieSubspace& b) {
    return a.n_ == b.n_ && a.scalars_ == b.scalars_ && a.field_ == b.field_ && a.rows_ == b.rows_;
  }

 private:
  std::vector<Elem> coordinates(const SquareMatrix& x) const;
  SquareMatrix from_coordinates(const std::vector<Elem>& v) const;
  /// Reduces `v` in place; returns the first nonzero column or npos.
  std::size_t reduce(std::vector<Elem>& v) const;

  Field field_;
  Field scalar_field_;
  std::size_t n_;
  Scalars scalars_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Span of log_n(u) over the unipotent elements u of `g`. Throws CharTooSmall.
LieSubspace log_span(const FiniteMatrixGroup& g, Scalars scalars);

struct EnvelopePair {
  FiniteMatrixGroup group;
  /// log_span(group, full).
  LieSubspace lie;
  bool stable = false;
  std::size_t iterations = 0;
};

/// Point-level Nori envelope of the unipotently generated part of `g`.
///
/// Starts from gamma_plus(g) and adds exp_n(t log_n u) for every unipotent u
/// and t in F_q until the group stops growing. Requires ell >= 2n and throws
/// CharTooSmall otherwise.
EnvelopePair nori_envelope(const FiniteMatrixGroup& g, std::size_t cap = matgrp::default_order_cap());

/// Smallest subgroup of GL_n(F_{q^e}) containing `g` and closed under
/// u -> u^t for every unipotent member u and every t in F_{q^e}.
FiniteMatrixGroup saturation_closure(const FiniteMatrixGroup& g, unsigned extension_degree,
                                     std::size_t cap = matgrp::default_order_cap());

struct SaturationWitness {
  SquareMatrix u;
  Elem t;
};

/// For every unipotent u in g and t in the group's own field, u^t lies in g.
/// This is a statement about F_q-points only. Throws CharTooSmall.
bool is_saturated_points(const FiniteMatrixGroup& g);
/// As above, returning a failing (u, t) if there is one.
std::optional<SaturationWitness> saturation_witness(const FiniteMatrixGroup& g);

struct AcceptableReport {
  bool acceptable = true;
  /// Nilpotents of L were sampled rather than enumerated.
  bool sampled = false;
  std::uint64_t nilpotents_checked = 0;
  std::uint64_t unipotents_checked = 0;
  /// Failing matrix: a nilpotent of L with exp outside G, or a unipotent of G
  /// with log outside L.
  std::optional<SquareMatrix> witness;
};

inline constexpr std::uint64_t kExhaustiveBudget = 1'000'000;
inline constexpr std::uint64_t kSampleCount = 10'000;
inline constexpr std::uint64_t kSampleSeed = 0x5A7u;

/// Checks both directions of the acceptable-pair condition over the group's
/// field. Enumerates L when it has at most kExhaustiveBudget elements,
/// otherwise samples kSampleCount elements (or throws
/// EnumerationBudgetExceeded when sampling is not allowed).
AcceptableReport is_acceptable_pair(const LieSubspace& lie, const FiniteMatrixGroup& g, bool allow_sampling = true);

/// The F_q-span of the elements of g is all of M_n. By Burnside this is
/// absolute irreducibility, and it is unchanged by extending scalars.
bool is_absolutely_irreducible(const FiniteMatrixGroup& g);
/// Dimension of the F_q-linear span of the elements of g.
std::size_t linear_span_dimension(const FiniteMatrixGroup& g);

}  // namespace saturate::envelope
