#include "saturate/group.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <sstream>

#include "saturate/error.hpp"

namespace saturate::matgrp {

std::size_t default_order_cap() {
  if (const char* env = std::getenv("SATURATE_CAP")) {
    std::size_t value = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc() && ptr == end && value > 0) return value;
  }
  return kDefaultOrderCap;
}

FiniteMatrixGroup FiniteMatrixGroup::trivial(const Field& f, std::size_t n) {
  FiniteMatrixGroup g(f, n);
  g.elems_.push_back(SquareMatrix::identity(f, n));
  g.index_.emplace(g.elems_.back().key(), 0);
  return g;
}

bool FiniteMatrixGroup::contains(const SquareMatrix& m) const {
  if (m.dim() != n_ || !(m.field() == field_)) return false;
  return index_.contains(m.key());
}

bool operator==(const FiniteMatrixGroup& a, const FiniteMatrixGroup& b) {
  return a.order() == b.order() && a.is_subgroup_of(b);
}

bool FiniteMatrixGroup::is_subgroup_of(const FiniteMatrixGroup& other) const {
  if (order() > other.order()) return false;
  for (const auto& e : elems_) {
    if (!other.contains(e)) return false;
  }
  return true;
}

namespace {

void validate_generator(const Field& f, std::size_t n, const SquareMatrix& m) {
  if (!(m.field() == f)) {
    std::ostringstream msg;
    msg << "generator over " << m.field() << ", group over " << f;
    throw Error(ErrorKind::FieldMismatch, msg.str());
  }
  if (m.dim() != n) {
    throw Error(ErrorKind::DimensionMismatch,
                "generator of size " + std::to_string(m.dim()) + " in dimension " + std::to_string(n));
  }
  if (!is_invertible(m)) throw Error(ErrorKind::SingularGenerator, "generator is singular");
}

}  // namespace

FiniteMatrixGroup extend_closure(const FiniteMatrixGroup& g, std::span<const SquareMatrix> extra, std::size_t cap) {
  FiniteMatrixGroup out = g;
  std::vector<SquareMatrix> fresh;
  for (const auto& m : extra) {
    validate_generator(g.field(), g.dim(), m);
    if (m.is_identity()) continue;
    if (!out.contains(m)) fresh.push_back(m);
    out.gens_.push_back(m);
  }
  if (fresh.empty()) return out;

  // Old elements are already closed under the old generators; they only need
  // the new ones. Anything discovered now needs every generator.
  const std::size_t old_count = out.elems_.size();
  auto visit = [&](std::size_t i, std::span<const SquareMatrix> gens) {
    for (const auto& s : gens) {
      SquareMatrix y = out.elems_[i] * s;
      auto key = y.key();
      if (out.index_.contains(key)) continue;
      if (out.elems_.size() >= cap) {
        throw Error(ErrorKind::OrderCapExceeded, "group order exceeds cap " + std::to_string(cap));
      }
      out.index_.emplace(std::move(key), static_cast<std::uint32_t>(out.elems_.size()));
      out.elems_.push_back(std::move(y));
    }
  };
  for (std::size_t i = 0; i < old_count; ++i) visit(i, fresh);
  for (std::size_t i = old_count; i < out.elems_.size(); ++i) visit(i, out.gens_);
  return out;
}

FiniteMatrixGroup group_closure(const Field& f, std::size_t n, std::span<const SquareMatrix> generators,
                                std::size_t cap) {
  return extend_closure(FiniteMatrixGroup::trivial(f, n), generators, cap);
}

FiniteMatrixGroup group_closure(std::span<const SquareMatrix> generators, std::size_t cap) {
  if (generators.empty()) throw Error(ErrorKind::MalformedInput, "no generators and no ambient field");
  return group_closure(generators.front().field(), generators.front().dim(), generators, cap);
}

FiniteMatrixGroup gamma_plus(const FiniteMatrixGroup& g, std::size_t cap) {
  FiniteMatrixGroup h = FiniteMatrixGroup::trivial(g.field(), g.dim());
  for (const auto& e : g.elements()) {
    if (h.contains(e) || !is_unipotent(e)) continue;
    h = extend_closure(h, std::span(&e, 1), cap);
  }
  return h;
}

FiniteMatrixGroup embed_group(const FiniteMatrixGroup& g, const Field& target, std::size_t cap) {
  std::vector<SquareMatrix> gens;
  gens.reserve(g.generators().size());
  for (const auto& m : g.generators()) gens.push_back(embed(m, target));
  return group_closure(target, g.dim(), gens, cap);
}

std::vector<SquareMatrix> special_linear_generators(const Field& f, std::size_t n) {
  std::vector<SquareMatrix> gens;
  const auto basis = f.prime_basis();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (auto c : basis) {
        SquareMatrix m = SquareMatrix::identity(f, n);
        m.at(i, j) = c;
        gens.push_back(std::move(m));
      }
    }
  }
  return gens;
}

std::vector<SquareMatrix> general_linear_generators(const Field& f, std::size_t n) {
  std::vector<SquareMatrix> gens;
  if (f.order() > 2) {
    SquareMatrix d = SquareMatrix::identity(f, n);
    d.at(0, 0) = f.primitive();
    gens.push_back(std::move(d));
  }
  for (auto& m : special_linear_generators(f, n)) gens.push_back(std::move(m));
  return gens;
}

std::uint64_t general_linear_order(std::uint64_t q, std::size_t n) {
  unsigned __int128 order = 1;
  unsigned __int128 qn = 1;
  for (std::size_t i = 0; i < n; ++i) qn *= q;
  unsigned __int128 qi = 1;
  for (std::size_t i = 0; i < n; ++i) {
    order *= (qn - qi);
    if (order >> 64) return 0;
    qi *= q;
  }
  return static_cast<std::uint64_t>(order);
}

}  // namespace saturate::matgrp
