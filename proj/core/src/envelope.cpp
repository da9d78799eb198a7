#include "saturate/envelope.hpp"

#include <random>
#include <unordered_set>

#include "saturate/error.hpp"

namespace saturate::envelope {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

void require_char_above_dim(const Field& f, std::size_t n) {
  if (f.characteristic() <= n) {
    throw Error(ErrorKind::CharTooSmall, "characteristic " + std::to_string(f.characteristic()) +
                                             " must exceed dimension " + std::to_string(n));
  }
}

// Adds u^t for every unipotent u of `h` and every t in an F_ell-basis of the
// field until nothing new appears. Since t -> u^t is additive and u^c for
// c in F_ell is an ordinary power, this closes `h` under all t in F_q.
FiniteMatrixGroup close_under_t_powers(FiniteMatrixGroup h, std::size_t cap, std::size_t* rounds) {
  auto basis = h.field().prime_basis();
  basis.erase(basis.begin());  // t = 1 gives u itself
  std::size_t scanned = 0;
  std::size_t iterations = 0;
  while (true) {
    ++iterations;
    std::vector<SquareMatrix> extra;
    std::unordered_set<std::u32string> seen;
    const std::size_t order = h.order();
    for (std::size_t i = scanned; i < order && !basis.empty(); ++i) {
      const SquareMatrix& u = h.elements()[i];
      if (u.is_identity() || !matgrp::is_unipotent(u)) continue;
      for (auto t : basis) {
        SquareMatrix ut = matgrp::t_power(u, t);
        if (h.contains(ut) || !seen.insert(ut.key()).second) continue;
        extra.push_back(std::move(ut));
      }
    }
    scanned = order;
    if (extra.empty()) break;
    h = matgrp::extend_closure(h, extra, cap);
  }
  if (rounds) *rounds = iterations;
  return h;
}

}  // namespace

LieSubspace::LieSubspace(Field field, std::size_t n, Scalars scalars)
    : field_(field),
      scalar_field_(scalars == Scalars::full ? field : Field::prime(field.characteristic())),
      n_(n),
      scalars_(scalars) {}

std::vector<Elem> LieSubspace::coordinates(const SquareMatrix& x) const {
  if (!(x.field() == field_) || x.dim() != n_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix does not belong to this subspace's ambient space");
  }
  if (scalars_ == Scalars::full) return {x.entries().begin(), x.entries().end()};
  std::vector<Elem> v;
  v.reserve(n_ * n_ * field_.degree());
  for (auto e : x.entries()) {
    for (auto c : field_.coeffs(e)) v.push_back(Elem{c});
  }
  return v;
}

SquareMatrix LieSubspace::from_coordinates(const std::vector<Elem>& v) const {
  if (scalars_ == Scalars::full) return SquareMatrix(field_, n_, v);
  const unsigned k = field_.degree();
  std::vector<Elem> entries(n_ * n_);
  std::vector<std::uint32_t> c(k);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (unsigned j = 0; j < k; ++j) c[j] = v[i * k + j].code;
    entries[i] = field_.from_coeffs(c);
  }
  return SquareMatrix(field_, n_, std::move(entries));
}

std::size_t LieSubspace::reduce(std::vector<Elem>& v) const {
  const Field& f = scalar_field_;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Elem c = v[pivots_[r]];
    if (!c.code) continue;
    const auto& row = rows_[r];
    for (std::size_t j = pivots_[r]; j < v.size(); ++j) {
      if (row[j].code) v[j] = f.sub(v[j], f.mul(c, row[j]));
    }
  }
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j].code) return j;
  }
  return npos;
}

bool LieSubspace::contains(const SquareMatrix& x) const {
  auto v = coordinates(x);
  return reduce(v) == npos;
}

bool LieSubspace::insert(const SquareMatrix& x) {
  auto v = coordinates(x);
  const std::size_t p = reduce(v);
  if (p == npos) return false;
  const Field& f = scalar_field_;
  const Elem inv = f.inv(v[p]);
  for (std::size_t j = p; j < v.size(); ++j) v[j] = f.mul(v[j], inv);
  for (auto& row : rows_) {
    const Elem c = row[p];
    if (!c.code) continue;
    for (std::size_t j = p; j < row.size(); ++j) {
      if (v[j].code) row[j] = f.sub(row[j], f.mul(c, v[j]));
    }
  }
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
  return true;
}

std::vector<SquareMatrix> LieSubspace::basis() const {
  std::vector<SquareMatrix> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(from_coordinates(r));
  return out;
}

LieSubspace log_span(const FiniteMatrixGroup& g, Scalars scalars) {
  require_char_above_dim(g.field(), g.dim());
  LieSubspace lie(g.field(), g.dim(), scalars);
  const std::size_t full = g.dim() * g.dim() * (scalars == Scalars::prime ? g.field().degree() : 1);
  for (const auto& u : g.elements()) {
    if (lie.dimension() == full) break;
    if (u.is_identity() || !matgrp::is_unipotent(u)) continue;
    lie.insert(matgrp::log_n(u));
  }
  return lie;
}

EnvelopePair nori_envelope(const FiniteMatrixGroup& g, std::size_t cap) {
  const std::size_t n = g.dim();
  if (g.field().characteristic() < 2 * n) {
    throw Error(ErrorKind::CharTooSmall, "envelope needs ell >= 2n; ell = " +
                                             std::to_string(g.field().characteristic()) + ", n = " +
                                             std::to_string(n));
  }
  std::size_t rounds = 0;
  FiniteMatrixGroup h = close_under_t_powers(matgrp::gamma_plus(g, cap), cap, &rounds);
  LieSubspace lie = log_span(h, Scalars::full);
  return EnvelopePair{std::move(h), std::move(lie), true, rounds};
}

FiniteMatrixGroup saturation_closure(const FiniteMatrixGroup& g, unsigned extension_degree, std::size_t cap) {
  if (extension_degree == 0) throw Error(ErrorKind::MalformedInput, "extension degree must be positive");
  require_char_above_dim(g.field(), g.dim());
  FiniteMatrixGroup h = g;
  if (extension_degree > 1) {
    const Field big = Field::create(g.field().characteristic(), g.field().degree() * extension_degree);
    h = matgrp::embed_group(g, big, cap);
  }
  return close_under_t_powers(std::move(h), cap, nullptr);
}

std::optional<SaturationWitness> saturation_witness(const FiniteMatrixGroup& g) {
  require_char_above_dim(g.field(), g.dim());
  const auto scalars = g.field().elements();
  for (const auto& u : g.elements()) {
    if (u.is_identity() || !matgrp::is_unipotent(u)) continue;
    for (auto t : scalars) {
      if (t.code < 2) continue;
      SquareMatrix ut = matgrp::t_power(u, t);
      if (!g.contains(ut)) return SaturationWitness{u, t};
    }
  }
  return std::nullopt;
}

bool is_saturated_points(const FiniteMatrixGroup& g) { return !saturation_witness(g).has_value(); }

AcceptableReport is_acceptable_pair(const LieSubspace& lie, const FiniteMatrixGroup& g, bool allow_sampling) {
  require_char_above_dim(g.field(), g.dim());
  if (!(lie.field() == g.field()) || lie.dim_n() != g.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "Lie subspace and group live in different matrix spaces");
  }
  AcceptableReport report;
  const Field& f = g.field();
  const auto basis = lie.basis();
  const Field scalars = lie.scalars() == Scalars::full ? f : Field::prime(f.characteristic());
  const std::uint64_t s = scalars.order();

  std::uint64_t total = 1;
  bool over_budget = false;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    total *= s;
    if (total > kExhaustiveBudget) {
      over_budget = true;
      break;
    }
  }
  if (over_budget && !allow_sampling) {
    throw Error(ErrorKind::EnumerationBudgetExceeded,
                "Lie subspace of dimension " + std::to_string(basis.size()) + " over a field of order " +
                    std::to_string(s) + " exceeds the enumeration budget");
  }

  auto check_coefficients = [&](const std::vector<std::uint32_t>& coeffs) {
    SquareMatrix x(f, g.dim());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!coeffs[i]) continue;
      // Prime-field codes coincide with their images in F_q.
      x = x + basis[i].scaled(Elem{coeffs[i]});
    }
    if (!matgrp::is_nilpotent(x)) return true;
    ++report.nilpotents_checked;
    if (g.contains(matgrp::exp_n(x))) return true;
    report.acceptable = false;
    report.witness = x;
    return false;
  };

  std::vector<std::uint32_t> coeffs(basis.size(), 0);
  if (!over_budget) {
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t rest = idx;
      for (auto& c : coeffs) {
        c = static_cast<std::uint32_t>(rest % s);
        rest /= s;
      }
      if (!check_coefficients(coeffs)) return report;
    }
  } else {
    report.sampled = true;
    std::mt19937_64 rng(kSampleSeed);
    std::uniform_int_distribution<std::uint32_t> dist(0, static_cast<std::uint32_t>(s - 1));
    for (std::uint64_t trial = 0; trial < kSampleCount; ++trial) {
      for (auto& c : coeffs) c = dist(rng);
      if (!check_coefficients(coeffs)) return report;
    }
  }

  for (const auto& u : g.elements()) {
    if (!matgrp::is_unipotent(u)) continue;
    ++report.unipotents_checked;
    SquareMatrix x = matgrp::log_n(u);
    if (!lie.contains(x)) {
      report.acceptable = false;
      report.witness = u;
      return report;
    }
  }
  return report;
}

std::size_t linear_span_dimension(const FiniteMatrixGroup& g) {
  LieSubspace span(g.field(), g.dim(), Scalars::full);
  const std::size_t full = g.dim() * g.dim();
  for (const auto& e : g.elements()) {
    if (span.dimension() == full) break;
    span.insert(e);
  }
  return span.dimension();
}

bool is_absolutely_irreducible(const FiniteMatrixGroup& g) { return linear_span_dimension(g) == g.dim() * g.dim(); }

}  // namespace saturate::envelope
