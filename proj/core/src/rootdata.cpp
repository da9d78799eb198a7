#include "saturate/rootdata.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "saturate/error.hpp"

namespace saturate::rootdata {

namespace {

bool valid_type(char type, unsigned rank) {
  switch (type) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 2;
    case 'D': return rank >= 3;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

std::string type_name(char type, unsigned rank) { return std::string(1, type) + std::to_string(rank); }

std::vector<Vec> cartan_matrix(char type, unsigned n) {
  std::vector<Vec> a(n, Vec(n, 0));
  for (unsigned i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](unsigned i, unsigned j) {  // 1-based, simply laced edge
    a[i - 1][j - 1] = -1;
    a[j - 1][i - 1] = -1;
  };
  switch (type) {
    case 'A':
      for (unsigned i = 1; i < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (unsigned i = 1; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -1;
      a[n - 1][n - 2] = -2;
      break;
    case 'C':
      for (unsigned i = 1; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;
      a[n - 1][n - 2] = -1;
      break;
    case 'D':
      for (unsigned i = 1; i + 2 < n; ++i) link(i, i + 1);
      link(n - 2, n - 1);
      link(n - 2, n);
      break;
    case 'E':
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (unsigned i = 4; i < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(1, 2);
      a[1][2] = -1;
      a[2][1] = -2;
      link(3, 4);
      break;
    case 'G':
      a[0][1] = -3;
      a[1][0] = -1;
      break;
  }
  return a;
}

std::int64_t dot(const Vec& a, const Vec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::int64_t height(const Vec& root) { return std::accumulate(root.begin(), root.end(), std::int64_t{0}); }

}  // namespace

std::string RootSystem::name() const {
  std::string s;
  for (const auto& c : components_) {
    if (!s.empty()) s += "x";
    s += type_name(c.type, c.rank);
  }
  return s.empty() ? "trivial" : s;
}

const Vec& RootSystem::highest_root() const {
  if (!is_irreducible()) throw Error(ErrorKind::InvalidType, "highest root of a reducible system " + name());
  return positive_[highest_.front()];
}

const Vec& RootSystem::highest_short_root() const {
  if (!is_irreducible()) throw Error(ErrorKind::InvalidType, "highest short root of a reducible system " + name());
  return positive_[highest_short_.front()];
}

std::vector<Vec> RootSystem::highest_roots() const {
  std::vector<Vec> out;
  for (auto idx : highest_) out.push_back(positive_[idx]);
  return out;
}

Rational RootSystem::root_length(const Vec& root) const {
  // (alpha_i, alpha_j) = a_ij * len_i / 2
  std::int64_t twice = 0;
  for (unsigned i = 0; i < rank(); ++i) {
    if (!root[i]) continue;
    for (unsigned j = 0; j < rank(); ++j) twice += root[i] * root[j] * cartan_[i][j] * lengths_[i];
  }
  return Rational(twice, 2);
}

Vec RootSystem::coroot(const Vec& root) const {
  const Rational len = root_length(root);
  Vec out(rank());
  for (unsigned i = 0; i < rank(); ++i) {
    const Rational c = Rational(root[i] * lengths_[i]) / len;
    if (c.denominator() != 1) throw Error(ErrorKind::WeightLatticeMismatch, "vector is not a root");
    out[i] = c.numerator();
  }
  return out;
}

std::int64_t RootSystem::pairing(const Vec& weight, const Vec& root) const {
  if (weight.size() != rank()) {
    throw Error(ErrorKind::WeightLatticeMismatch,
                "weight of length " + std::to_string(weight.size()) + " for rank " + std::to_string(rank()));
  }
  return dot(weight, coroot(root));
}

Vec RootSystem::root_as_weight(const Vec& root) const {
  Vec w(rank(), 0);
  for (unsigned i = 0; i < rank(); ++i)
    for (unsigned j = 0; j < rank(); ++j) w[i] += cartan_[i][j] * root[j];
  return w;
}

bool RootSystem::is_dominant(const Vec& weight) const {
  if (weight.size() != rank()) throw Error(ErrorKind::WeightLatticeMismatch, "weight length does not match rank");
  return std::all_of(weight.begin(), weight.end(), [](std::int64_t x) { return x >= 0; });
}

void RootSystem::finish() {
  const unsigned n = rank();
  // Symmetrize: a_ij len_i = a_ji len_j, starting each block at 6 so every
  // ratio stays integral, then divide by the block gcd.
  lengths_.assign(n, 0);
  for (const auto& comp : components_) {
    lengths_[comp.offset] = 6;
    bool changed = true;
    while (changed) {
      changed = false;
      for (unsigned i = comp.offset; i < comp.offset + comp.rank; ++i) {
        if (!lengths_[i]) continue;
        for (unsigned j = comp.offset; j < comp.offset + comp.rank; ++j) {
          if (lengths_[j] || !cartan_[i][j]) continue;
          lengths_[j] = cartan_[i][j] * lengths_[i] / cartan_[j][i];
          changed = true;
        }
      }
    }
    std::int64_t g = 0;
    for (unsigned i = comp.offset; i < comp.offset + comp.rank; ++i) g = std::gcd(g, lengths_[i]);
    for (unsigned i = comp.offset; i < comp.offset + comp.rank; ++i) lengths_[i] /= g;
  }

  // Root strings: beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0,
  // where p counts how often alpha_i can be subtracted from beta.
  std::set<Vec> known;
  std::vector<Vec> layer;
  for (unsigned i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    layer.push_back(e);
    known.insert(e);
  }
  positive_.clear();
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end(), std::greater<>());
    std::vector<Vec> next;
    for (const auto& beta : layer) {
      positive_.push_back(beta);
      for (unsigned i = 0; i < n; ++i) {
        std::int64_t p = 0;
        Vec down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.contains(down)) break;
          ++p;
        }
        std::int64_t pair = 0;
        for (unsigned j = 0; j < n; ++j) pair += cartan_[i][j] * beta[j];
        if (p - pair > 0) {
          Vec up = beta;
          up[i] += 1;
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    layer = std::move(next);
  }

  highest_.clear();
  highest_short_.clear();
  for (const auto& comp : components_) {
    auto in_comp = [&](const Vec& r) {
      for (unsigned i = 0; i < n; ++i) {
        if (r[i] && (i < comp.offset || i >= comp.offset + comp.rank)) return false;
      }
      return true;
    };
    std::int64_t min_len = *std::min_element(lengths_.begin() + comp.offset,
                                             lengths_.begin() + comp.offset + comp.rank);
    std::size_t best = 0, best_short = 0;
    std::int64_t best_h = -1, best_short_h = -1;
    for (std::size_t k = 0; k < positive_.size(); ++k) {
      const auto& r = positive_[k];
      if (!in_comp(r)) continue;
      const std::int64_t h = height(r);
      if (h > best_h) best_h = h, best = k;
      if (root_length(r) == Rational(min_len) && h > best_short_h) best_short_h = h, best_short = k;
    }
    highest_.push_back(best);
    highest_short_.push_back(best_short);
  }
}

RootSystem root_system(char type, unsigned rank) {
  if (!valid_type(type, rank)) throw Error(ErrorKind::InvalidType, "no root system of type " + type_name(type, rank));
  RootSystem rs;
  rs.components_ = {Component{type, rank, 0}};
  rs.cartan_ = cartan_matrix(type, rank);
  rs.finish();
  if (rs.positive_.size() != expected_positive_root_count(type, rank)) {
    throw Error(ErrorKind::InvalidType, "positive root count mismatch for " + type_name(type, rank));
  }
  return rs;
}

RootSystem product(std::span<const RootSystem> factors) {
  RootSystem rs;
  unsigned total = 0;
  for (const auto& f : factors) total += f.rank();
  rs.cartan_.assign(total, Vec(total, 0));
  unsigned offset = 0;
  for (const auto& f : factors) {
    for (const auto& c : f.components_) rs.components_.push_back(Component{c.type, c.rank, c.offset + offset});
    for (unsigned i = 0; i < f.rank(); ++i)
      for (unsigned j = 0; j < f.rank(); ++j) rs.cartan_[offset + i][offset + j] = f.cartan_[i][j];
    offset += f.rank();
  }
  rs.finish();
  return rs;
}

std::size_t expected_positive_root_count(char type, unsigned n) {
  switch (type) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
    default: throw Error(ErrorKind::InvalidType, std::string("unknown type ") + type);
  }
}

std::int64_t coxeter_number(const RootSystem& rs) {
  std::int64_t h = 1;
  for (const auto& r : rs.highest_roots()) h = std::max(h, 1 + height(r));
  return h;
}

std::int64_t coxeter_via_rho(const RootSystem& rs) { return rs.pairing(rs.rho(), rs.highest_short_root()) + 1; }

RepWeights trivial_rep(const RootSystem& rs) { return RepWeights{rs, {Vec(rs.rank(), 0)}}; }

RepWeights standard_rep(const RootSystem& rs) {
  if (!rs.is_irreducible() || rs.components().front().type != 'A') {
    throw Error(ErrorKind::InvalidType, "standard representation is defined here for type A only");
  }
  const unsigned r = rs.rank();
  std::vector<Vec> weights;
  for (unsigned j = 0; j <= r; ++j) {
    Vec w(r, 0);
    if (j < r) w[j] += 1;
    if (j > 0) w[j - 1] -= 1;
    weights.push_back(std::move(w));
  }
  return RepWeights{rs, std::move(weights)};
}

RepWeights exterior_power(const RepWeights& rep, unsigned i) {
  const std::size_t d = rep.weights.size();
  RepWeights out{rep.system, {}};
  if (i > d) return out;
  std::vector<bool> mask(d, false);
  std::fill(mask.begin(), mask.begin() + i, true);
  do {
    Vec w(rep.system.rank(), 0);
    for (std::size_t k = 0; k < d; ++k) {
      if (!mask[k]) continue;
      for (unsigned c = 0; c < w.size(); ++c) w[c] += rep.weights[k][c];
    }
    out.weights.push_back(std::move(w));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

RepWeights adjoint_rep(const RootSystem& rs) {
  RepWeights out{rs, {}};
  for (const auto& r : rs.positive_roots()) {
    Vec w = rs.root_as_weight(r);
    Vec neg = w;
    for (auto& x : neg) x = -x;
    out.weights.push_back(std::move(w));
    out.weights.push_back(std::move(neg));
  }
  for (unsigned i = 0; i < rs.rank(); ++i) out.weights.push_back(Vec(rs.rank(), 0));
  return out;
}

RepWeights weyl_orbit(const RootSystem& rs, const Vec& dominant) {
  if (!rs.is_dominant(dominant)) throw Error(ErrorKind::NotDominant, "orbit seed must be dominant");
  std::set<Vec> seen{dominant};
  std::vector<Vec> queue{dominant};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const Vec w = queue[k];
    for (unsigned i = 0; i < rs.rank(); ++i) {
      if (!w[i]) continue;
      // s_i(w) = w - <w, alpha_i^vee> alpha_i
      Vec s = w;
      for (unsigned j = 0; j < rs.rank(); ++j) s[j] -= w[i] * rs.cartan()[j][i];
      if (seen.insert(s).second) queue.push_back(std::move(s));
    }
  }
  return RepWeights{rs, std::move(queue)};
}

RepWeights external_tensor(const RepWeights& a, const RepWeights& b) {
  const RootSystem factors[] = {a.system, b.system};
  RepWeights out{product(factors), {}};
  for (const auto& wa : a.weights) {
    for (const auto& wb : b.weights) {
      Vec w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.weights.push_back(std::move(w));
    }
  }
  return out;
}

std::int64_t dynkin_height(const RepWeights& rep) {
  const RootSystem& rs = rep.system;
  Vec coroot_sum(rs.rank(), 0);
  for (const auto& r : rs.positive_roots()) {
    const Vec c = rs.coroot(r);
    for (unsigned i = 0; i < rs.rank(); ++i) coroot_sum[i] += c[i];
  }
  std::int64_t best = 0;
  bool first = true;
  for (const auto& w : rep.weights) {
    if (w.size() != rs.rank()) {
      throw Error(ErrorKind::WeightLatticeMismatch,
                  "weight of length " + std::to_string(w.size()) + " for " + rs.name());
    }
    const std::int64_t h = dot(w, coroot_sum);
    if (first || h > best) best = h, first = false;
  }
  return best;
}

Vec lowest_weight(const RootSystem& rs, const Vec& dominant) {
  if (!rs.is_dominant(dominant)) throw Error(ErrorKind::NotDominant, "highest weight must be dominant");
  Vec w = dominant;
  bool moved = true;
  while (moved) {
    moved = false;
    for (unsigned i = 0; i < rs.rank(); ++i) {
      if (w[i] <= 0) continue;
      const std::int64_t c = w[i];
      for (unsigned j = 0; j < rs.rank(); ++j) w[j] -= c * rs.cartan()[j][i];
      moved = true;
    }
  }
  return w;
}

Rational dynkin_height_from_highest(const RootSystem& rs, const Vec& highest) {
  const Vec low = lowest_weight(rs, highest);
  const unsigned n = rs.rank();
  // Solve cartan * m = highest - low over Q.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) a[i][j] = rs.cartan()[i][j];
    a[i][n] = highest[i] - low[i];
  }
  for (unsigned col = 0; col < n; ++col) {
    unsigned piv = col;
    while (a[piv][col].numerator() == 0) ++piv;
    std::swap(a[piv], a[col]);
    for (unsigned i = 0; i < n; ++i) {
      if (i == col || a[i][col].numerator() == 0) continue;
      const Rational f = a[i][col] / a[col][col];
      for (unsigned j = col; j <= n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  Rational sum = 0;
  for (unsigned i = 0; i < n; ++i) sum += a[i][n] / a[i][i];
  return sum;
}

bool is_low_height(const RepWeights& rep, std::int64_t ell) { return ell > dynkin_height(rep); }

std::int64_t height_under_tensor(std::span<const RepWeights> factors) {
  if (factors.empty()) return 0;
  std::int64_t sum = 0;
  RepWeights total = factors.front();
  sum += dynkin_height(total);
  for (std::size_t k = 1; k < factors.size(); ++k) {
    sum += dynkin_height(factors[k]);
    total = external_tensor(total, factors[k]);
  }
  const std::int64_t direct = dynkin_height(total);
  if (direct != sum) {
    throw Error(ErrorKind::HypothesisViolated,
                "factor heights sum to " + std::to_string(sum) + " but the product has height " + std::to_string(direct));
  }
  return sum;
}

bool height_inequality_holds(const RepWeights& sub, const RepWeights& ambient) {
  return dynkin_height(sub) <= dynkin_height(ambient);
}

AlcoveReport low_alcove_check(const RootSystem& rs, const Vec& mu, std::int64_t n, std::int64_t ell) {
  if (!rs.is_dominant(mu)) throw Error(ErrorKind::NotDominant, "mu must be dominant");
  Vec shifted = rs.rho();
  for (unsigned i = 0; i < rs.rank(); ++i) shifted[i] += mu[i];
  const std::int64_t pair = rs.pairing(shifted, rs.highest_short_root());
  return AlcoveReport{pair, pair <= 2 * (n - 1), pair < ell};
}

namespace {

// beta = c * alpha for some rational c; returns c as (num, den) when it exists.
std::optional<Rational> proportional(const Vec& alpha, const Vec& beta) {
  std::optional<Rational> c;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) {
      if (beta[i] != 0) return std::nullopt;
      continue;
    }
    const Rational r(beta[i], alpha[i]);
    if (c && *c != r) return std::nullopt;
    c = r;
  }
  return c;
}

}  // namespace

WeightConditionReport weight_conditions(std::span<const Vec> weights_on_v, std::int64_t ell,
                                        std::optional<std::vector<Vec>> roots) {
  std::set<Vec> end_weights;
  for (const auto& a : weights_on_v) {
    for (const auto& b : weights_on_v) {
      if (a.size() != b.size()) throw Error(ErrorKind::WeightLatticeMismatch, "weights of different lengths");
      Vec d(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
      end_weights.insert(std::move(d));
    }
  }
  std::vector<Vec> phi;
  if (roots) {
    phi = *roots;
  } else {
    for (const auto& w : end_weights) {
      if (std::any_of(w.begin(), w.end(), [](std::int64_t x) { return x != 0; })) phi.push_back(w);
    }
  }

  WeightConditionReport report;
  std::map<Vec, int> counts;
  for (const auto& a : phi) {
    if (++counts[a] == 2 && report.multiplicity_one) {
      report.multiplicity_one = false;
      report.multiplicity_witness = a;
    }
  }
  for (std::size_t i = 0; i < phi.size() && report.reduced; ++i) {
    for (std::size_t j = 0; j < phi.size(); ++j) {
      auto c = proportional(phi[i], phi[j]);
      if (c && *c != Rational(1) && *c != Rational(-1)) {
        report.reduced = false;
        report.reducedness_witness = std::make_pair(phi[i], phi[j]);
        break;
      }
    }
  }
  // i * alpha can only be an End(V)-weight for i up to the largest coordinate spread.
  std::int64_t bound = 0;
  for (const auto& w : end_weights)
    for (auto x : w) bound = std::max(bound, x < 0 ? -x : x);
  for (const auto& a : phi) {
    if (!report.exponents_below_ell) break;
    if (std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; })) continue;
    for (std::int64_t i = 1; i <= bound; ++i) {
      Vec m = a;
      for (auto& x : m) x *= i;
      if (end_weights.contains(m) && i >= ell) {
        report.exponents_below_ell = false;
        report.exponent_witness = std::make_pair(a, i);
        break;
      }
    }
  }
  return report;
}

SimpleGroupData simple_group_data(char type, unsigned rank) {
  const bool ok = (type == 'A' && rank >= 1) || (type == 'B' && rank >= 3) || (type == 'C' && rank >= 2) ||
                  (type == 'D' && rank >= 4) || (type == 'E' && rank >= 6 && rank <= 8) ||
                  (type == 'F' && rank == 4) || (type == 'G' && rank == 2);
  if (!ok) throw Error(ErrorKind::InvalidType, "no table entry for " + type_name(type, rank));
  const std::int64_t m = rank;
  std::int64_t center = 1, dim = 0;
  switch (type) {
    case 'A': center = m + 1, dim = m + 1; break;
    case 'B': center = 2, dim = 2 * m + 1; break;
    case 'C': center = 2, dim = 2 * m; break;
    case 'D': center = 4, dim = 2 * m; break;
    case 'E':
      center = m == 6 ? 3 : m == 7 ? 2 : 1;
      dim = m == 6 ? 27 : m == 7 ? 56 : 248;
      break;
    case 'F': dim = 26; break;
    case 'G': dim = 7; break;
  }
  return SimpleGroupData{type, rank, center, dim, coxeter_number(root_system(type, rank))};
}

std::vector<Vec> tensor_weight_split(const RootSystem& product_system, const Vec& weight) {
  if (weight.size() != product_system.rank()) {
    throw Error(ErrorKind::WeightLatticeMismatch, "weight length does not match " + product_system.name());
  }
  std::vector<Vec> out;
  for (const auto& c : product_system.components()) {
    out.emplace_back(weight.begin() + c.offset, weight.begin() + c.offset + c.rank);
  }
  return out;
}

}  // namespace saturate::rootdata
