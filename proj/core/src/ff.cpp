#include "saturate/ff.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>

#include "saturate/error.hpp"

namespace saturate::ff {

namespace detail {

struct FieldData {
  std::uint32_t ell = 0;
  unsigned degree = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;
  // exp_table has length 2(q-1) so sums of two logs never need a reduction.
  std::vector<std::uint32_t> exp_table;
  std::vector<std::int32_t> log_table;
  // zech[n] = log(1 + g^n), or -1 when 1 + g^n = 0.
  std::vector<std::int32_t> zech;
};

}  // namespace detail

namespace {

using Coeffs = std::vector<std::uint32_t>;

// ---- dense polynomial arithmetic over F_ell on raw coefficient vectors -------

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs poly_mod(Coeffs a, const Coeffs& f, std::uint32_t ell) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = [&] {
    // f is monic in every caller, but keep this general.
    std::uint64_t lead = f.back(), r = 1, e = ell - 2;
    while (e) {
      if (e & 1) r = r * lead % ell;
      lead = lead * lead % ell;
      e >>= 1;
    }
    return r;
  }();
  while (a.size() > df) {
    const std::uint64_t c = a.back() * lead_inv % ell;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (ell - c) * f[i]) % ell);
    }
    trim(a);
  }
  return a;
}

Coeffs poly_mul(const Coeffs& a, const Coeffs& b, std::uint32_t ell) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % ell;
    }
  }
  Coeffs out(acc.begin(), acc.end());
  trim(out);
  return out;
}

Coeffs poly_mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& f, std::uint32_t ell) {
  return poly_mod(poly_mul(a, b, ell), f, ell);
}

Coeffs poly_powmod(Coeffs base, std::uint64_t e, const Coeffs& f, std::uint32_t ell) {
  Coeffs result{1};
  base = poly_mod(std::move(base), f, ell);
  while (e) {
    if (e & 1) result = poly_mulmod(result, base, f, ell);
    base = poly_mulmod(base, base, f, ell);
    e >>= 1;
  }
  return result;
}

Coeffs poly_gcd(Coeffs a, Coeffs b, std::uint32_t ell) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = poly_mod(a, b, ell);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = ((a % m) + m) % m, r = m;
  std::int64_t old_s = 1, s = 0;
  while (r) {
    const std::int64_t t = old_r / r;
    old_r = std::exchange(r, old_r - t * r);
    old_s = std::exchange(s, old_s - t * s);
  }
  return ((old_s % m) + m) % m;
}

// ---- packed codes <-> coefficient vectors -----------------------------------

Coeffs code_to_coeffs(std::uint32_t code, std::uint32_t ell, unsigned k) {
  Coeffs c(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    c[i] = code % ell;
    code /= ell;
  }
  return c;
}

std::uint32_t coeffs_to_code(const Coeffs& c, std::uint32_t ell) {
  std::uint64_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * ell + c[i];
  return static_cast<std::uint32_t>(code);
}

// ---- process-wide cache ------------------------------------------------------

struct Registry {
  std::recursive_mutex mutex;
  std::map<std::pair<std::uint32_t, Coeffs>, std::shared_ptr<const detail::FieldData>> fields;
  // Compatible primitive polynomial of each degree, keyed by (ell, degree).
  std::map<std::pair<std::uint32_t, unsigned>, Coeffs> compatible;
  std::map<std::pair<std::uint32_t, unsigned>, Coeffs> defaults;
};

Registry& registry() {
  static Registry r;
  return r;
}

std::shared_ptr<const detail::FieldData> build_field(std::uint32_t ell, unsigned k, Coeffs modulus);

const Coeffs& compatible_poly(std::uint32_t ell, unsigned k);

// Evaluates a polynomial with prime-field coefficients at x using the fast tables.
std::uint32_t eval_prime_poly(const detail::FieldData& d, const Coeffs& p, std::uint32_t x) {
  auto mul = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    if (!a || !b) return 0;
    return d.exp_table[d.log_table[a] + d.log_table[b]];
  };
  auto add = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    if (!a) return b;
    if (!b) return a;
    std::int64_t diff = static_cast<std::int64_t>(d.log_table[b]) - d.log_table[a];
    if (diff < 0) diff += d.q - 1;
    const std::int32_t z = d.zech[diff];
    if (z < 0) return 0;
    return d.exp_table[d.log_table[a] + z];
  };
  std::uint32_t acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = add(mul(acc, x), p[i]);
  return acc;
}

std::uint32_t fast_pow(const detail::FieldData& d, std::uint32_t a, std::uint64_t e) {
  if (!a) return e == 0 ? 1 : 0;
  const std::uint64_t n = d.q - 1;
  return d.exp_table[(static_cast<std::uint64_t>(d.log_table[a]) * (e % n)) % n];
}

std::shared_ptr<const detail::FieldData> build_field(std::uint32_t ell, unsigned k, Coeffs modulus) {
  auto data = std::make_shared<detail::FieldData>();
  data->ell = ell;
  data->degree = k;
  data->q = static_cast<std::uint32_t>(ipow(ell, k));
  data->modulus = modulus;
  const std::uint32_t q = data->q;
  const std::uint64_t n = q - 1;

  // Slow multiplication by a fixed primitive element to seed the tables.
  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
    if (k == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % ell);
    return coeffs_to_code(
        [&] {
          Coeffs r = poly_mulmod(code_to_coeffs(a, ell, k), code_to_coeffs(b, ell, k), modulus, ell);
          r.resize(k, 0);
          return r;
        }(),
        ell);
  };
  auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };

  const auto factors = prime_factors(n);
  std::uint32_t g0 = 1;
  if (n > 1) {
    for (std::uint32_t c = 2; c < q; ++c) {
      bool primitive = true;
      for (auto r : factors) {
        if (slow_pow(c, n / r) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        g0 = c;
        break;
      }
    }
  }

  std::vector<std::uint32_t> exp0(n);
  std::vector<std::int32_t> log0(q, -1);
  std::uint32_t cur = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    exp0[i] = cur;
    log0[cur] = static_cast<std::int32_t>(i);
    cur = slow_mul(cur, g0);
  }

  auto install_tables = [&](const std::vector<std::uint32_t>& exp, const std::vector<std::int32_t>& log) {
    data->exp_table.assign(2 * n + 1, 1);
    for (std::uint64_t i = 0; i < 2 * n; ++i) data->exp_table[i] = exp[i % n];
    data->log_table = log;
    data->zech.assign(n, -1);
    for (std::uint64_t i = 0; i < n; ++i) {
      // 1 + g^i computed coordinate-wise: only the constant coordinate changes.
      std::uint32_t x = exp[i];
      std::uint32_t c0 = x % ell;
      std::uint32_t y = x - c0 + (c0 + 1) % ell;
      data->zech[i] = log[y];
    }
  };
  install_tables(exp0, log0);

  // Re-base the logarithm on the compatible primitive root.
  std::uint32_t gamma = 0;
  const auto key = std::make_pair(ell, k);
  auto& reg = registry();
  auto found = reg.compatible.find(key);
  if (found == reg.compatible.end() && reg.defaults.count(key) && reg.defaults.at(key) == modulus) {
    // This is the default field of its degree: choose the compatible root here.
    std::vector<std::pair<unsigned, const Coeffs*>> divisor_polys;
    for (unsigned d = 1; d < k; ++d) {
      if (k % d == 0) divisor_polys.emplace_back(d, &compatible_poly(ell, d));
    }
    for (std::uint32_t c = 1; c < q && !gamma; ++c) {
      if (std::gcd(static_cast<std::uint64_t>(log0[c]), n) != 1 && n > 1) continue;
      bool ok = true;
      for (auto& [d, poly] : divisor_polys) {
        const std::uint64_t e = n / (ipow(ell, d) - 1);
        if (eval_prime_poly(*data, *poly, fast_pow(*data, c, e)) != 0) {
          ok = false;
          break;
        }
      }
      if (ok) gamma = c;
    }
    if (!gamma) throw std::logic_error("no compatible primitive root found");
    // Minimal polynomial prod_i (x - gamma^(ell^i)) lands in the prime field.
    std::vector<std::uint32_t> conj;
    std::uint32_t y = gamma;
    for (unsigned i = 0; i < k; ++i) {
      conj.push_back(y);
      y = fast_pow(*data, y, ell);
    }
    // Multiply out using field arithmetic on codes.
    auto fadd = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
      if (!a) return b;
      if (!b) return a;
      std::int64_t diff = static_cast<std::int64_t>(data->log_table[b]) - data->log_table[a];
      if (diff < 0) diff += n;
      const std::int32_t z = data->zech[diff];
      return z < 0 ? 0 : data->exp_table[data->log_table[a] + z];
    };
    auto fmul = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
      if (!a || !b) return 0;
      return data->exp_table[data->log_table[a] + data->log_table[b]];
    };
    auto fneg = [&](std::uint32_t a) -> std::uint32_t {
      if (!a || ell == 2) return a;
      return data->exp_table[data->log_table[a] + n / 2];
    };
    std::vector<std::uint32_t> poly{1};
    for (auto r : conj) {
      std::vector<std::uint32_t> next(poly.size() + 1, 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] = fadd(next[i + 1], poly[i]);
        next[i] = fadd(next[i], fmul(fneg(r), poly[i]));
      }
      poly = std::move(next);
    }
    for (auto c : poly) {
      if (c >= ell) throw std::logic_error("minimal polynomial left the prime field");
    }
    reg.compatible[key] = poly;
  } else {
    const Coeffs& cpoly = compatible_poly(ell, k);
    for (std::uint32_t c = 1; c < q; ++c) {
      if (eval_prime_poly(*data, cpoly, c) == 0) {
        gamma = c;
        break;
      }
    }
    if (!gamma) throw std::logic_error("compatible polynomial has no root in field");
  }

  if (n > 1) {
    const std::int64_t a = log0[gamma];
    const std::int64_t a_inv = mod_inverse(a, static_cast<std::int64_t>(n));
    std::vector<std::uint32_t> exp1(n);
    std::vector<std::int32_t> log1(q, -1);
    for (std::uint64_t j = 0; j < n; ++j) {
      exp1[j] = exp0[(j * static_cast<std::uint64_t>(a)) % n];
    }
    for (std::uint32_t x = 1; x < q; ++x) {
      log1[x] = static_cast<std::int32_t>((static_cast<std::int64_t>(log0[x]) * a_inv) % static_cast<std::int64_t>(n));
    }
    install_tables(exp1, log1);
  }
  return data;
}

const Coeffs& compatible_poly(std::uint32_t ell, unsigned k) {
  auto& reg = registry();
  std::lock_guard lock(reg.mutex);
  const auto key = std::make_pair(ell, k);
  auto it = reg.compatible.find(key);
  if (it != reg.compatible.end()) return it->second;
  // Building the default field of this degree records the polynomial.
  (void)Field::create(ell, k);
  return reg.compatible.at(key);
}

}  // namespace

// ---- free helpers ------------------------------------------------------------

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

bool is_irreducible_mod(std::uint32_t ell, std::span<const std::uint32_t> monic) {
  Coeffs f(monic.begin(), monic.end());
  trim(f);
  if (f.size() < 2) return false;
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  if (k == 1) return true;
  const Coeffs x{0, 1};
  // x^(ell^j) mod f for j = 0..k
  std::vector<Coeffs> frob_powers{x};
  for (unsigned j = 1; j <= k; ++j) frob_powers.push_back(poly_powmod(frob_powers.back(), ell, f, ell));
  Coeffs diff = frob_powers[k];
  diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
  diff[1] = (diff[1] + ell - 1) % ell;
  trim(diff);
  if (!diff.empty()) return false;
  for (auto r : prime_factors(k)) {
    Coeffs h = frob_powers[k / r];
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + ell - 1) % ell;
    trim(h);
    Coeffs g = poly_gcd(f, h, ell);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t ell, unsigned degree) {
  if (degree == 1) return {0, 1};
  // Odometer over (c0, c1, ..., c_{k-1}) with c0 most significant.
  Coeffs c(degree, 0);
  while (true) {
    Coeffs f = c;
    f.push_back(1);
    if (c[0] != 0 && is_irreducible_mod(ell, f)) return f;
    int i = static_cast<int>(degree) - 1;
    while (i >= 0) {
      if (++c[i] < ell) break;
      c[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  throw std::logic_error("no irreducible polynomial found");
}

// ---- Field -----------------------------------------------------------------

Field Field::create(std::uint32_t ell, unsigned degree, std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(ell)) throw Error(ErrorKind::NotPrime, std::to_string(ell) + " is not prime");
  if (degree == 0) throw Error(ErrorKind::DegreeMismatch, "degree must be positive");
  {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < degree; ++i) {
      q *= ell;
      if (q > kMaxFieldOrder) {
        throw Error(ErrorKind::FieldTooLarge, std::to_string(ell) + "^" + std::to_string(degree) +
                                                  " exceeds the supported field size 2^20");
      }
    }
  }
  auto& reg = registry();
  std::lock_guard lock(reg.mutex);
  const auto dkey = std::make_pair(ell, degree);
  if (!reg.defaults.count(dkey)) reg.defaults[dkey] = default_modulus(ell, degree);

  Coeffs mod;
  if (modulus) {
    mod = *modulus;
    for (auto& c : mod) {
      if (c >= ell) throw Error(ErrorKind::ReducibleModulus, "modulus coefficient not reduced mod ell");
    }
    trim(mod);
    if (mod.empty() || mod.back() != 1) throw Error(ErrorKind::ReducibleModulus, "modulus must be monic");
    if (mod.size() - 1 != degree) {
      throw Error(ErrorKind::DegreeMismatch, "modulus degree " + std::to_string(mod.size() - 1) +
                                                 " differs from requested degree " + std::to_string(degree));
    }
    if (!is_irreducible_mod(ell, mod)) throw Error(ErrorKind::ReducibleModulus, "modulus is reducible");
  } else {
    mod = reg.defaults[dkey];
  }

  // Ensure the default field of this degree exists first; it fixes the
  // compatible polynomial every other modulus of that degree relies on.
  if (mod != reg.defaults[dkey] && !reg.compatible.count(dkey)) (void)Field::create(ell, degree);

  const auto key = std::make_pair(ell, mod);
  auto it = reg.fields.find(key);
  if (it != reg.fields.end()) return Field(it->second);
  auto data = build_field(ell, degree, mod);
  reg.fields[key] = data;
  return Field(data);
}

std::uint32_t Field::characteristic() const noexcept { return data_->ell; }
unsigned Field::degree() const noexcept { return data_->degree; }
std::uint32_t Field::order() const noexcept { return data_->q; }
const std::vector<std::uint32_t>& Field::modulus() const noexcept { return data_->modulus; }

Elem Field::from_int(std::int64_t value) const noexcept {
  const std::int64_t ell = data_->ell;
  std::int64_t r = value % ell;
  if (r < 0) r += ell;
  return Elem{static_cast<std::uint32_t>(r)};
}

Elem Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > data_->degree) {
    throw Error(ErrorKind::DegreeMismatch, "element has " + std::to_string(coeffs.size()) +
                                               " coordinates, field degree is " + std::to_string(data_->degree));
  }
  Coeffs c(coeffs.begin(), coeffs.end());
  for (auto v : c) {
    if (v >= data_->ell) throw Error(ErrorKind::MalformedInput, "coordinate not reduced mod ell");
  }
  return Elem{coeffs_to_code(c, data_->ell)};
}

std::vector<std::uint32_t> Field::coeffs(Elem x) const { return code_to_coeffs(x.code, data_->ell, data_->degree); }

Elem Field::modulus_root() const noexcept {
  if (data_->degree == 1) return Elem{static_cast<std::uint32_t>((data_->ell - data_->modulus[0]) % data_->ell)};
  return Elem{data_->ell};
}

Elem Field::primitive() const noexcept { return Elem{data_->exp_table[data_->q > 1 ? 1 % (data_->q - 1) : 0]}; }

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out(data_->q);
  for (std::uint32_t i = 0; i < data_->q; ++i) out[i] = Elem{i};
  return out;
}

std::vector<Elem> Field::prime_basis() const {
  std::vector<Elem> out;
  std::uint32_t code = 1;
  for (unsigned i = 0; i < data_->degree; ++i) {
    out.push_back(Elem{code});
    code *= data_->ell;
  }
  return out;
}

Elem Field::add(Elem a, Elem b) const noexcept {
  const auto& d = *data_;
  if (d.degree == 1) return Elem{(a.code + b.code) % d.ell};
  if (!a.code) return b;
  if (!b.code) return a;
  std::int64_t diff = static_cast<std::int64_t>(d.log_table[b.code]) - d.log_table[a.code];
  if (diff < 0) diff += d.q - 1;
  const std::int32_t z = d.zech[diff];
  if (z < 0) return Elem{0};
  return Elem{d.exp_table[d.log_table[a.code] + z]};
}

Elem Field::neg(Elem a) const noexcept {
  const auto& d = *data_;
  if (!a.code || d.ell == 2) return a;
  if (d.degree == 1) return Elem{d.ell - a.code};
  return Elem{d.exp_table[d.log_table[a.code] + (d.q - 1) / 2]};
}

Elem Field::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const noexcept {
  if (!a.code || !b.code) return Elem{0};
  const auto& d = *data_;
  return Elem{d.exp_table[d.log_table[a.code] + d.log_table[b.code]]};
}

Elem Field::inv(Elem a) const {
  if (!a.code) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const auto& d = *data_;
  const std::uint32_t n = d.q - 1;
  return Elem{d.exp_table[(n - d.log_table[a.code]) % n]};
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, std::int64_t e) const {
  if (!a.code) {
    if (e < 0) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
    return Elem{e == 0 ? 1u : 0u};
  }
  const auto& d = *data_;
  const std::int64_t n = d.q - 1;
  std::int64_t r = (static_cast<std::int64_t>(d.log_table[a.code]) * (e % n)) % n;
  if (r < 0) r += n;
  return Elem{d.exp_table[r]};
}

Elem Field::frobenius(Elem a) const noexcept {
  if (!a.code) return a;
  const auto& d = *data_;
  const std::uint64_t n = d.q - 1;
  return Elem{d.exp_table[(static_cast<std::uint64_t>(d.log_table[a.code]) * d.ell) % n]};
}

std::int64_t Field::log(Elem a) const noexcept { return data_->log_table[a.code]; }

bool operator==(const Field& a, const Field& b) noexcept {
  if (a.data_ == b.data_) return true;
  return a.data_->ell == b.data_->ell && a.data_->modulus == b.data_->modulus;
}

std::ostream& operator<<(std::ostream& os, const Field& f) {
  os << "GF(" << f.characteristic();
  if (f.degree() > 1) os << "^" << f.degree();
  return os << ")";
}

// ---- Embedding -------------------------------------------------------------

Embedding::Embedding(const Field& source, const Field& target) : source_(source), target_(target), stride_(0) {
  if (source.characteristic() != target.characteristic() || target.degree() % source.degree() != 0) {
    std::ostringstream msg;
    msg << "cannot embed " << source << " into " << target;
    throw Error(ErrorKind::NoEmbedding, msg.str());
  }
  stride_ = (static_cast<std::uint64_t>(target.order()) - 1) / (source.order() - 1);
}

Elem Embedding::operator()(Elem x) const noexcept {
  if (!x.code) return x;
  const auto& s = *source_.data_;
  const auto& t = *target_.data_;
  const std::uint64_t n = t.q - 1;
  return Elem{t.exp_table[(static_cast<std::uint64_t>(s.log_table[x.code]) * stride_) % n]};
}

// ---- FieldElem ---------------------------------------------------------------

namespace {
void require_same(const Field& a, const Field& b) {
  if (!(a == b)) {
    std::ostringstream msg;
    msg << a << " vs " << b;
    throw Error(ErrorKind::FieldMismatch, msg.str());
  }
}
}  // namespace

FieldElem FieldElem::operator+(const FieldElem& o) const {
  require_same(field_, o.field_);
  return {field_, field_.add(value_, o.value_)};
}
FieldElem FieldElem::operator-(const FieldElem& o) const {
  require_same(field_, o.field_);
  return {field_, field_.sub(value_, o.value_)};
}
FieldElem FieldElem::operator*(const FieldElem& o) const {
  require_same(field_, o.field_);
  return {field_, field_.mul(value_, o.value_)};
}
FieldElem FieldElem::operator/(const FieldElem& o) const {
  require_same(field_, o.field_);
  return {field_, field_.div(value_, o.value_)};
}

Field field_create(std::uint32_t ell, unsigned k, std::optional<std::vector<std::uint32_t>> modulus) {
  return Field::create(ell, k, std::move(modulus));
}

FieldElem frobenius_endo(const FieldElem& x) { return {x.field(), x.field().frobenius(x.value())}; }

FieldElem embed_subfield(const FieldElem& x, const Field& target) {
  return {target, Embedding(x.field(), target)(x.value())};
}

}  // namespace saturate::ff
