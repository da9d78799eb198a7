#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

namespace saturate::ff {

/// Largest field size the library will construct. Envelope and saturation
/// routines enumerate scalars, so anything bigger is rejected up front.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 20;

/// An element of a finite field, stored as its packed coordinate vector
/// `sum c_i * ell^i` in the power basis of the modulus root. Zero is code 0,
/// one is code 1, and codes below `ell` are exactly the prime subfield.
struct Elem {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(Elem, Elem) = default;
};

namespace detail {
struct FieldData;
}

/// F_{ell^k} given by a monic irreducible modulus over F_ell.
///
/// A `Field` is a cheap shared handle to immutable tables (discrete log,
/// antilog and Zech logarithms), so copies may be passed around freely and
/// used from several threads. Fields with the same characteristic and modulus
/// share their tables through a process-wide cache.
///
/// The logarithm base of every field is a root of a fixed compatible family
/// of primitive polynomials (the same norm-compatibility condition Conway
/// polynomials satisfy, chosen lexicographically). Subfield embeddings are
/// then simply `g_small^j -> g_big^(j * (q_big - 1) / (q_small - 1))`, which
/// makes them functorial under composition.
class Field {
 public:
  /// Builds F_{ell^degree}. Without a modulus the lexicographically least
  /// monic irreducible polynomial (compared constant term first) is used.
  /// Throws NotPrime, ReducibleModulus, DegreeMismatch or FieldTooLarge.
  static Field create(std::uint32_t ell, unsigned degree,
                      std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);
  static Field prime(std::uint32_t ell) { return create(ell, 1); }

  std::uint32_t characteristic() const noexcept;
  unsigned degree() const noexcept;
  std::uint32_t order() const noexcept;
  /// Monic modulus, lowest coefficient first, length degree + 1.
  const std::vector<std::uint32_t>& modulus() const noexcept;

  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return Elem{1}; }
  Elem from_int(std::int64_t value) const noexcept;
  Elem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(Elem x) const;
  /// The class of `x` in F_ell[x]/(modulus).
  Elem modulus_root() const noexcept;
  /// The logarithm base; a generator of the multiplicative group.
  Elem primitive() const noexcept;
  /// Returns every element in code order, 0 first.
  std::vector<Elem> elements() const;
  /// An F_ell-basis of the field (the power basis 1, x, ..., x^(k-1)).
  std::vector<Elem> prime_basis() const;

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, std::int64_t e) const;
  Elem frobenius(Elem a) const noexcept;
  /// Discrete log with respect to `primitive()`; -1 for zero.
  std::int64_t log(Elem a) const noexcept;
  bool is_valid(Elem a) const noexcept { return a.code < order(); }

  friend bool operator==(const Field& a, const Field& b) noexcept;
  friend std::ostream& operator<<(std::ostream& os, const Field& f);

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::FieldData> data_;

  friend class Embedding;
};

/// The fixed ring embedding F_{ell^d} -> F_{ell^m} for d | m.
class Embedding {
 public:
  /// Throws NoEmbedding if the source degree does not divide the target degree
  /// or the characteristics differ.
  Embedding(const Field& source, const Field& target);

  Elem operator()(Elem x) const noexcept;
  const Field& source() const noexcept { return source_; }
  const Field& target() const noexcept { return target_; }

 private:
  Field source_;
  Field target_;
  std::uint64_t stride_;
};

/// An element bundled with its field, for call sites where ergonomics matter
/// more than the extra handle copy.
class FieldElem {
 public:
  FieldElem(Field field, Elem value) : field_(std::move(field)), value_(value) {}
  FieldElem(Field field, std::int64_t value) : field_(field), value_(field.from_int(value)) {}

  const Field& field() const noexcept { return field_; }
  Elem value() const noexcept { return value_; }
  std::vector<std::uint32_t> coeffs() const { return field_.coeffs(value_); }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const { return {field_, field_.neg(value_)}; }
  FieldElem inverse() const { return {field_, field_.inv(value_)}; }
  FieldElem pow(std::int64_t e) const { return {field_, field_.pow(value_, e)}; }

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  Field field_;
  Elem value_;
};

Field field_create(std::uint32_t ell, unsigned k,
                   std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);
FieldElem frobenius_endo(const FieldElem& x);
FieldElem embed_subfield(const FieldElem& x, const Field& target);

bool is_prime(std::uint64_t n) noexcept;
/// Irreducibility of a monic polynomial over F_ell (Rabin's test).
bool is_irreducible_mod(std::uint32_t ell, std::span<const std::uint32_t> monic);
std::vector<std::uint32_t> default_modulus(std::uint32_t ell, unsigned degree);

}  // namespace saturate::ff

template <>
struct std::hash<saturate::ff::Elem> {
  std::size_t operator()(saturate::ff::Elem e) const noexcept { return e.code; }
};
