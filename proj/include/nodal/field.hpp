#pragma once

// Runtime field descriptors and dynamically typed field elements. The heavy
// algorithms are templates over the concrete field classes; these wrappers
// are for input handling and reports.

#include <memory>
#include <string>
#include <variant>

#include "nodal/extension_field.hpp"
#include "nodal/prime_field.hpp"
#include "nodal/rational_field.hpp"

namespace nodal {

inline constexpr std::uint64_t kDefaultPrime = 10007;

class FieldSpec {
 public:
  enum class Kind { Rationals, Prime, Extension };
  using Variant = std::variant<RationalField, PrimeField, ExtensionField>;

  FieldSpec(RationalField f) : field_(std::move(f)) {}
  FieldSpec(PrimeField f) : field_(std::move(f)) {}
  FieldSpec(ExtensionField f) : field_(std::move(f)) {}

  static FieldSpec rationals() { return FieldSpec(RationalField()); }
  static FieldSpec prime(std::uint64_t p) { return FieldSpec(PrimeField(p)); }

  /// Parses "Q" or "Fp <prime>".
  static FieldSpec parse(const std::string& text);

  Kind kind() const { return static_cast<Kind>(field_.index()); }
  const Variant& variant() const { return field_; }
  std::uint64_t characteristic() const {
    return std::visit([](const auto& f) { return f.characteristic(); }, field_);
  }
  std::string describe() const {
    return std::visit([](const auto& f) { return f.describe(); }, field_);
  }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) { return a.field_ == b.field_; }
  friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }

 private:
  Variant field_;
};

/// A field element tagged with its owning field.
class Scalar {
 public:
  using Value = std::variant<mpq_class, std::uint64_t, std::vector<std::uint64_t>>;

  Scalar(std::shared_ptr<const FieldSpec> field, Value value);

  static Scalar from_int(std::shared_ptr<const FieldSpec> field, std::int64_t v);

  const FieldSpec& field() const { return *field_; }
  const Value& value() const { return value_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar inverse() const;
  bool is_zero() const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return *a.field_ == *b.field_ && a.value_ == b.value_;
  }

  std::string to_string() const;

 private:
  template <class Op>
  Scalar combine(const Scalar& o, Op op) const;

  std::shared_ptr<const FieldSpec> field_;
  Value value_;
};

}  // namespace nodal
