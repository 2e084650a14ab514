#include "nodal/field.hpp"

#include <sstream>

namespace nodal {

FieldSpec FieldSpec::parse(const std::string& text) {
  std::istringstream in(text);
  std::string kind;
  in >> kind;
  if (kind == "Q") return rationals();
  if (kind == "Fp") {
    std::string p_text;
    if (!(in >> p_text)) throw Error(ErrorKind::InvalidArgument, "field 'Fp' needs a prime");
    std::uint64_t p = 0;
    try {
      p = std::stoull(p_text);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "bad prime '" + p_text + "'");
    }
    return prime(p);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown field '" + text + "'");
}

namespace {

Scalar::Value canonical_value(const FieldSpec& spec, Scalar::Value v) {
  return std::visit(
      [&](const auto& f) -> Scalar::Value {
        using F = std::decay_t<decltype(f)>;
        using E = typename F::Element;
        if (!std::holds_alternative<E>(v)) throw Error(ErrorKind::FieldMismatch, "value does not belong to " + f.describe());
        return f.canonical(std::get<E>(v));
      },
      spec.variant());
}

}  // namespace

Scalar::Scalar(std::shared_ptr<const FieldSpec> field, Value value)
    : field_(std::move(field)), value_(canonical_value(*field_, std::move(value))) {}

Scalar Scalar::from_int(std::shared_ptr<const FieldSpec> field, std::int64_t v) {
  Value value = std::visit([&](const auto& f) -> Value { return f.from_int(v); }, field->variant());
  return Scalar(std::move(field), std::move(value));
}

template <class Op>
Scalar Scalar::combine(const Scalar& o, Op op) const {
  if (*field_ != *o.field_) {
    throw Error(ErrorKind::FieldMismatch, field_->describe() + " vs " + o.field_->describe());
  }
  Value v = std::visit(
      [&](const auto& f) -> Value {
        using E = typename std::decay_t<decltype(f)>::Element;
        return op(f, std::get<E>(value_), std::get<E>(o.value_));
      },
      field_->variant());
  return Scalar(field_, std::move(v));
}

Scalar Scalar::operator+(const Scalar& o) const {
  return combine(o, [](const auto& f, const auto& a, const auto& b) { return f.add(a, b); });
}
Scalar Scalar::operator-(const Scalar& o) const {
  return combine(o, [](const auto& f, const auto& a, const auto& b) { return f.sub(a, b); });
}
Scalar Scalar::operator*(const Scalar& o) const {
  return combine(o, [](const auto& f, const auto& a, const auto& b) { return f.mul(a, b); });
}
Scalar Scalar::operator/(const Scalar& o) const {
  return combine(o, [](const auto& f, const auto& a, const auto& b) { return f.div(a, b); });
}

Scalar Scalar::inverse() const {
  Value v = std::visit(
      [&](const auto& f) -> Value {
        using E = typename std::decay_t<decltype(f)>::Element;
        return f.inv(std::get<E>(value_));
      },
      field_->variant());
  return Scalar(field_, std::move(v));
}

bool Scalar::is_zero() const {
  return std::visit(
      [&](const auto& f) {
        using E = typename std::decay_t<decltype(f)>::Element;
        return f.is_zero(std::get<E>(value_));
      },
      field_->variant());
}

std::string Scalar::to_string() const {
  return std::visit(
      [&](const auto& f) {
        using E = typename std::decay_t<decltype(f)>::Element;
        return f.format(std::get<E>(value_));
      },
      field_->variant());
}

}  // namespace nodal
