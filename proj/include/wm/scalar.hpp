#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "wm/error.hpp"

namespace wm {

/// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

/// The ground field: the rationals or GF(p) for a prime p.  Both are perfect,
/// which is all the rest of the library assumes about the field.
class FieldSpec {
 public:
  enum class Kind { Rationals, Prime };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }

  /// Throws Errc::Parse if p is not prime.
  static FieldSpec prime(std::uint64_t p) {
    require(is_prime_u64(p), Errc::Parse,
            "GF(" + std::to_string(p) + "): modulus is not prime");
    return FieldSpec(Kind::Prime, p);
  }

  Kind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == Kind::Rationals; }

  /// 0 for Q, p for GF(p).
  std::uint64_t characteristic() const { return p_; }

  std::uint64_t modulus() const {
    require(kind_ == Kind::Prime, Errc::Internal, "modulus of Q requested");
    return p_;
  }

  bool operator==(const FieldSpec&) const = default;

  std::string str() const {
    return is_rationals() ? "Q" : "GF(" + std::to_string(p_) + ")";
  }

 private:
  FieldSpec(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

/// An exact field element: an arbitrary-precision rational in lowest terms
/// with positive denominator, or a residue in [0, p).  Arithmetic never
/// rounds; mixing fields throws FieldMismatch.
class Scalar {
 public:
  Scalar() : rep_(Residue{0, 0}) {}  // unusable sentinel; use zero()/one()

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar of_int(const FieldSpec& f, long v);
  static Scalar rational(const mpq_class& q);
  static Scalar residue(std::uint64_t v, std::uint64_t p);

  /// Parses the wire encoding: "a/b" or "a" over Q, a decimal integer over
  /// GF(p) (reduced mod p, minus sign accepted).  Throws Errc::Parse.
  static Scalar parse(const FieldSpec& f, const std::string& text);

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on division by zero
  Scalar operator-() const;
  Scalar inverse() const;  // throws on zero

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical text form, the exact inverse of parse().
  std::string str() const;

  const mpq_class& rational_value() const;
  std::uint64_t residue_value() const;

 private:
  struct Residue {
    std::uint64_t v;
    std::uint64_t p;
    bool operator==(const Residue&) const = default;
  };
  explicit Scalar(mpq_class q) : rep_(std::move(q)) {}
  explicit Scalar(Residue r) : rep_(r) {}

  const Residue& res() const { return std::get<Residue>(rep_); }
  const mpq_class& rat() const { return std::get<mpq_class>(rep_); }
  bool is_rational_rep() const {
    return std::holds_alternative<mpq_class>(rep_);
  }
  void check_same_field(const Scalar& o) const;

  std::variant<mpq_class, Residue> rep_;
};

}  // namespace wm
