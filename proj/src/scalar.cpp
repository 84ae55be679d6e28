#include "wm/scalar.hpp"

#include <array>
#include <cctype>

namespace wm {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// Modular inverse mod prime p via extended Euclid.
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p),
               new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // These twelve bases are a deterministic test below 3.3 * 10^24.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Scalar Scalar::zero(const FieldSpec& f) {
  return f.is_rationals() ? Scalar(mpq_class(0))
                          : Scalar(Residue{0, f.modulus()});
}

Scalar Scalar::one(const FieldSpec& f) {
  return f.is_rationals() ? Scalar(mpq_class(1))
                          : Scalar(Residue{1 % f.modulus(), f.modulus()});
}

Scalar Scalar::of_int(const FieldSpec& f, long v) {
  if (f.is_rationals()) return Scalar(mpq_class(v));
  std::uint64_t p = f.modulus();
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  return Scalar(Residue{static_cast<std::uint64_t>(r), p});
}

Scalar Scalar::rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return Scalar(std::move(c));
}

Scalar Scalar::residue(std::uint64_t v, std::uint64_t p) {
  return Scalar(Residue{v % p, p});
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
  require(!text.empty(), Errc::Parse, "empty scalar literal");
  auto valid = [&](bool allow_slash) {
    size_t i = 0;
    if (text[i] == '-') ++i;
    bool digit = false, slash = false;
    for (; i < text.size(); ++i) {
      if (std::isdigit(static_cast<unsigned char>(text[i]))) {
        digit = true;
      } else if (text[i] == '/' && allow_slash && !slash && digit) {
        slash = true;
        digit = false;
      } else {
        return false;
      }
    }
    return digit;
  };
  if (f.is_rationals()) {
    require(valid(true), Errc::Parse, "bad rational literal '" + text + "'");
    mpq_class q;
    require(q.set_str(text, 10) == 0, Errc::Parse,
            "bad rational literal '" + text + "'");
    require(q.get_den() != 0, Errc::Parse,
            "zero denominator in '" + text + "'");
    q.canonicalize();
    return Scalar(std::move(q));
  }
  require(valid(false), Errc::Parse,
          "bad GF(p) literal '" + text + "'");
  mpz_class z(text, 10);
  mpz_class p(static_cast<unsigned long>(f.modulus()));
  mpz_class r = z % p;
  if (r < 0) r += p;
  return Scalar(Residue{r.get_ui(), f.modulus()});
}

FieldSpec Scalar::field() const {
  if (is_rational_rep()) return FieldSpec::rationals();
  return FieldSpec::prime(res().p);
}

bool Scalar::is_zero() const {
  return is_rational_rep() ? rat() == 0 : res().v == 0;
}

bool Scalar::is_one() const {
  return is_rational_rep() ? rat() == 1 : res().v == 1 % res().p;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (is_rational_rep() != o.is_rational_rep() ||
      (!is_rational_rep() && res().p != o.res().p)) {
    fail(Errc::FieldMismatch, "scalar arithmetic across different fields");
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  if (is_rational_rep()) return Scalar(mpq_class(rat() + o.rat()));
  std::uint64_t p = res().p;
  std::uint64_t s = res().v + o.res().v;  // p < 2^63, no overflow
  if (s >= p) s -= p;
  return Scalar(Residue{s, p});
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  if (is_rational_rep()) return Scalar(mpq_class(rat() - o.rat()));
  std::uint64_t p = res().p;
  std::uint64_t s = res().v + (p - o.res().v);
  if (s >= p) s -= p;
  return Scalar(Residue{s, p});
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  if (is_rational_rep()) return Scalar(mpq_class(rat() * o.rat()));
  return Scalar(Residue{mulmod_u64(res().v, o.res().v, res().p), res().p});
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  if (is_rational_rep()) return Scalar(mpq_class(-rat()));
  std::uint64_t p = res().p;
  return Scalar(Residue{res().v == 0 ? 0 : p - res().v, p});
}

Scalar Scalar::inverse() const {
  require(!is_zero(), Errc::Precondition, "division by zero");
  if (is_rational_rep()) return Scalar(mpq_class(1 / rat()));
  return Scalar(Residue{invmod_u64(res().v, res().p), res().p});
}

bool Scalar::operator==(const Scalar& o) const {
  if (is_rational_rep() != o.is_rational_rep()) return false;
  if (is_rational_rep()) return rat() == o.rat();
  return res() == o.res();
}

std::string Scalar::str() const {
  if (is_rational_rep()) return rat().get_str();
  return std::to_string(res().v);
}

const mpq_class& Scalar::rational_value() const {
  require(is_rational_rep(), Errc::Internal, "not a rational");
  return rat();
}

std::uint64_t Scalar::residue_value() const {
  require(!is_rational_rep(), Errc::Internal, "not a residue");
  return res().v;
}

}  // namespace wm
