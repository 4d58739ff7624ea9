#pragma once

// Exact coefficient fields containing a distinguished primitive r-th root
// of unity zeta.
//
// Two backends share one interface (the Field concept below):
//   CyclotomicField  Q(zeta_r) = Q[X]/(Phi_r), arbitrary-precision rationals
//   PrimeField       F_p with p = 1 mod r, zeta = g^((p-1)/r) for the
//                    smallest primitive root g
//
// Values are plain data; all arithmetic goes through the field object, which
// is cheap to copy (shared immutable tables) and safe to use from several
// threads at once.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace yoklab {

// One parsed term `coeff * z^exponent` of the scalar grammar.
struct ScalarTerm {
  mpq_class coeff;
  long exponent = 0;
};

// Parses `c`, `c*z^k`, `z^k`, `z` joined by + and -; whitespace is ignored.
// Throws UsageError on syntax errors or a zero denominator.
std::vector<ScalarTerm> parse_scalar_terms(std::string_view text);

template <class F>
concept Field = std::copy_constructible<F> &&
    requires(const F& f, const typename F::value_type& a,
             typename F::value_type& acc, long k, std::string_view s) {
      typename F::value_type;
      { f.order() } -> std::convertible_to<int>;
      { f.characteristic() } -> std::convertible_to<std::uint64_t>;
      { f.zero() } -> std::same_as<typename F::value_type>;
      { f.one() } -> std::same_as<typename F::value_type>;
      { f.zeta() } -> std::same_as<typename F::value_type>;
      { f.zeta_pow(k) } -> std::same_as<typename F::value_type>;
      { f.from_int(k) } -> std::same_as<typename F::value_type>;
      { f.add(a, a) } -> std::same_as<typename F::value_type>;
      { f.sub(a, a) } -> std::same_as<typename F::value_type>;
      { f.mul(a, a) } -> std::same_as<typename F::value_type>;
      { f.div(a, a) } -> std::same_as<typename F::value_type>;
      { f.neg(a) } -> std::same_as<typename F::value_type>;
      { f.inv(a) } -> std::same_as<typename F::value_type>;
      { f.equals(a, a) } -> std::same_as<bool>;
      { f.is_zero(a) } -> std::same_as<bool>;
      { f.add_mul(acc, a, a) };
      { f.parse(s) } -> std::same_as<typename F::value_type>;
      { f.render(a) } -> std::same_as<std::string>;
      { f.name() } -> std::same_as<std::string>;
    };

// Element of Q(zeta_r): coordinates in the power basis 1, z, ..., z^(d-1)
// with d = phi(r).
struct CyclotomicNumber {
  std::vector<mpq_class> coords;
};

class CyclotomicField {
 public:
  using value_type = CyclotomicNumber;

  explicit CyclotomicField(int r);

  int order() const { return impl_->r; }
  std::uint64_t characteristic() const { return 0; }
  int degree() const { return impl_->degree; }
  // Coefficients of Phi_r, constant term first.
  const std::vector<mpz_class>& modulus() const { return impl_->modulus; }

  value_type zero() const;
  value_type one() const { return from_int(1); }
  value_type zeta() const { return zeta_pow(1); }
  value_type zeta_pow(long k) const;
  value_type from_int(long k) const;
  value_type from_rational(const mpq_class& c) const;

  value_type add(const value_type& a, const value_type& b) const;
  value_type sub(const value_type& a, const value_type& b) const;
  value_type mul(const value_type& a, const value_type& b) const;
  value_type div(const value_type& a, const value_type& b) const;
  value_type neg(const value_type& a) const;
  value_type inv(const value_type& a) const;
  void add_mul(value_type& acc, const value_type& a, const value_type& b) const;
  bool equals(const value_type& a, const value_type& b) const;
  bool is_zero(const value_type& a) const;

  value_type parse(std::string_view text) const;
  std::string render(const value_type& a) const;
  std::string name() const { return "cyclotomic"; }

 private:
  struct Impl {
    int r = 1;
    int degree = 1;
    std::vector<mpz_class> modulus;
    // X^k mod Phi_r for 0 <= k <= 2*degree - 2.
    std::vector<std::vector<mpz_class>> reduction;
    std::vector<value_type> zeta_powers;
  };
  std::shared_ptr<const Impl> impl_;
};

struct Residue {
  std::uint64_t value = 0;
  friend bool operator==(Residue, Residue) = default;
};

class PrimeField {
 public:
  using value_type = Residue;

  // Requires p prime, r >= 1 and p = 1 (mod r). Primes are limited to
  // p < 2^31 so that products fit in 64 bits.
  PrimeField(std::uint64_t p, int r);

  int order() const { return r_; }
  std::uint64_t characteristic() const { return p_; }
  std::uint64_t primitive_root() const { return generator_; }

  value_type zero() const { return {0}; }
  value_type one() const { return {1 % p_}; }
  value_type zeta() const { return zeta_pow(1); }
  value_type zeta_pow(long k) const;
  value_type from_int(long k) const;
  // Throws UsageError when the denominator vanishes mod p.
  value_type from_rational(const mpq_class& c) const;

  value_type add(value_type a, value_type b) const {
    std::uint64_t s = a.value + b.value;
    return {s >= p_ ? s - p_ : s};
  }
  value_type sub(value_type a, value_type b) const {
    return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
  }
  value_type mul(value_type a, value_type b) const { return {a.value * b.value % p_}; }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
  value_type neg(value_type a) const { return {a.value == 0 ? 0 : p_ - a.value}; }
  value_type inv(value_type a) const;
  void add_mul(value_type& acc, value_type a, value_type b) const { acc = add(acc, mul(a, b)); }
  bool equals(value_type a, value_type b) const { return a.value == b.value; }
  bool is_zero(value_type a) const { return a.value == 0; }

  value_type parse(std::string_view text) const;
  std::string render(value_type a) const;
  std::string name() const { return "fp:" + std::to_string(p_); }

 private:
  std::uint64_t pow(std::uint64_t base, std::uint64_t e) const;

  std::uint64_t p_;
  int r_;
  std::uint64_t generator_ = 0;
  std::vector<value_type> zeta_powers_;
};

static_assert(Field<CyclotomicField>);
static_assert(Field<PrimeField>);

bool is_prime(std::uint64_t p);
std::uint64_t smallest_primitive_root(std::uint64_t p);

// Integer coefficients of the r-th cyclotomic polynomial, constant term first.
std::vector<mpz_class> cyclotomic_polynomial(int r);

enum class FieldKind { CyclotomicRational, PrimeField };

struct FieldSpec {
  FieldKind kind = FieldKind::CyclotomicRational;
  int r = 1;
  std::optional<std::uint64_t> p;
};

using AnyField = std::variant<CyclotomicField, PrimeField>;

// Validates the field description and builds the corresponding backend.
AnyField make_field(const FieldSpec& spec);

// "cyclotomic" or "fp:<p>".
FieldSpec parse_field_spec(std::string_view text, int r);

// Fixed-size integer powers via repeated multiplication; k may be negative.
template <Field F>
typename F::value_type power(const F& f, typename F::value_type base, long k) {
  if (k < 0) {
    base = f.inv(base);
    k = -k;
  }
  auto result = f.one();
  while (k > 0) {
    if (k & 1) result = f.mul(result, base);
    base = f.mul(base, base);
    k >>= 1;
  }
  return result;
}

}  // namespace yoklab
