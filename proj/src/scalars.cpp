#include "yoklab/scalars.hpp"

#include <cctype>
#include <numeric>

#include "yoklab/error.hpp"

namespace yoklab {

namespace {

// Polynomials with integer coefficients, constant term first.
using IntPoly = std::vector<mpz_class>;

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division of `num` by the monic polynomial `den`.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() <= dd) return {0};
  IntPoly quot(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    mpz_class c = num[k];
    if (c == 0) continue;
    quot[k - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
  }
  trim(quot);
  return quot;
}

long parse_long(std::string_view s, std::size_t& pos) {
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
    throw UsageError("scalar: expected digits at position " + std::to_string(pos));
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos - start > 17) throw UsageError("scalar: exponent too large");
  return std::stol(std::string(s.substr(start, pos - start)));
}

mpz_class parse_integer(std::string_view s, std::size_t& pos) {
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
    throw UsageError("scalar: expected digits at position " + std::to_string(pos));
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  return mpz_class(std::string(s.substr(start, pos - start)));
}

}  // namespace

std::vector<ScalarTerm> parse_scalar_terms(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw UsageError("scalar: empty input");

  std::vector<ScalarTerm> terms;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw UsageError("scalar: expected '+' or '-' at position " + std::to_string(pos));
    }
    first = false;

    ScalarTerm term;
    term.coeff = 1;
    bool have_coeff = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      mpz_class num = parse_integer(s, pos);
      mpz_class den = 1;
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        den = parse_integer(s, pos);
        if (den == 0) throw UsageError("scalar: zero denominator");
      }
      term.coeff = mpq_class(num, den);
      term.coeff.canonicalize();
      have_coeff = true;
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        if (pos >= s.size() || s[pos] != 'z') throw UsageError("scalar: expected 'z' after '*'");
      }
    }
    if (pos < s.size() && s[pos] == 'z') {
      ++pos;
      term.exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        term.exponent = parse_long(s, pos);
      }
    } else if (!have_coeff) {
      throw UsageError("scalar: expected a term at position " + std::to_string(pos));
    }
    term.coeff *= sign;
    terms.push_back(std::move(term));
  }
  return terms;
}

std::vector<mpz_class> cyclotomic_polynomial(int r) {
  if (r < 1) throw UsageError("cyclotomic polynomial: r must be positive");
  IntPoly num(static_cast<std::size_t>(r) + 1, 0);
  num[0] = -1;
  num[r] = 1;
  for (int d = 1; d < r; ++d)
    if (r % d == 0) num = divide_monic(num, cyclotomic_polynomial(d));
  return num;
}

// ---------------------------------------------------------------- cyclotomic

CyclotomicField::CyclotomicField(int r) {
  if (r < 1) throw UsageError("field: r must be at least 1");
  auto impl = std::make_shared<Impl>();
  impl->r = r;
  impl->modulus = cyclotomic_polynomial(r);
  const int d = static_cast<int>(impl->modulus.size()) - 1;
  impl->degree = d;

  // X^k mod Phi_r, built by repeated multiplication with X.
  auto times_x = [&](const IntPoly& p) {
    IntPoly out(d, 0);
    mpz_class top = p[d - 1];
    for (int j = d - 1; j > 0; --j) out[j] = p[j - 1];
    out[0] = 0;
    for (int j = 0; j < d; ++j) out[j] -= top * impl->modulus[j];
    return out;
  };
  IntPoly xk(d, 0);
  xk[0] = 1;
  const int needed = std::max(2 * d - 1, r);
  std::vector<IntPoly> powers;
  for (int k = 0; k < needed; ++k) {
    powers.push_back(xk);
    xk = times_x(xk);
  }
  impl->reduction.assign(powers.begin(), powers.begin() + (2 * d - 1));
  for (int k = 0; k < r; ++k) {
    value_type z;
    z.coords.resize(d);
    for (int j = 0; j < d; ++j) z.coords[j] = powers[k][j];
    impl->zeta_powers.push_back(std::move(z));
  }
  impl_ = std::move(impl);
}

CyclotomicField::value_type CyclotomicField::zero() const {
  value_type z;
  z.coords.assign(impl_->degree, mpq_class(0));
  return z;
}

CyclotomicField::value_type CyclotomicField::zeta_pow(long k) const {
  long r = impl_->r;
  return impl_->zeta_powers[static_cast<std::size_t>(((k % r) + r) % r)];
}

CyclotomicField::value_type CyclotomicField::from_int(long k) const {
  value_type z = zero();
  z.coords[0] = k;
  return z;
}

CyclotomicField::value_type CyclotomicField::from_rational(const mpq_class& c) const {
  value_type z = zero();
  z.coords[0] = c;
  return z;
}

CyclotomicField::value_type CyclotomicField::add(const value_type& a, const value_type& b) const {
  value_type s = a;
  for (int j = 0; j < impl_->degree; ++j) s.coords[j] += b.coords[j];
  return s;
}

CyclotomicField::value_type CyclotomicField::sub(const value_type& a, const value_type& b) const {
  value_type s = a;
  for (int j = 0; j < impl_->degree; ++j) s.coords[j] -= b.coords[j];
  return s;
}

CyclotomicField::value_type CyclotomicField::neg(const value_type& a) const {
  value_type s = a;
  for (auto& c : s.coords) c = -c;
  return s;
}

void CyclotomicField::add_mul(value_type& acc, const value_type& a, const value_type& b) const {
  const int d = impl_->degree;
  if (d == 1) {
    acc.coords[0] += a.coords[0] * b.coords[0];
    return;
  }
  std::vector<mpq_class> prod(2 * d - 1, mpq_class(0));
  bool any = false;
  for (int i = 0; i < d; ++i) {
    if (sgn(a.coords[i]) == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (sgn(b.coords[j]) == 0) continue;
      prod[i + j] += a.coords[i] * b.coords[j];
      any = true;
    }
  }
  if (!any) return;
  for (int k = 0; k < 2 * d - 1; ++k) {
    if (sgn(prod[k]) == 0) continue;
    if (k < d) {
      acc.coords[k] += prod[k];
      continue;
    }
    const auto& red = impl_->reduction[k];
    for (int j = 0; j < d; ++j)
      if (red[j] != 0) acc.coords[j] += prod[k] * red[j];
  }
}

CyclotomicField::value_type CyclotomicField::mul(const value_type& a, const value_type& b) const {
  value_type out = zero();
  add_mul(out, a, b);
  return out;
}

CyclotomicField::value_type CyclotomicField::inv(const value_type& a) const {
  if (is_zero(a)) throw UsageError("cyclotomic field: division by zero");
  const int d = impl_->degree;
  // Columns a * X^j; solve M x = e_0 by Gauss-Jordan elimination.
  std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d + 1, mpq_class(0)));
  value_type xj = one();
  for (int j = 0; j < d; ++j) {
    value_type col = mul(a, xj);
    for (int i = 0; i < d; ++i) m[i][j] = col.coords[i];
    if (j + 1 < d) {
      value_type x = zero();
      x.coords[1] = 1;
      xj = mul(xj, x);
    }
  }
  m[0][d] = 1;
  for (int col = 0; col < d; ++col) {
    int piv = col;
    while (piv < d && sgn(m[piv][col]) == 0) ++piv;
    if (piv == d) throw ComputationError("cyclotomic field: singular multiplication matrix");
    std::swap(m[piv], m[col]);
    mpq_class lead = m[col][col];
    for (int j = col; j <= d; ++j) m[col][j] /= lead;
    for (int i = 0; i < d; ++i) {
      if (i == col || sgn(m[i][col]) == 0) continue;
      mpq_class f = m[i][col];
      for (int j = col; j <= d; ++j) m[i][j] -= f * m[col][j];
    }
  }
  value_type out = zero();
  for (int i = 0; i < d; ++i) out.coords[i] = m[i][d];
  return out;
}

CyclotomicField::value_type CyclotomicField::div(const value_type& a, const value_type& b) const {
  return mul(a, inv(b));
}

bool CyclotomicField::equals(const value_type& a, const value_type& b) const {
  for (int j = 0; j < impl_->degree; ++j)
    if (a.coords[j] != b.coords[j]) return false;
  return true;
}

bool CyclotomicField::is_zero(const value_type& a) const {
  for (const auto& c : a.coords)
    if (sgn(c) != 0) return false;
  return true;
}

CyclotomicField::value_type CyclotomicField::parse(std::string_view text) const {
  value_type out = zero();
  for (const auto& term : parse_scalar_terms(text)) {
    const auto& zk = zeta_pow(term.exponent);
    for (int j = 0; j < impl_->degree; ++j) out.coords[j] += term.coeff * zk.coords[j];
  }
  return out;
}

std::string CyclotomicField::render(const value_type& a) const {
  std::string out;
  for (int k = impl_->degree - 1; k >= 0; --k) {
    const mpq_class& c = a.coords[k];
    if (sgn(c) == 0) continue;
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    mpq_class mag = abs(c);
    if (k == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += "z^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

// --------------------------------------------------------------- prime field

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t smallest_primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  std::vector<std::uint64_t> factors;
  std::uint64_t m = p - 1;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d) continue;
    factors.push_back(d);
    while (m % d == 0) m /= d;
  }
  if (m > 1) factors.push_back(m);
  auto powmod = [p](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto f : factors)
      if (powmod(g, (p - 1) / f) == 1) { ok = false; break; }
    if (ok) return g;
  }
  throw ComputationError("no primitive root found");
}

PrimeField::PrimeField(std::uint64_t p, int r) : p_(p), r_(r) {
  if (r < 1) throw UsageError("field: r must be at least 1");
  if (!is_prime(p)) throw UsageError("field: " + std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 31)) throw UsageError("field: prime must be below 2^31");
  if ((p - 1) % static_cast<std::uint64_t>(r) != 0)
    throw UsageError("field: p = " + std::to_string(p) + " is not 1 mod r = " + std::to_string(r));
  generator_ = smallest_primitive_root(p);
  std::uint64_t z = pow(generator_, (p - 1) / static_cast<std::uint64_t>(r));
  std::uint64_t acc = 1 % p;
  for (int k = 0; k < r; ++k) {
    zeta_powers_.push_back({acc});
    acc = acc * z % p;
  }
}

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t e) const {
  std::uint64_t result = 1 % p_;
  base %= p_;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return result;
}

PrimeField::value_type PrimeField::zeta_pow(long k) const {
  long r = r_;
  return zeta_powers_[static_cast<std::size_t>(((k % r) + r) % r)];
}

PrimeField::value_type PrimeField::from_int(long k) const {
  long p = static_cast<long>(p_);
  return {static_cast<std::uint64_t>(((k % p) + p) % p)};
}

PrimeField::value_type PrimeField::from_rational(const mpq_class& c) const {
  mpz_class pz(static_cast<unsigned long>(p_));
  mpz_class num = c.get_num() % pz;
  if (num < 0) num += pz;
  mpz_class den = c.get_den() % pz;
  if (den == 0) throw UsageError("scalar: denominator vanishes mod " + std::to_string(p_));
  value_type n{num.get_ui()};
  value_type d{den.get_ui()};
  return div(n, d);
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a.value == 0) throw UsageError("prime field: division by zero");
  return {pow(a.value, p_ - 2)};
}

PrimeField::value_type PrimeField::parse(std::string_view text) const {
  value_type out = zero();
  for (const auto& term : parse_scalar_terms(text))
    out = add(out, mul(from_rational(term.coeff), zeta_pow(term.exponent)));
  return out;
}

std::string PrimeField::render(value_type a) const { return std::to_string(a.value); }

// ------------------------------------------------------------------ factory

AnyField make_field(const FieldSpec& spec) {
  if (spec.r < 1) throw UsageError("field: r must be at least 1");
  if (spec.kind == FieldKind::CyclotomicRational) return CyclotomicField(spec.r);
  if (!spec.p) throw UsageError("field: prime field requires p");
  return PrimeField(*spec.p, spec.r);
}

FieldSpec parse_field_spec(std::string_view text, int r) {
  FieldSpec spec;
  spec.r = r;
  if (text == "cyclotomic" || text == "q" || text == "Q") return spec;
  if (text.substr(0, 3) == "fp:") {
    std::string digits(text.substr(3));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("field: malformed prime in '" + std::string(text) + "'");
    spec.kind = FieldKind::PrimeField;
    if (digits.size() > 18) throw UsageError("field: prime too large");
    spec.p = std::stoull(digits);
    return spec;
  }
  throw UsageError("field: expected 'cyclotomic' or 'fp:<p>', got '" + std::string(text) + "'");
}

}  // namespace yoklab
