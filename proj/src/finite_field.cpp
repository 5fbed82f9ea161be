#include "g2split/finite_field.hpp"

#include "g2split/error.hpp"

#include <algorithm>

namespace g2split {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

namespace {

constexpr std::uint64_t kMaxPrime = (1ULL << 31);

void require_prime(std::uint64_t p) {
  if (p >= kMaxPrime || !is_prime(p)) {
    throw InvalidArgument("field characteristic must be a prime below 2^31 (got " +
                          std::to_string(p) + ")");
  }
}

std::uint64_t reduce(std::int64_t value, std::uint64_t p) {
  std::int64_t r = value % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exponent, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exponent > 0) {
    if (exponent & 1) result = result * base % p;
    base = base * base % p;
    exponent >>= 1;
  }
  return result;
}

}  // namespace

PrimeField::PrimeField(std::int64_t value, std::uint64_t p) : v_(0), p_(p) {
  require_prime(p);
  v_ = reduce(value, p);
}

PrimeField PrimeField::from_rational(const Domain& dom, const Rational& value) {
  require_prime(dom.p);
  mpz_class pz(static_cast<unsigned long>(dom.p));
  mpz_class n = value.num() % pz;
  mpz_class d = value.den() % pz;
  if (d == 0) throw DenominatorNotUnit(dom.p);
  if (n < 0) n += pz;
  PrimeField num = raw(n.get_ui(), dom.p);
  PrimeField den = raw(d.get_ui(), dom.p);
  return num / den;
}

PrimeField PrimeField::random(const Domain& dom, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, dom.p - 1);
  return raw(dist(rng), dom.p);
}

void PrimeField::check_same(const PrimeField& o) const {
  if (p_ != o.p_) {
    throw DomainMismatch("mixing GF(" + std::to_string(p_) + ") with GF(" + std::to_string(o.p_) + ")");
  }
}

PrimeField& PrimeField::operator+=(const PrimeField& o) {
  check_same(o);
  v_ += o.v_;
  if (v_ >= p_) v_ -= p_;
  return *this;
}

PrimeField& PrimeField::operator-=(const PrimeField& o) {
  check_same(o);
  v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
  return *this;
}

PrimeField& PrimeField::operator*=(const PrimeField& o) {
  check_same(o);
  v_ = v_ * o.v_ % p_;
  return *this;
}

PrimeField PrimeField::inverse() const {
  if (v_ == 0) throw InvalidArgument("division by zero in GF(" + std::to_string(p_) + ")");
  return raw(powmod(v_, p_ - 2, p_), p_);
}

PrimeField PrimeField::pow(std::uint64_t exponent) const { return raw(powmod(v_, exponent, p_), p_); }

// --- GF(p^k) ---------------------------------------------------------------

namespace {

using Dense = std::vector<std::uint64_t>;  // ascending coefficients over GF(p)

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Dense poly_mulmod(const Dense& a, const Dense& b, const Dense& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Dense r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  std::size_t k = m.size() - 1;  // m monic
  for (std::size_t i = r.size(); i-- > k;) {
    std::uint64_t c = r[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= k; ++j) r[i - k + j] = (r[i - k + j] + (p - c) * m[j]) % p;
  }
  if (r.size() > k) r.resize(k);
  trim(r);
  return r;
}

Dense poly_powmod(Dense base, std::uint64_t e, const Dense& m, std::uint64_t p) {
  Dense result{1};
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

Dense poly_mod(Dense a, const Dense& m, std::uint64_t p) {
  trim(a);
  Dense mm = m;
  trim(mm);
  std::size_t k = mm.size() - 1;
  std::uint64_t inv_lead = powmod(mm.back(), p - 2, p);
  while (a.size() > k) {
    std::uint64_t c = a.back() * inv_lead % p;
    std::size_t shift = a.size() - 1 - k;
    for (std::size_t j = 0; j <= k; ++j) a[shift + j] = (a[shift + j] + (p - c) * mm[j]) % p;
    trim(a);
  }
  return a;
}

Dense poly_gcd(Dense a, Dense b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's irreducibility test for a monic f of degree k over GF(p).
bool irreducible(const Dense& f, std::uint64_t p, unsigned k) {
  std::uint64_t q_pow = 1;
  for (unsigned i = 0; i < k; ++i) q_pow *= p;
  Dense x{0, 1};
  Dense xq = poly_powmod(x, q_pow, f, p);
  Dense diff = xq;
  diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
  diff[1] = (diff[1] + p - 1) % p;
  trim(diff);
  if (!diff.empty()) return false;
  for (unsigned r = 2; r <= k; ++r) {
    if (k % r != 0 || !is_prime(r)) continue;
    std::uint64_t e = 1;
    for (unsigned i = 0; i < k / r; ++i) e *= p;
    Dense h = poly_powmod(x, e, f, p);
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    Dense g = poly_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

std::shared_ptr<const ExtField> ExtField::create(std::uint64_t p, unsigned k) {
  require_prime(p);
  if (k < 1 || k > kMaxDegree) throw InvalidArgument("extension degree must be in [1, 8]");
  double size = 1;
  for (unsigned i = 0; i < k; ++i) size *= static_cast<double>(p);
  if (size > 9.0e15) throw InvalidArgument("extension field too large");
  if (k == 1) return std::shared_ptr<const ExtField>(new ExtField(p, 1, {0, 1}));

  // Enumerate monic candidates t^k + c_{k-1} t^{k-1} + ... + c_0 in lexicographic order.
  Dense f(k + 1, 0);
  f[k] = 1;
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = rest % p;
      rest /= p;
    }
    if (f[0] == 0) continue;
    if (irreducible(f, p, k)) return std::shared_ptr<const ExtField>(new ExtField(p, k, f));
  }
  throw InvalidArgument("no irreducible polynomial found");
}

std::uint64_t ExtField::order() const {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k_; ++i) q *= p_;
  return q;
}

std::string ExtField::name() const {
  return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
}

bool ExtFieldElement::Domain::operator==(const Domain& o) const {
  if (field == o.field) return true;
  if (!field || !o.field) return false;
  return field->p() == o.field->p() && field->modulus() == o.field->modulus();
}

void ExtFieldElement::check_same(const ExtFieldElement& o) const {
  if (!(domain() == o.domain())) {
    throw DomainMismatch("mixing " + domain().name() + " with " + o.domain().name());
  }
}

ExtFieldElement ExtFieldElement::from_int(const Domain& dom, long value) {
  ExtFieldElement e;
  e.field_ = dom.field;
  e.c_[0] = static_cast<std::uint32_t>(reduce(value, dom.field->p()));
  return e;
}

ExtFieldElement ExtFieldElement::from_rational(const Domain& dom, const Rational& value) {
  PrimeField base = PrimeField::from_rational({dom.field->p()}, value);
  ExtFieldElement e;
  e.field_ = dom.field;
  e.c_[0] = static_cast<std::uint32_t>(base.value());
  return e;
}

ExtFieldElement ExtFieldElement::from_coefficients(const Domain& dom, const std::vector<std::uint64_t>& c) {
  if (c.size() > dom.field->k()) throw InvalidArgument("too many coefficients for " + dom.name());
  ExtFieldElement e;
  e.field_ = dom.field;
  for (std::size_t i = 0; i < c.size(); ++i) e.c_[i] = static_cast<std::uint32_t>(c[i] % dom.field->p());
  return e;
}

ExtFieldElement ExtFieldElement::random(const Domain& dom, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, dom.field->order() - 1);
  return from_index(dom, dist(rng));
}

ExtFieldElement ExtFieldElement::from_index(const Domain& dom, std::uint64_t index) {
  ExtFieldElement e;
  e.field_ = dom.field;
  for (unsigned i = 0; i < dom.field->k(); ++i) {
    e.c_[i] = static_cast<std::uint32_t>(index % dom.field->p());
    index /= dom.field->p();
  }
  return e;
}

bool ExtFieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
}

ExtFieldElement ExtFieldElement::operator-() const {
  ExtFieldElement r = *this;
  std::uint64_t p = field_->p();
  for (auto& v : r.c_) v = v == 0 ? 0 : static_cast<std::uint32_t>(p - v);
  return r;
}

ExtFieldElement& ExtFieldElement::operator+=(const ExtFieldElement& o) {
  check_same(o);
  std::uint64_t p = field_->p();
  for (unsigned i = 0; i < field_->k(); ++i) c_[i] = static_cast<std::uint32_t>((c_[i] + o.c_[i]) % p);
  return *this;
}

ExtFieldElement& ExtFieldElement::operator-=(const ExtFieldElement& o) {
  check_same(o);
  std::uint64_t p = field_->p();
  for (unsigned i = 0; i < field_->k(); ++i) c_[i] = static_cast<std::uint32_t>((c_[i] + p - o.c_[i]) % p);
  return *this;
}

ExtFieldElement& ExtFieldElement::operator*=(const ExtFieldElement& o) {
  check_same(o);
  const std::uint64_t p = field_->p();
  const unsigned k = field_->k();
  const auto& m = field_->modulus();
  std::array<std::uint64_t, 2 * ExtField::kMaxDegree> r{};
  for (unsigned i = 0; i < k; ++i) {
    if (c_[i] == 0) continue;
    for (unsigned j = 0; j < k; ++j) r[i + j] = (r[i + j] + std::uint64_t{c_[i]} * o.c_[j]) % p;
  }
  for (unsigned i = 2 * k - 1; i-- > k;) {
    std::uint64_t c = r[i];
    if (c == 0) continue;
    r[i] = 0;
    for (unsigned j = 0; j < k; ++j) r[i - k + j] = (r[i - k + j] + (p - c) * m[j]) % p;
  }
  for (unsigned i = 0; i < k; ++i) c_[i] = static_cast<std::uint32_t>(r[i]);
  return *this;
}

ExtFieldElement ExtFieldElement::pow(std::uint64_t exponent) const {
  ExtFieldElement result = from_int(domain(), 1);
  ExtFieldElement base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

ExtFieldElement ExtFieldElement::inverse() const {
  if (is_zero()) throw InvalidArgument("division by zero in " + domain().name());
  return pow(field_->order() - 2);
}

bool operator==(const ExtFieldElement& x, const ExtFieldElement& y) {
  x.check_same(y);
  return x.c_ == y.c_;
}

std::string ExtFieldElement::str() const {
  std::string s = "[";
  for (unsigned i = 0; i < field_->k(); ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  return s + "]";
}

}  // namespace g2split
