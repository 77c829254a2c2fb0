#include <shapelemma/upoly.hpp>

#include <shapelemma/detail/format.hpp>
#include <shapelemma/errors.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace shapelemma {

const char* error_kind_name(ErrorKind kind)
{
  switch (kind) {
  case ErrorKind::ParseError: return "ParseError";
  case ErrorKind::ArityMismatch: return "ArityMismatch";
  case ErrorKind::DegenerateDegree: return "DegenerateDegree";
  case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
  case ErrorKind::WrongArity: return "WrongArity";
  case ErrorKind::BothZero: return "BothZero";
  case ErrorKind::ZeroInput: return "ZeroInput";
  case ErrorKind::DegreeZero: return "DegreeZero";
  case ErrorKind::NotZeroDimensional: return "NotZeroDimensional";
  case ErrorKind::AllEvaluationsDegenerate: return "AllEvaluationsDegenerate";
  case ErrorKind::CriticalDegreeZero: return "CriticalDegreeZero";
  case ErrorKind::WrongDegree: return "WrongDegree";
  case ErrorKind::GcdNotOne: return "GcdNotOne";
  case ErrorKind::ZeroModulus: return "ZeroModulus";
  case ErrorKind::NotOnVariety: return "NotOnVariety";
  case ErrorKind::NotIrreducible: return "NotIrreducible";
  case ErrorKind::StabilizationFailure: return "StabilizationFailure";
  case ErrorKind::WorkLimitExceeded: return "WorkLimitExceeded";
  }
  return "Error";
}

UPoly::UPoly(std::vector<Rational> coeffs, std::string var)
    : coeffs_(std::move(coeffs)), var_(std::move(var))
{
  normalize();
}

UPoly::UPoly(std::initializer_list<Rational> coeffs, std::string var)
    : coeffs_(coeffs), var_(std::move(var))
{
  normalize();
}

UPoly UPoly::constant(const Rational& c, std::string var)
{
  return UPoly(std::vector<Rational>{c}, std::move(var));
}

UPoly UPoly::monomial(const Rational& c, std::size_t k, std::string var)
{
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return UPoly(std::move(v), std::move(var));
}

UPoly UPoly::linear(const Rational& root, std::string var)
{
  return UPoly({-root, Rational(1)}, std::move(var));
}

UPoly UPoly::with_var(std::string var) const
{
  UPoly r = *this;
  r.var_ = std::move(var);
  return r;
}

void UPoly::normalize()
{
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

Rational UPoly::coeff(std::size_t k) const
{
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational UPoly::leading_coeff() const
{
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational UPoly::eval(const Rational& x) const
{
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const
{
  if (coeffs_.size() <= 1)
    return UPoly({}, var_);
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return UPoly(std::move(d), var_);
}

UPoly UPoly::monic() const
{
  if (is_zero())
    return *this;
  UPoly r = *this;
  const Rational lc = leading_coeff();
  for (auto& c : r.coeffs_)
    c /= lc;
  return r;
}

UPoly UPoly::pow(unsigned e) const
{
  UPoly result = UPoly::constant(1, var_);
  UPoly base = *this;
  while (e > 0) {
    if (e & 1u)
      result *= base;
    e >>= 1;
    if (e > 0)
      base *= base;
  }
  return result;
}

UPoly UPoly::operator-() const
{
  UPoly r = *this;
  for (auto& c : r.coeffs_)
    c = -c;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o)
{
  if (o.coeffs_.size() > coeffs_.size())
    coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
    coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o)
{
  if (o.coeffs_.size() > coeffs_.size())
    coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
    coeffs_[k] -= o.coeffs_[k];
  normalize();
  return *this;
}

UPoly& UPoly::operator*=(const UPoly& o)
{
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  normalize();
  return *this;
}

UPoly& UPoly::operator*=(const Rational& c)
{
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_)
    x *= c;
  return *this;
}

std::string UPoly::to_string() const
{
  if (is_zero())
    return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k] == 0)
      continue;
    detail::append_term(out, coeffs_[k], detail::power_string(var_, static_cast<unsigned>(k)));
  }
  return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b)
{
  if (b.is_zero())
    throw Error(ErrorKind::ZeroModulus, "division by the zero polynomial");
  if (a.degree() < b.degree())
    return {UPoly({}, a.var()), a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(a.degree() - b.degree() + 1);
  const auto& bc = b.coeffs();
  const Rational& lc = bc.back();
  const std::size_t db = bc.size() - 1;
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0)
      continue;
    Rational q = rem[k] / lc;
    quo[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j)
      rem[k - db + j] -= q * bc[j];
  }
  return {UPoly(std::move(quo), a.var()), UPoly(std::move(rem), a.var())};
}

UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

bool divides(const UPoly& d, const UPoly& a)
{
  if (d.is_zero())
    return a.is_zero();
  return (a % d).is_zero();
}

namespace {

// c with c * p primitive over Z and of positive leading coefficient.
Rational primitive_factor(const UPoly& p)
{
  Integer den = 1;
  for (const auto& x : p.coeffs())
    den = lcm(den, Integer(x.get_den()));
  Integer content = 0;
  for (const auto& x : p.coeffs())
    content = gcd(content, Integer(x.get_num() * (den / x.get_den())));
  if (sgn(p.leading_coeff()) < 0)
    content = -content;
  Rational c(den, content);
  c.canonicalize();
  return c;
}

}  // namespace

UPoly upoly_gcd(const UPoly& a, const UPoly& b)
{
  UPoly x = a, y = b;
  if (!y.is_zero())
    y *= primitive_factor(y);
  while (!y.is_zero()) {
    UPoly r = x % y;
    if (!r.is_zero())
      r *= primitive_factor(r);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly upoly_gcd(const std::vector<UPoly>& polys)
{
  UPoly g;
  for (const auto& p : polys) {
    g = upoly_gcd(g, p);
    if (g.is_one())
      break;
  }
  return g;
}

ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b)
{
  if (a.is_zero() && b.is_zero())
    throw Error(ErrorKind::BothZero, "extended gcd of two zero polynomials");
  const std::string& var = a.is_zero() ? b.var() : a.var();
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(1, var), s1 = UPoly({}, var);
  UPoly t0 = UPoly({}, var), t1 = UPoly::constant(1, var);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    const Rational c = r.is_zero() ? Rational(1) : primitive_factor(r);
    r *= c;
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = (s0 - q * s1) * c;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UPoly t2 = (t0 - q * t1) * c;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const Rational inv = 1 / r0.leading_coeff();
  return {r0 * inv, s0 * inv, t0 * inv};
}

UPoly inverse_mod(const UPoly& a, const UPoly& m)
{
  if (m.is_zero())
    throw Error(ErrorKind::ZeroModulus, "inverse modulo the zero polynomial");
  auto e = extended_gcd(a % m, m);
  if (!e.g.is_one())
    throw Error(ErrorKind::GcdNotOne, "polynomial is not invertible modulo " + m.to_string());
  return e.u % m;
}

UPoly squarefree_part(const UPoly& a)
{
  if (a.is_zero())
    throw Error(ErrorKind::ZeroInput, "squarefree part of the zero polynomial");
  if (a.is_constant())
    return UPoly::constant(1, a.var());
  return (a / upoly_gcd(a, a.derivative())).monic();
}

std::vector<UPoly> squarefree_decomposition(const UPoly& a)
{
  if (a.is_zero())
    throw Error(ErrorKind::ZeroInput, "squarefree decomposition of the zero polynomial");
  std::vector<UPoly> out;
  if (a.is_constant())
    return out;
  UPoly f = a.monic();
  UPoly fp = f.derivative();
  UPoly c = upoly_gcd(f, fp);
  UPoly w = f / c;
  UPoly y = fp / c;
  UPoly z = y - w.derivative();
  while (w.degree() > 0) {
    UPoly g = upoly_gcd(w, z);
    w = w / g;
    y = z / g;
    z = y - w.derivative();
    out.push_back(std::move(g));
  }
  while (!out.empty() && out.back().is_one())
    out.pop_back();
  return out;
}

Rational upoly_resultant(const UPoly& a, const UPoly& b)
{
  if (a.is_zero() || b.is_zero())
    return 0;
  UPoly x = a, y = b;
  Rational acc = 1;
  // Invariant: Res(a, b) = acc * Res(x, y).
  while (true) {
    const int m = x.degree(), n = y.degree();
    if (n == 0) {
      Rational p = 1;
      for (int k = 0; k < m; ++k)
        p *= y.leading_coeff();
      return acc * p;
    }
    if (m == 0) {
      Rational p = 1;
      for (int k = 0; k < n; ++k)
        p *= x.leading_coeff();
      return acc * p;
    }
    if (m < n) {
      if ((m * n) % 2 != 0)
        acc = -acc;
      std::swap(x, y);
      continue;
    }
    // Res(x, y) = (-1)^{mn} Res(y, x) = (-1)^{mn} lc(y)^{m-k} Res(y, x mod y)
    UPoly r = x % y;
    if (r.is_zero())
      return 0;
    const int k = r.degree();
    if ((m * n) % 2 != 0)
      acc = -acc;
    for (int j = 0; j < m - k; ++j)
      acc *= y.leading_coeff();
    x = std::move(y);
    y = std::move(r);
  }
}

Rational discriminant(const UPoly& a)
{
  if (a.degree() < 1)
    throw Error(ErrorKind::DegreeZero, "discriminant needs degree >= 1");
  const long m = a.degree();
  Rational d = upoly_resultant(a, a.derivative()) / a.leading_coeff();
  if ((m * (m - 1) / 2) % 2 != 0)
    d = -d;
  return d;
}

std::vector<Integer> primitive_integer_coeffs(const UPoly& a)
{
  std::vector<Integer> out;
  if (a.is_zero())
    return out;
  Integer den = 1;
  for (const auto& c : a.coeffs())
    den = lcm(den, Integer(c.get_den()));
  Integer content = 0;
  for (const auto& c : a.coeffs()) {
    Integer v = c.get_num() * (den / c.get_den());
    out.push_back(v);
    content = gcd(content, v);
  }
  if (sgn(out.back()) < 0)
    content = -content;
  for (auto& v : out)
    v /= content;
  return out;
}

namespace {

Integer eval_mod(const std::vector<Integer>& h, const Integer& x, const Integer& m)
{
  Integer v = 0;
  for (std::size_t k = h.size(); k-- > 0;) {
    v = (v * x + h[k]) % m;
  }
  return v < 0 ? Integer(v + m) : v;
}

std::vector<Integer> derivative_coeffs(const std::vector<Integer>& h)
{
  std::vector<Integer> d;
  for (std::size_t k = 1; k < h.size(); ++k)
    d.push_back(h[k] * static_cast<unsigned long>(k));
  return d;
}

bool is_prime(unsigned long p)
{
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return p >= 2;
}

// Integer roots y of lc^{n-1} h(y / lc) for squarefree integer h with
// h(0) != 0. Every such y reduces to a simple root of h mod p times lc,
// for p not dividing lc and avoiding repeated roots, and Hensel lifting
// recovers it once p^k exceeds twice the root bound.
std::vector<Integer> scaled_integer_roots(const std::vector<Integer>& h)
{
  const std::size_t n = h.size() - 1;
  const Integer& lc = h[n];
  const auto dh = derivative_coeffs(h);
  Integer bound = abs(lc);
  Integer mx = 0;
  for (std::size_t k = 0; k < n; ++k)
    mx = std::max(mx, Integer(abs(h[k])));
  bound += mx;

  for (unsigned long p = 1009;; p += 2) {
    if (!is_prime(p) || lc % p == 0)
      continue;
    const Integer P = p;
    std::vector<Integer> roots;
    bool simple = true;
    for (unsigned long r = 0; r < p && simple; ++r) {
      if (eval_mod(h, r, P) != 0)
        continue;
      if (eval_mod(dh, r, P) == 0)
        simple = false;
      roots.push_back(r);
    }
    if (!simple)
      continue;
    std::vector<Integer> out;
    for (Integer x : roots) {
      Integer m = P;
      while (m <= 2 * bound) {
        m *= m;
        Integer inv;
        const Integer d = eval_mod(dh, x, m);
        mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
        x = (x - eval_mod(h, x, m) * inv) % m;
        if (x < 0)
          x += m;
      }
      Integer y = (lc * x) % m;
      if (y < 0)
        y += m;
      if (y > m / 2)
        y -= m;
      out.push_back(y);
    }
    return out;
  }
}

}  // namespace

std::vector<RationalRoot> rational_roots(const UPoly& a)
{
  if (a.is_zero())
    throw Error(ErrorKind::ZeroInput, "rational roots of the zero polynomial");
  std::vector<Rational> roots;
  UPoly sf = squarefree_part(a);
  std::vector<Integer> h = primitive_integer_coeffs(sf);
  if (h.size() >= 2 && h[0] == 0) {
    roots.push_back(0);
    h.erase(h.begin());
  }
  const std::size_t n = h.empty() ? 0 : h.size() - 1;
  if (n >= 1) {
    for (const auto& y : scaled_integer_roots(h)) {
      const Rational r = make_rational(y, h[n]);
      if (sf.eval(r) == 0)
        roots.push_back(r);
    }
  }
  std::sort(roots.begin(), roots.end());
  std::vector<RationalRoot> out;
  for (const auto& r : roots) {
    unsigned mult = 0;
    UPoly rest = a;
    const UPoly lin = UPoly::linear(r, a.var());
    while (true) {
      auto [q, rem] = divmod(rest, lin);
      if (!rem.is_zero())
        break;
      ++mult;
      rest = std::move(q);
    }
    out.push_back({r, mult});
  }
  return out;
}

namespace {

using FpPoly = std::vector<std::uint64_t>;

void fp_trim(FpPoly& a)
{
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p)
{
  std::uint64_t r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1)
      r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

FpPoly fp_mod(FpPoly a, const FpPoly& m, std::uint64_t p)
{
  fp_trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t inv = fp_inv(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t q = a.back() * inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j)
      a[shift + j] = (a[shift + j] + p - q * m[j] % p) % p;
    fp_trim(a);
  }
  return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, std::uint64_t p)
{
  if (a.empty() || b.empty())
    return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return fp_mod(std::move(r), m, p);
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p)
{
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    FpPoly r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

FpPoly fp_powmod(FpPoly base, std::uint64_t e, const FpPoly& m, std::uint64_t p)
{
  FpPoly r{1};
  base = fp_mod(std::move(base), m, p);
  while (e) {
    if (e & 1)
      r = fp_mulmod(r, base, m, p);
    base = fp_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

bool irreducible_mod_p(const std::vector<Integer>& h, std::uint64_t p)
{
  const Integer pz = static_cast<unsigned long>(p);
  if (h.back() % pz == 0)
    return false;
  FpPoly f(h.size());
  for (std::size_t k = 0; k < h.size(); ++k) {
    Integer v = h[k] % pz;
    if (v < 0)
      v += pz;
    f[k] = v.get_ui();
  }
  FpPoly df(f.size() - 1);
  for (std::size_t k = 1; k < f.size(); ++k)
    df[k - 1] = f[k] * (k % p) % p;
  fp_trim(df);
  if (df.empty() || fp_gcd(f, df, p).size() != 1)
    return false;
  const std::size_t n = f.size() - 1;
  FpPoly x{0, 1};
  FpPoly xq = x;
  for (std::size_t i = 1; i <= n / 2; ++i) {
    xq = fp_powmod(xq, p, f, p);
    FpPoly diff = xq;
    if (diff.size() < 2)
      diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    fp_trim(diff);
    if (fp_gcd(f, diff, p).size() != 1)
      return false;
  }
  return true;
}

}  // namespace

std::vector<FactorPower> split_factors(const UPoly& a)
{
  std::vector<FactorPower> out;
  const auto parts = squarefree_decomposition(a);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    UPoly rest = parts[k];
    if (rest.degree() < 1)
      continue;
    const auto e = static_cast<unsigned>(k + 1);
    for (const auto& r : rational_roots(rest)) {
      const UPoly lin = UPoly::linear(r.root, a.var());
      out.push_back({lin, e});
      rest = rest / lin;
    }
    if (rest.degree() >= 1)
      out.push_back({rest.monic().with_var(a.var()), e});
  }
  std::sort(out.begin(), out.end(), [](const FactorPower& x, const FactorPower& y) {
    if (x.q.degree() != y.q.degree())
      return x.q.degree() < y.q.degree();
    return x.q.to_string() < y.q.to_string();
  });
  return out;
}

bool certified_irreducible(const UPoly& a)
{
  if (a.degree() < 1)
    return false;
  if (a.degree() == 1)
    return true;
  if (!rational_roots(a).empty())
    return false;
  if (a.degree() <= 3)
    return true;
  if (squarefree_part(a).degree() != a.degree())
    return false;
  const auto h = primitive_integer_coeffs(a);
  for (std::uint64_t p = 2; p < 1000; ++p) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) {
        prime = false;
        break;
      }
    if (prime && irreducible_mod_p(h, p))
      return true;
  }
  return false;
}

}  // namespace shapelemma
