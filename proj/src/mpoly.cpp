#include <shapelemma/mpoly.hpp>

#include <shapelemma/detail/format.hpp>
#include <shapelemma/errors.hpp>

#include <algorithm>
#include <cassert>

namespace shapelemma {

std::string var_name(std::size_t slot) { return "x" + std::to_string(slot); }

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint32_t>(nvars))
{
  if (nvars > kMaxVars)
    throw Error(ErrorKind::WrongArity, "too many variables (" + std::to_string(nvars) + ")");
}

Monomial::Monomial(std::initializer_list<std::uint32_t> exps) : Monomial(exps.size())
{
  std::size_t k = 0;
  for (auto e : exps)
    set(k++, e);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t slot, std::uint32_t e)
{
  Monomial m(nvars);
  m.set(slot, e);
  return m;
}

void Monomial::set(std::size_t k, std::uint32_t e)
{
  assert(k < nvars_);
  degree_ = degree_ - exps_[k] + e;
  exps_[k] = e;
}

std::uint32_t Monomial::degree_in(std::size_t first, std::size_t last) const
{
  std::uint32_t s = 0;
  for (std::size_t k = first; k < last && k < nvars_; ++k)
    s += exps_[k];
  return s;
}

bool Monomial::divides(const Monomial& o) const
{
  if (degree_ > o.degree_)
    return false;
  for (std::size_t k = 0; k < nvars_; ++k)
    if (exps_[k] > o.exps_[k])
      return false;
  return true;
}

bool Monomial::is_coprime(const Monomial& o) const
{
  for (std::size_t k = 0; k < nvars_; ++k)
    if (exps_[k] != 0 && o.exps_[k] != 0)
      return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& o) const
{
  Monomial r(nvars_);
  for (std::size_t k = 0; k < nvars_; ++k)
    r.set(k, std::max(exps_[k], o.exps_[k]));
  return r;
}

Monomial Monomial::operator*(const Monomial& o) const
{
  Monomial r = *this;
  for (std::size_t k = 0; k < nvars_; ++k)
    r.exps_[k] += o.exps_[k];
  r.degree_ += o.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const
{
  Monomial r = *this;
  for (std::size_t k = 0; k < nvars_; ++k) {
    assert(r.exps_[k] >= o.exps_[k]);
    r.exps_[k] -= o.exps_[k];
  }
  r.degree_ -= o.degree_;
  return r;
}

std::string Monomial::to_string() const
{
  std::string s;
  for (std::size_t k = 0; k < nvars_; ++k) {
    if (exps_[k] == 0)
      continue;
    if (!s.empty())
      s += '*';
    s += detail::power_string(var_name(k), exps_[k]);
  }
  return s;
}

namespace {

int lex_cmp(const Monomial& a, const Monomial& b, std::size_t first, std::size_t last)
{
  for (std::size_t k = first; k < last; ++k)
    if (a[k] != b[k])
      return a[k] < b[k] ? -1 : 1;
  return 0;
}

int grevlex_cmp(const Monomial& a, const Monomial& b, std::size_t first, std::size_t last)
{
  const auto da = a.degree_in(first, last);
  const auto db = b.degree_in(first, last);
  if (da != db)
    return da < db ? -1 : 1;
  for (std::size_t k = last; k-- > first;)
    if (a[k] != b[k])
      return a[k] > b[k] ? -1 : 1;
  return 0;
}

}  // namespace

int compare(const Monomial& a, const Monomial& b, const MonomialOrder& order)
{
  const std::size_t n = a.size();
  switch (order.kind) {
  case MonomialOrder::Kind::Lex:
    return lex_cmp(a, b, 0, n);
  case MonomialOrder::Kind::Grevlex:
    if (a.degree() != b.degree())
      return a.degree() < b.degree() ? -1 : 1;
    return grevlex_cmp(a, b, 0, n);
  case MonomialOrder::Kind::Block: {
    const std::size_t k = std::min(order.block, n);
    if (int c = grevlex_cmp(a, b, 0, k))
      return c;
    return grevlex_cmp(a, b, k, n);
  }
  }
  return 0;
}

MPoly::MPoly(std::size_t nvars, std::vector<Term> terms) : nvars_(nvars), terms_(std::move(terms))
{
  normalize();
}

void MPoly::normalize()
{
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    return lex_cmp(a.mono, b.mono, 0, a.mono.size()) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
    if (out.back().coeff == 0)
      out.pop_back();
  }
  terms_ = std::move(out);
}

MPoly MPoly::constant(std::size_t nvars, const Rational& c)
{
  if (c == 0)
    return MPoly(nvars);
  return MPoly(nvars, {Term{Monomial(nvars), c}});
}

MPoly MPoly::variable(std::size_t nvars, std::size_t slot)
{
  return MPoly(nvars, {Term{Monomial::variable(nvars, slot), Rational(1)}});
}

MPoly MPoly::monomial(const Monomial& m, const Rational& c)
{
  if (c == 0)
    return MPoly(m.size());
  return MPoly(m.size(), {Term{m, c}});
}

MPoly MPoly::from_upoly(std::size_t nvars, std::size_t slot, const UPoly& p)
{
  std::vector<Term> terms;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k)
    if (p.coeffs()[k] != 0)
      terms.push_back({Monomial::variable(nvars, slot, static_cast<std::uint32_t>(k)), p.coeffs()[k]});
  return MPoly(nvars, std::move(terms));
}

bool MPoly::is_constant() const
{
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree() == 0);
}

Rational MPoly::constant_term() const
{
  if (!terms_.empty() && terms_.back().mono.degree() == 0)
    return terms_.back().coeff;
  return 0;
}

int MPoly::total_degree() const
{
  int d = -1;
  for (const auto& t : terms_)
    d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

int MPoly::degree_in(std::size_t slot) const
{
  int d = -1;
  for (const auto& t : terms_)
    d = std::max(d, static_cast<int>(t.mono[slot]));
  return d;
}

int MPoly::degree_in_range(std::size_t first, std::size_t last) const
{
  int d = -1;
  for (const auto& t : terms_)
    d = std::max(d, static_cast<int>(t.mono.degree_in(first, last)));
  return d;
}

bool MPoly::uses(std::size_t slot) const
{
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono[slot] != 0; });
}

std::uint32_t MPoly::support() const
{
  std::uint32_t mask = 0;
  for (const auto& t : terms_)
    for (std::size_t k = 0; k < nvars_; ++k)
      if (t.mono[k] != 0)
        mask |= 1u << k;
  return mask;
}

MPoly MPoly::operator-() const
{
  MPoly r = *this;
  for (auto& t : r.terms_)
    t.coeff = -t.coeff;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o)
{
  if (o.is_zero())
    return *this;
  if (nvars_ == 0)
    nvars_ = o.nvars_;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    int c;
    if (a == terms_.end())
      c = -1;
    else if (b == o.terms_.end())
      c = 1;
    else
      c = lex_cmp(a->mono, b->mono, 0, nvars_);
    if (c > 0) {
      out.push_back(std::move(*a++));
    } else if (c < 0) {
      out.push_back(*b++);
    } else {
      Rational s = a->coeff + b->coeff;
      if (s != 0)
        out.push_back({a->mono, s});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly& MPoly::operator*=(const Rational& c)
{
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_)
    t.coeff *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b)
{
  const std::size_t n = std::max(a.nvars_, b.nvars_);
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_)
      terms.push_back({s.mono * t.mono, s.coeff * t.coeff});
  return MPoly(n, std::move(terms));
}

MPoly MPoly::pow(unsigned e) const
{
  MPoly result = constant(nvars_, 1);
  MPoly base = *this;
  while (e) {
    if (e & 1)
      result = result * base;
    e >>= 1;
    if (e)
      base = base * base;
  }
  return result;
}

MPoly MPoly::mul_monomial(const Monomial& m) const
{
  MPoly r = *this;
  for (auto& t : r.terms_)
    t.mono = t.mono * m;
  return r;
}

MPoly MPoly::monic_lex() const
{
  if (is_zero())
    return *this;
  return *this * Rational(1 / terms_.front().coeff);
}

bool operator==(const MPoly& a, const MPoly& b)
{
  if (a.terms_.size() != b.terms_.size())
    return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (!(a.terms_[k].mono == b.terms_[k].mono) || a.terms_[k].coeff != b.terms_[k].coeff)
      return false;
  return true;
}

MPoly MPoly::substitute(std::size_t slot, const Rational& value) const
{
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term u = t;
    const auto e = t.mono[slot];
    if (e != 0) {
      Rational p;
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), value.get_num_mpz_t(), e);
      mpz_pow_ui(den.get_mpz_t(), value.get_den_mpz_t(), e);
      p = make_rational(num, den);
      u.coeff *= p;
      u.mono.set(slot, 0);
    }
    if (u.coeff != 0)
      terms.push_back(std::move(u));
  }
  return MPoly(nvars_, std::move(terms));
}

MPoly MPoly::substitute(std::size_t slot, const MPoly& p) const
{
  const int top = degree_in(slot);
  if (top <= 0)
    return *this;
  std::vector<MPoly> powers{constant(nvars_, 1)};
  for (int k = 1; k <= top; ++k)
    powers.push_back(powers.back() * p);
  std::vector<MPoly> parts(static_cast<std::size_t>(top) + 1, MPoly(nvars_));
  std::vector<std::vector<Term>> buckets(parts.size());
  for (const auto& t : terms_) {
    Term u = t;
    u.mono.set(slot, 0);
    buckets[t.mono[slot]].push_back(std::move(u));
  }
  MPoly result(nvars_);
  for (std::size_t k = 0; k < buckets.size(); ++k)
    if (!buckets[k].empty())
      result += MPoly(nvars_, std::move(buckets[k])) * powers[k];
  return result;
}

Rational MPoly::evaluate(std::span<const Rational> point) const
{
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t k = 0; k < nvars_; ++k)
      for (std::uint32_t e = 0; e < t.mono[k]; ++e)
        v *= point[k];
    sum += v;
  }
  return sum;
}

MPoly MPoly::remap(std::size_t new_nvars, std::span<const std::size_t> perm) const
{
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(new_nvars);
    for (std::size_t k = 0; k < nvars_; ++k)
      if (t.mono[k] != 0)
        m.set(perm[k], t.mono[k]);
    terms.push_back({m, t.coeff});
  }
  return MPoly(new_nvars, std::move(terms));
}

UPoly MPoly::to_upoly(std::size_t slot) const
{
  std::vector<Rational> c;
  for (const auto& t : terms_) {
    if (t.mono[slot] != t.mono.degree())
      throw Error(ErrorKind::WrongArity, "polynomial is not univariate in " + var_name(slot));
    const auto e = t.mono[slot];
    if (c.size() <= e)
      c.resize(e + 1);
    c[e] += t.coeff;
  }
  return UPoly(std::move(c), var_name(slot));
}

std::vector<MPoly> MPoly::coefficients_in(std::size_t slot) const
{
  const int top = degree_in(slot);
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(std::max(top, -1) + 1));
  for (const auto& t : terms_) {
    Term u = t;
    u.mono.set(slot, 0);
    buckets[t.mono[slot]].push_back(std::move(u));
  }
  std::vector<MPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets)
    out.emplace_back(nvars_, std::move(b));
  return out;
}

std::string MPoly::to_string() const
{
  if (terms_.empty())
    return "0";
  std::string s;
  for (const auto& t : terms_)
    detail::append_term(s, t.coeff, t.mono.to_string());
  return s;
}

}  // namespace shapelemma
