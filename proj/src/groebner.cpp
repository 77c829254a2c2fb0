#include <shapelemma/groebner.hpp>

#include <shapelemma/errors.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <string>

namespace shapelemma {

namespace {

using Terms = std::vector<Term>;
using MonoCmp = std::function<int(const Monomial&, const Monomial&)>;

Terms sorted_terms(const MPoly& f, const MonomialOrder& order)
{
  Terms t = f.terms();
  if (order.kind != MonomialOrder::Kind::Lex)
    std::sort(t.begin(), t.end(),
              [&](const Term& a, const Term& b) { return compare(a.mono, b.mono, order) > 0; });
  return t;
}

void make_monic(Terms& t)
{
  if (t.empty() || t.front().coeff == 1)
    return;
  const Rational inv = 1 / t.front().coeff;
  for (auto& x : t)
    x.coeff *= inv;
}

// Clears denominators and content, leaving a positive leading coefficient.
void make_primitive(Terms& t)
{
  if (t.empty())
    return;
  Integer den = 1;
  for (const auto& x : t)
    den = lcm(den, Integer(x.coeff.get_den()));
  Integer content = 0;
  for (const auto& x : t)
    content = gcd(content, Integer(x.coeff.get_num() * (den / x.coeff.get_den())));
  if (sgn(t.front().coeff) < 0)
    content = -content;
  if (den == 1 && content == 1)
    return;
  for (auto& x : t)
    x.coeff = Rational(Integer(x.coeff.get_num() * (den / x.coeff.get_den())) / content);
}

void scale(Terms& t, const Integer& k)
{
  for (auto& x : t)
    x.coeff *= k;
}

// Returns f[from..] - c*m*g[1..] with the leading terms assumed to cancel.
Terms sub_mul_tail(const Terms& f, std::size_t from, const Rational& c, const Monomial& m, const Terms& g,
                   const MonomialOrder& order)
{
  Terms out;
  out.reserve(f.size() - from + g.size());
  std::size_t a = from + 1;
  std::size_t b = 1;
  while (a < f.size() || b < g.size()) {
    if (b == g.size()) {
      out.push_back(f[a++]);
      continue;
    }
    const Monomial gm = g[b].mono * m;
    const int cmp = a == f.size() ? -1 : compare(f[a].mono, gm, order);
    if (cmp > 0) {
      out.push_back(f[a++]);
    } else if (cmp < 0) {
      out.push_back({gm, -c * g[b].coeff});
      ++b;
    } else {
      Rational s = f[a].coeff - c * g[b].coeff;
      if (s != 0)
        out.push_back({gm, std::move(s)});
      ++a;
      ++b;
    }
  }
  return out;
}

struct Reducer {
  const MonomialOrder& order;
  std::vector<const Terms*> basis;

  const Terms* find_divisor(const Monomial& m) const
  {
    for (const Terms* g : basis)
      if (g->front().mono.divides(m))
        return g;
    return nullptr;
  }

  Terms reduce(Terms f, std::uint32_t* sugar = nullptr) const
  {
    Terms rem;
    while (!f.empty()) {
      const Term& lt = f.front();
      if (const Terms* g = find_divisor(lt.mono)) {
        const Monomial m = lt.mono / g->front().mono;
        const Rational c = lt.coeff / g->front().coeff;
        if (sugar)
          *sugar = std::max<std::uint32_t>(*sugar, m.degree() + g->front().mono.degree());
        f = sub_mul_tail(f, 0, c, m, *g, order);
      } else {
        peel(f, rem);
      }
    }
    return rem;
  }

  // Integer-coefficient reduction by primitive basis elements; the result
  // is a primitive multiple of the true normal form.
  Terms reduce_fraction_free(Terms f, std::uint32_t* sugar = nullptr) const
  {
    make_primitive(f);
    Terms rem;
    unsigned steps = 0;
    while (!f.empty()) {
      const Term& lt = f.front();
      if (const Terms* g = find_divisor(lt.mono)) {
        const Monomial m = lt.mono / g->front().mono;
        const Integer a = lt.coeff.get_num();
        const Integer b = g->front().coeff.get_num();
        const Integer d = gcd(a, b);
        if (sugar)
          *sugar = std::max<std::uint32_t>(*sugar, m.degree() + g->front().mono.degree());
        if (b != d) {
          const Integer k = b / d;
          scale(f, k);
          scale(rem, k);
        }
        f = sub_mul_tail(f, 0, Rational(Integer(a / d)), m, *g, order);
        if (++steps % 16 == 0)
          remove_content(f, rem);
      } else {
        peel(f, rem);
      }
    }
    make_primitive(rem);
    return rem;
  }

private:
  void peel(Terms& f, Terms& rem) const
  {
    rem.push_back(std::move(f.front()));
    // Peel the irreducible head off the working polynomial.
    std::size_t k = 1;
    while (k < f.size() && !find_divisor(f[k].mono)) {
      rem.push_back(std::move(f[k]));
      ++k;
    }
    f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(k));
  }

  static void remove_content(Terms& f, Terms& rem)
  {
    Integer c = 0;
    for (const auto* t : {&f, &rem})
      for (const auto& x : *t) {
        c = gcd(c, Integer(x.coeff.get_num()));
        if (c == 1)
          return;
      }
    if (c == 0)
      return;
    for (auto* t : {&f, &rem})
      for (auto& x : *t)
        x.coeff = Rational(Integer(x.coeff.get_num() / c));
  }
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint32_t sugar;
};

class Buchberger {
public:
  explicit Buchberger(const MonomialOrder& order) : order_(order), limit_(max_pairs_from_env()) {}

  // Returns false once the ideal is known to be the unit ideal.
  bool add_input(const MPoly& f)
  {
    if (f.is_zero())
      return true;
    std::uint32_t sugar = static_cast<std::uint32_t>(f.total_degree());
    Terms t = reducer().reduce_fraction_free(sorted_terms(f, order_), &sugar);
    return insert(std::move(t), sugar);
  }

  bool run()
  {
    while (!pairs_.empty()) {
      auto best = pairs_.begin();
      for (auto it = pairs_.begin() + 1; it != pairs_.end(); ++it) {
        if (it->sugar < best->sugar ||
            (it->sugar == best->sugar && compare(it->lcm, best->lcm, order_) < 0))
          best = it;
      }
      Pair p = *best;
      *best = pairs_.back();
      pairs_.pop_back();
      if (++processed_ > limit_)
        throw Error(ErrorKind::WorkLimitExceeded,
                    "more than " + std::to_string(limit_) + " S-pairs (raise SHAPELEMMA_MAX_PAIRS)");
      Terms s = spoly(p);
      std::uint32_t sugar = p.sugar;
      s = reducer().reduce_fraction_free(std::move(s), &sugar);
      if (!insert(std::move(s), sugar))
        return false;
    }
    return true;
  }

  std::vector<MPoly> result(std::size_t nvars) const
  {
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (alive_[k])
        keep.push_back(k);
    std::vector<Terms> reduced;
    for (std::size_t k : keep) {
      Reducer r{order_, {}};
      for (std::size_t o : keep)
        if (o != k)
          r.basis.push_back(&polys_[o]);
      Terms t = r.reduce_fraction_free(polys_[k]);
      make_monic(t);
      reduced.push_back(std::move(t));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Terms& a, const Terms& b) {
      return compare(a.front().mono, b.front().mono, order_) < 0;
    });
    std::vector<MPoly> out;
    for (auto& t : reduced)
      out.emplace_back(nvars, std::move(t));
    return out;
  }

private:
  Reducer reducer() const
  {
    Reducer r{order_, {}};
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (alive_[k])
        r.basis.push_back(&polys_[k]);
    return r;
  }

  Terms spoly(const Pair& p) const
  {
    const Terms& f = polys_[p.i];
    const Terms& g = polys_[p.j];
    const Monomial mf = p.lcm / f.front().mono;
    const Monomial mg = p.lcm / g.front().mono;
    const Integer a = f.front().coeff.get_num();
    const Integer b = g.front().coeff.get_num();
    const Integer d = gcd(a, b);
    const Rational kf = Rational(Integer(b / d));
    Terms fm;
    fm.reserve(f.size());
    for (const auto& t : f)
      fm.push_back({t.mono * mf, t.coeff * kf});
    return sub_mul_tail(fm, 0, Rational(Integer(a / d)), mg, g, order_);
  }

  std::uint32_t pair_sugar(std::size_t i, std::size_t j, const Monomial& lcm) const
  {
    const auto si = sugar_[i] - polys_[i].front().mono.degree();
    const auto sj = sugar_[j] - polys_[j].front().mono.degree();
    return std::max(si, sj) + lcm.degree();
  }

  bool insert(Terms t, std::uint32_t sugar)
  {
    if (t.empty())
      return true;
    make_primitive(t);
    const bool unit = t.front().mono.degree() == 0;
    polys_.push_back(std::move(t));
    sugar_.push_back(std::max(sugar, polys_.back().front().mono.degree()));
    alive_.push_back(true);
    if (unit) {
      std::fill(alive_.begin(), alive_.end(), false);
      alive_.back() = true;
      pairs_.clear();
      return false;
    }
    update(polys_.size() - 1);
    return true;
  }

  // Gebauer-Moeller installation of the new element h.
  void update(std::size_t h)
  {
    const Monomial& lh = polys_[h].front().mono;
    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
      int state;  // 0 pending, 1 kept, 2 dropped
    };
    std::vector<Cand> cands;
    for (std::size_t g = 0; g < h; ++g) {
      if (!alive_[g])
        continue;
      const Monomial& lg = polys_[g].front().mono;
      cands.push_back({g, lh.lcm(lg), lh.is_coprime(lg), 0});
    }
    for (std::size_t a = 0; a < cands.size(); ++a) {
      Cand& c = cands[a];
      bool covered = false;
      if (!c.coprime) {
        for (std::size_t b = 0; b < cands.size() && !covered; ++b)
          if (b != a && cands[b].state != 2 && cands[b].lcm.divides(c.lcm))
            covered = true;
      }
      c.state = covered ? 2 : 1;
    }

    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + cands.size());
    for (auto& p : pairs_) {
      if (lh.divides(p.lcm) && !(lh.lcm(polys_[p.i].front().mono) == p.lcm) &&
          !(lh.lcm(polys_[p.j].front().mono) == p.lcm))
        continue;
      kept.push_back(std::move(p));
    }
    for (const auto& c : cands)
      if (c.state == 1 && !c.coprime)
        kept.push_back({c.g, h, c.lcm, pair_sugar(c.g, h, c.lcm)});
    pairs_ = std::move(kept);

    for (std::size_t g = 0; g < h; ++g)
      if (alive_[g] && lh.divides(polys_[g].front().mono))
        alive_[g] = false;
  }

  MonomialOrder order_;
  std::size_t limit_;
  std::size_t processed_ = 0;
  std::vector<Terms> polys_;
  std::vector<std::uint32_t> sugar_;
  std::vector<bool> alive_;
  std::vector<Pair> pairs_;
};

using Vec = std::vector<Rational>;

struct MonoKey {
  std::array<std::uint32_t, kMaxVars> e{};
  friend auto operator<=>(const MonoKey&, const MonoKey&) = default;
};

MonoKey key_of(const Monomial& m)
{
  MonoKey k;
  for (std::size_t i = 0; i < m.size(); ++i)
    k.e[i] = m[i];
  return k;
}

// Linear algebra over the quotient Q[x]/I of a zero-dimensional ideal,
// given its reduced grevlex basis.
class Quotient {
public:
  Quotient(std::size_t nvars, std::uint32_t active, const std::vector<MPoly>& basis)
      : nvars_(nvars), active_(active), order_(MonomialOrder::grevlex())
  {
    for (const auto& g : basis)
      basis_terms_.push_back(sorted_terms(g, order_));
    enumerate_staircase();
    for (std::size_t k = 0; k < staircase_.size(); ++k)
      index_[key_of(staircase_[k])] = k;
    mult_.resize(nvars_);
  }

  std::size_t dim() const { return staircase_.size(); }
  const std::vector<Monomial>& staircase() const { return staircase_; }

  Vec one() const { return coords(MPoly::constant(nvars_, 1)); }

  Vec coords(const MPoly& f) const
  {
    Reducer r{order_, {}};
    for (const auto& t : basis_terms_)
      r.basis.push_back(&t);
    Terms nf = r.reduce(sorted_terms(f, order_));
    Vec v(dim());
    for (auto& t : nf)
      v[index_.at(key_of(t.mono))] = t.coeff;
    return v;
  }

  // Coordinates of x_slot * (element with coordinates v).
  Vec multiply(std::size_t slot, const Vec& v)
  {
    auto& cols = mult_[slot];
    if (cols.empty()) {
      for (const auto& s : staircase_)
        cols.push_back(coords(MPoly::monomial(s * Monomial::variable(nvars_, slot))));
    }
    Vec out(dim());
    for (std::size_t k = 0; k < dim(); ++k) {
      if (v[k] == 0)
        continue;
      for (std::size_t r = 0; r < dim(); ++r)
        if (cols[k][r] != 0)
          out[r] += v[k] * cols[k][r];
    }
    return out;
  }

private:
  void enumerate_staircase()
  {
    std::vector<std::size_t> slots;
    for (std::size_t k = 0; k < nvars_; ++k)
      if ((active_ >> k) & 1u)
        slots.push_back(k);
    std::vector<Monomial> leads;
    for (const auto& t : basis_terms_)
      leads.push_back(t.front().mono);
    // Any monomial outside the staircase has some divisor among the leads;
    // walk the tree of monomials, stopping at the first divisible one.
    std::function<void(Monomial, std::size_t)> walk = [&](Monomial m, std::size_t from) {
      staircase_.push_back(m);
      for (std::size_t i = from; i < slots.size(); ++i) {
        Monomial next = m;
        next.set(slots[i], m[slots[i]] + 1);
        bool divisible = false;
        for (const auto& l : leads)
          if (l.divides(next)) {
            divisible = true;
            break;
          }
        if (!divisible)
          walk(next, i);
      }
    };
    bool unit = false;
    for (const auto& l : leads)
      unit = unit || l.degree() == 0;
    if (!unit)
      walk(Monomial(nvars_), 0);
  }

  std::size_t nvars_;
  std::uint32_t active_;
  MonomialOrder order_;
  std::vector<Terms> basis_terms_;
  std::vector<Monomial> staircase_;
  std::map<MonoKey, std::size_t> index_;
  std::vector<std::vector<Vec>> mult_;
};

// Incremental linear dependence detection with tracked combinations.
class Echelon {
public:
  explicit Echelon(std::size_t dim) : dim_(dim) {}

  // Adds v as element number count(); returns the dependency coefficients
  // (over elements 0..count()) when v lies in the span, else nullopt.
  std::optional<Vec> add(Vec v)
  {
    const std::size_t idx = count_;
    Vec comb(idx + 1);
    comb[idx] = 1;
    for (const auto& row : rows_) {
      if (v[row.pivot] == 0)
        continue;
      const Rational f = v[row.pivot];
      for (std::size_t k = 0; k < dim_; ++k)
        if (row.vec[k] != 0)
          v[k] -= f * row.vec[k];
      for (std::size_t k = 0; k < row.comb.size(); ++k)
        if (row.comb[k] != 0)
          comb[k] -= f * row.comb[k];
    }
    std::size_t pivot = 0;
    while (pivot < dim_ && v[pivot] == 0)
      ++pivot;
    if (pivot == dim_)
      return comb;
    const Rational inv = 1 / v[pivot];
    for (auto& x : v)
      x *= inv;
    for (auto& x : comb)
      x *= inv;
    rows_.push_back({pivot, std::move(v), std::move(comb)});
    ++count_;
    return std::nullopt;
  }

  std::size_t count() const { return count_; }

private:
  struct Row {
    std::size_t pivot;
    Vec vec;
    Vec comb;
  };
  std::size_t dim_;
  std::size_t count_ = 0;
  std::vector<Row> rows_;
};

// FGLM change of order for a zero-dimensional ideal.
std::vector<MPoly> fglm(Quotient& Q, std::size_t nvars, std::uint32_t active, const MonoCmp& cmp)
{
  if (Q.dim() == 0)
    return {MPoly::constant(nvars, 1)};
  struct Cand {
    Monomial mono;
    std::size_t parent;  // index into stair, or npos for 1
    std::size_t slot;
  };
  constexpr auto npos = static_cast<std::size_t>(-1);
  std::vector<Cand> cands{{Monomial(nvars), npos, 0}};
  std::vector<Monomial> stair;
  std::vector<Vec> stair_vecs;
  std::vector<Monomial> leads;
  std::vector<Terms> out;
  Echelon ech(Q.dim());

  while (!cands.empty()) {
    auto it = std::min_element(cands.begin(), cands.end(),
                               [&](const Cand& a, const Cand& b) { return cmp(a.mono, b.mono) < 0; });
    Cand c = *it;
    cands.erase(it);
    if (std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(c.mono); }))
      continue;
    if (std::any_of(stair.begin(), stair.end(), [&](const Monomial& s) { return s == c.mono; }))
      continue;
    Vec v = c.parent == npos ? Q.one() : Q.multiply(c.slot, stair_vecs[c.parent]);
    if (auto dep = ech.add(v)) {
      const Vec& d = *dep;
      Terms t{{c.mono, 1}};
      const Rational lead = d.back();
      for (std::size_t k = stair.size(); k-- > 0;)
        if (d[k] != 0)
          t.push_back({stair[k], d[k] / lead});
      leads.push_back(c.mono);
      out.push_back(std::move(t));
    } else {
      stair.push_back(c.mono);
      stair_vecs.push_back(std::move(v));
      for (std::size_t s = 0; s < nvars; ++s)
        if ((active >> s) & 1u)
          cands.push_back({c.mono * Monomial::variable(nvars, s), stair.size() - 1, s});
    }
  }
  std::sort(out.begin(), out.end(),
            [&](const Terms& a, const Terms& b) { return cmp(a.front().mono, b.front().mono) < 0; });
  std::vector<MPoly> res;
  for (auto& t : out)
    res.emplace_back(nvars, std::move(t));
  return res;
}

// Minimal polynomial of multiplication by x_slot on the quotient.
UPoly minimal_polynomial(Quotient& Q, std::size_t slot)
{
  const std::string var = var_name(slot);
  if (Q.dim() == 0)
    return UPoly::constant(1, var);
  Echelon ech(Q.dim());
  Vec v = Q.one();
  for (;;) {
    if (auto dep = ech.add(v)) {
      Vec c = *dep;
      return UPoly(std::move(c), var).monic();
    }
    v = Q.multiply(slot, v);
  }
}

std::uint32_t used_slots(const std::vector<MPoly>& gens)
{
  std::uint32_t m = 0;
  for (const auto& g : gens)
    m |= g.support();
  return m;
}

}  // namespace

std::size_t max_pairs_from_env()
{
  if (const char* s = std::getenv("SHAPELEMMA_MAX_PAIRS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && v > 0)
      return static_cast<std::size_t>(v);
  }
  return 100000;
}

std::vector<MPoly> buchberger(const std::vector<MPoly>& gens, const MonomialOrder& order)
{
  std::size_t nvars = 0;
  for (const auto& g : gens)
    nvars = std::max(nvars, g.nvars());
  Buchberger b(order);
  bool open = true;
  for (const auto& g : gens) {
    if (!(open = b.add_input(g)))
      break;
  }
  if (open)
    b.run();
  return b.result(nvars);
}

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& basis, const MonomialOrder& order)
{
  std::vector<Terms> bt;
  bt.reserve(basis.size());
  for (const auto& g : basis)
    if (!g.is_zero())
      bt.push_back(sorted_terms(g, order));
  Reducer r{order, {}};
  for (const auto& t : bt)
    r.basis.push_back(&t);
  return MPoly(f.nvars(), r.reduce(sorted_terms(f, order)));
}

const Term& leading_term(const MPoly& f, const MonomialOrder& order)
{
  const auto& t = f.terms();
  if (order.kind == MonomialOrder::Kind::Lex)
    return t.front();
  return *std::max_element(t.begin(), t.end(),
                           [&](const Term& a, const Term& b) { return compare(a.mono, b.mono, order) < 0; });
}

struct Ideal::Cache {
  std::once_flag grevlex_once;
  std::once_flag lex_once;
  std::once_flag quotient_once;
  std::vector<MPoly> grevlex;
  std::vector<MPoly> lex;
  std::optional<std::size_t> dim;
  std::unique_ptr<Quotient> quotient;
  std::mutex quotient_mutex;
};

Ideal::Ideal(std::size_t nvars, std::uint32_t active, std::vector<MPoly> gens)
    : nvars_(nvars), active_(active), cache_(std::make_shared<Cache>())
{
  for (auto& g : gens) {
    if (g.is_zero())
      continue;
    if (g.nvars() != nvars)
      throw Error(ErrorKind::WrongArity, "generator ring has " + std::to_string(g.nvars()) + " slots, expected " +
                                             std::to_string(nvars));
    if (g.support() & ~active)
      throw Error(ErrorKind::WrongArity, "generator uses an inactive variable: " + g.to_string());
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::affine(std::size_t nvars, std::vector<MPoly> gens)
{
  return Ideal(nvars, ((1u << nvars) - 1) & ~1u, std::move(gens));
}

Ideal Ideal::full(std::size_t nvars, std::vector<MPoly> gens)
{
  return Ideal(nvars, (1u << nvars) - 1, std::move(gens));
}

std::size_t Ideal::last_var() const
{
  for (std::size_t k = nvars_; k-- > 0;)
    if (is_active(k))
      return k;
  return 0;
}

const std::vector<MPoly>& Ideal::grevlex_basis() const
{
  std::call_once(cache_->grevlex_once, [&] {
    cache_->grevlex = buchberger(gens_, MonomialOrder::grevlex());
    std::vector<std::size_t> pure(nvars_, 0);
    bool unit = false;
    for (const auto& g : cache_->grevlex) {
      const Monomial& m = leading_term(g, MonomialOrder::grevlex()).mono;
      if (m.degree() == 0)
        unit = true;
      for (std::size_t k = 0; k < nvars_; ++k)
        if (m[k] == m.degree() && m.degree() > 0)
          pure[k] = 1;
    }
    bool finite = unit;
    if (!unit) {
      finite = true;
      for (std::size_t k = 0; k < nvars_; ++k)
        if (is_active(k) && !pure[k])
          finite = false;
    }
    if (finite) {
      cache_->quotient = std::make_unique<Quotient>(nvars_, active_, cache_->grevlex);
      cache_->dim = cache_->quotient->dim();
    }
  });
  return cache_->grevlex;
}

const std::vector<MPoly>& Ideal::lex_basis() const
{
  std::call_once(cache_->lex_once, [&] {
    grevlex_basis();
    if (cache_->quotient) {
      std::lock_guard lock(cache_->quotient_mutex);
      cache_->lex = fglm(*cache_->quotient, nvars_, active_, [](const Monomial& a, const Monomial& b) {
        return compare(a, b, MonomialOrder::lex());
      });
    } else {
      cache_->lex = buchberger(gens_, MonomialOrder::lex());
    }
  });
  return cache_->lex;
}

bool Ideal::contains(const MPoly& f) const
{
  if (f.is_zero())
    return true;
  return normal_form(f, grevlex_basis(), MonomialOrder::grevlex()).is_zero();
}

bool Ideal::is_unit() const
{
  const auto& b = grevlex_basis();
  return b.size() == 1 && b[0].is_constant();
}

bool Ideal::is_zero_dimensional() const { return dimension().has_value(); }

std::optional<std::size_t> Ideal::dimension() const
{
  grevlex_basis();
  return cache_->dim;
}

Ideal Ideal::plus(const std::vector<MPoly>& more) const
{
  std::vector<MPoly> g = gens_;
  g.insert(g.end(), more.begin(), more.end());
  return Ideal(nvars_, active_ | used_slots(more), std::move(g));
}

std::vector<MPoly> groebner_basis(const Ideal& I, const MonomialOrder& order)
{
  switch (order.kind) {
  case MonomialOrder::Kind::Lex:
    return I.lex_basis();
  case MonomialOrder::Kind::Grevlex:
    return I.grevlex_basis();
  default:
    return buchberger(I.generators(), order);
  }
}

Ideal elimination_ideal(const Ideal& I, std::uint32_t keep)
{
  const std::size_t nv = I.nvars();
  keep &= I.active();
  std::vector<std::size_t> perm(nv);
  std::size_t next = 0;
  std::size_t eliminated = 0;
  for (std::size_t k = 0; k < nv; ++k)
    if (I.is_active(k) && !((keep >> k) & 1u)) {
      perm[k] = next++;
      ++eliminated;
    }
  for (std::size_t k = 0; k < nv; ++k)
    if ((keep >> k) & 1u)
      perm[k] = next++;
  for (std::size_t k = 0; k < nv; ++k)
    if (!I.is_active(k))
      perm[k] = next++;

  std::vector<MPoly> basis;
  if (I.is_zero_dimensional()) {
    Quotient Q(nv, I.active(), I.grevlex_basis());
    basis = fglm(Q, nv, I.active(), [&](const Monomial& a, const Monomial& b) {
      for (std::size_t r = 0; r < nv; ++r) {
        for (std::size_t k = 0; k < nv; ++k) {
          if (perm[k] != r)
            continue;
          if (a[k] != b[k])
            return a[k] < b[k] ? -1 : 1;
        }
      }
      return 0;
    });
  } else {
    std::vector<MPoly> g;
    for (const auto& f : I.generators())
      g.push_back(f.remap(nv, perm));
    std::vector<std::size_t> inv(nv);
    for (std::size_t k = 0; k < nv; ++k)
      inv[perm[k]] = k;
    for (const auto& f : buchberger(g, MonomialOrder::elimination(eliminated)))
      basis.push_back(f.remap(nv, inv));
  }
  std::vector<MPoly> out;
  for (auto& f : basis)
    if ((f.support() & ~keep) == 0)
      out.push_back(std::move(f));
  return Ideal(nv, keep, std::move(out));
}

UPoly univariate_eliminant(const Ideal& I, std::size_t slot)
{
  if (I.is_zero_dimensional()) {
    Quotient Q(I.nvars(), I.active(), I.grevlex_basis());
    return minimal_polynomial(Q, slot);
  }
  Ideal E = elimination_ideal(I, 1u << slot);
  std::vector<UPoly> us;
  for (const auto& g : E.generators())
    us.push_back(g.to_upoly(slot));
  if (us.empty())
    return UPoly(std::vector<Rational>{}, var_name(slot));
  return upoly_gcd(us).with_var(var_name(slot));
}

bool ideal_member(const MPoly& f, const Ideal& I) { return I.contains(f); }

std::optional<std::size_t> quotient_dim(const Ideal& I) { return I.dimension(); }

Ideal saturation(const Ideal& I, const MPoly& g)
{
  if (g.is_zero())
    throw Error(ErrorKind::ZeroInput, "saturation by zero");
  const std::size_t nv = I.nvars();
  if (nv + 1 > kMaxVars)
    throw Error(ErrorKind::WrongArity, "no room for the saturation variable");
  std::vector<std::size_t> shift(nv), back(nv + 1);
  for (std::size_t k = 0; k < nv; ++k) {
    shift[k] = k + 1;
    back[k + 1] = k;
  }
  back[0] = 0;
  std::vector<MPoly> gens;
  for (const auto& f : I.generators())
    gens.push_back(f.remap(nv + 1, shift));
  const MPoly t = MPoly::variable(nv + 1, 0);
  gens.push_back(MPoly::constant(nv + 1, 1) - t * g.remap(nv + 1, shift));
  std::vector<MPoly> out;
  for (const auto& f : buchberger(gens, MonomialOrder::elimination(1)))
    if (!f.uses(0))
      out.push_back(f.remap(nv, back));
  return Ideal(nv, I.active() | g.support(), std::move(out));
}

Ideal radical_zero_dim(const Ideal& I)
{
  if (!I.is_zero_dimensional())
    throw Error(ErrorKind::NotZeroDimensional, "radical requires a zero-dimensional ideal");
  if (I.is_unit())
    return I;
  Quotient Q(I.nvars(), I.active(), I.grevlex_basis());
  std::vector<MPoly> extra;
  for (std::size_t k = 0; k < I.nvars(); ++k) {
    if (!I.is_active(k))
      continue;
    const UPoly e = minimal_polynomial(Q, k);
    extra.push_back(MPoly::from_upoly(I.nvars(), k, squarefree_part(e)));
  }
  return I.plus(extra);
}

bool ideal_equal(const Ideal& I, const Ideal& J)
{
  if (I.nvars() != J.nvars())
    return false;
  return I.grevlex_basis() == J.grevlex_basis();
}

Matrix multiplication_matrix(const Ideal& I, const MPoly& f)
{
  if (!I.is_zero_dimensional())
    throw Error(ErrorKind::NotZeroDimensional, "multiplication matrix requires a zero-dimensional ideal");
  const Quotient Q(I.nvars(), I.active(), I.grevlex_basis());
  const std::size_t D = Q.dim();
  Matrix m(D, std::vector<Rational>(D));
  for (std::size_t k = 0; k < D; ++k) {
    const Vec v = Q.coords(f * MPoly::monomial(Q.staircase()[k]));
    for (std::size_t r = 0; r < D; ++r)
      m[r][k] = v[r];
  }
  return m;
}

bool ideal_equal_lex(const Ideal& I, const Ideal& J)
{
  if (I.nvars() != J.nvars())
    return false;
  return buchberger(I.generators(), MonomialOrder::lex()) == buchberger(J.generators(), MonomialOrder::lex());
}

namespace {

void collect_points(const Ideal& J, const std::vector<std::size_t>& slots, std::size_t depth,
                    std::vector<Rational>& point, std::vector<std::vector<Rational>>& out)
{
  if (J.is_unit())
    return;
  if (depth == slots.size()) {
    out.push_back(point);
    return;
  }
  const std::size_t slot = slots[depth];
  const UPoly e = univariate_eliminant(J, slot);
  if (e.degree() < 1)
    return;
  for (const auto& r : rational_roots(e)) {
    point[slot] = r.root;
    MPoly lin = MPoly::variable(J.nvars(), slot) - MPoly::constant(J.nvars(), r.root);
    collect_points(J.plus({lin}), slots, depth + 1, point, out);
  }
  point[slot] = 0;
}

}  // namespace

std::vector<std::vector<Rational>> rational_points(const Ideal& I)
{
  if (!I.is_zero_dimensional())
    throw Error(ErrorKind::NotZeroDimensional, "point enumeration requires a zero-dimensional ideal");
  std::vector<std::size_t> slots;
  for (std::size_t k = I.nvars(); k-- > 0;)
    if (I.is_active(k))
      slots.push_back(k);
  std::vector<Rational> point(I.nvars());
  std::vector<std::vector<Rational>> out;
  collect_points(I, slots, 0, point, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace shapelemma
