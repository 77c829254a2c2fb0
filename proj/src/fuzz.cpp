#include <shapelemma/errors.hpp>
#include <shapelemma/fuzz.hpp>
#include <shapelemma/groebner.hpp>
#include <shapelemma/poisson.hpp>
#include <shapelemma/resultant.hpp>
#include <shapelemma/shape.hpp>
#include <shapelemma/subresultant.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

namespace shapelemma {

namespace {

constexpr std::size_t kMaxRecorded = 10;

Monomial random_monomial(std::mt19937_64& rng, std::size_t n, int xdeg, int hdeg)
{
  Monomial m(n + 1);
  int left = xdeg;
  for (std::size_t k = 1; k + 1 < n; ++k) {
    const int e = std::uniform_int_distribution<int>(0, left)(rng);
    m.set(k, static_cast<std::uint32_t>(e));
    left -= e;
  }
  m.set(n - 1, static_cast<std::uint32_t>(left));
  m.set(n, static_cast<std::uint32_t>(hdeg));
  return m;
}

Rational random_coeff(std::mt19937_64& rng)
{
  int c = std::uniform_int_distribution<int>(1, 5)(rng);
  return std::bernoulli_distribution(0.5)(rng) ? c : -c;
}

class Suite {
public:
  explicit Suite(FuzzReport& rep) : rep_(rep)
  {
    for (const char* name : {"resultant_in_ideal", "eliminant_divides_resultant", "subresultant_relations",
                             "theorem_elim", "theorem_slm2", "theorem_rshape", "prop_n2", "parametric_shape",
                             "multiplicity_stable", "poisson"})
      rep_.checks.push_back({name, 0, 0, 0});
  }

  // Runs one property; an exception counts as a failure.
  void run(const std::string& name, const PolySystem& s, const std::function<bool()>& body)
  {
    FuzzCheck& c = find(name);
    std::string why;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = body();
    } catch (const std::exception& e) {
      why = e.what();
    }
    c.seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ++c.runs;
    if (!ok) {
      ++c.failures;
      if (rep_.failures.size() < kMaxRecorded)
        rep_.failures.push_back(name + (why.empty() ? "" : " (" + why + ")") + " on\n" + s.to_string());
    }
  }

  // Theorem checks only count when the hypotheses hold.
  void theorem(const std::string& name, const PolySystem& s, const std::function<TheoremReport()>& body)
  {
    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
      find(name).seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };
    try {
      const TheoremReport r = body();
      elapsed();
      if (r.verdict == Verdict::HypothesisFailed)
        return;
      run(name, s, [&] { return r.verdict == Verdict::Consistent; });
    } catch (const std::exception& e) {
      elapsed();
      const std::string msg = e.what();
      run(name, s, [&]() -> bool { throw std::runtime_error(msg); });
    }
  }

private:
  FuzzCheck& find(const std::string& name)
  {
    for (auto& c : rep_.checks)
      if (c.name == name)
        return c;
    throw std::out_of_range(name);
  }

  FuzzReport& rep_;
};

void check_system(Suite& suite, const PolySystem& s, const Ideal& I)
{
  const std::size_t nv = s.nvars();
  const std::size_t xn = s.hidden();
  const UPoly R = hidden_variable_resultant(s).poly;
  const MPoly Rm = MPoly::from_upoly(nv, xn, R);

  suite.run("resultant_in_ideal", s, [&] { return I.contains(Rm); });
  if (!R.is_zero())
    suite.run("eliminant_divides_resultant", s, [&] { return divides(univariate_eliminant(I, xn), R); });

  std::optional<SubresultantData> sub;
  if (s.rho >= 1) {
    sub = first_subresultant_polys(s);
    suite.run("subresultant_relations", s, [&] {
      const Ideal H = Ideal::full(nv, s.homogenized());
      const Monomial& a0 = sub->monomials[0];
      const MPoly s0 = MPoly::from_upoly(nv, xn, sub->s_alpha[0]);
      for (std::size_t b = 1; b < sub->monomials.size(); ++b) {
        const MPoly sb = MPoly::from_upoly(nv, xn, sub->s_alpha[b]);
        if (!H.contains(s0 * MPoly::monomial(sub->monomials[b]) - sb * MPoly::monomial(a0)))
          return false;
      }
      for (const auto& p : sub->p)
        if (!I.contains(p))
          return false;
      return true;
    });
  }

  suite.theorem("theorem_elim", s, [&] { return check_theorem_elim(s); });
  suite.theorem("theorem_slm2", s, [&] { return check_theorem_slm2(s); });
  suite.theorem("theorem_rshape", s, [&] { return check_theorem_rshape(s); });
  if (s.n() == 2)
    suite.theorem("prop_n2", s, [&] { return check_prop_n2(s); });

  if (sub && !R.is_zero()) {
    std::vector<UPoly> all{R};
    all.insert(all.end(), sub->s.begin(), sub->s.end());
    if (upoly_gcd(all).is_one()) {
      suite.run("parametric_shape", s, [&] {
        const std::vector<UPoly> ds(sub->s.begin() + 1, sub->s.end());
        const ParametricShape out = shape_from_parametric(R, sub->s[0], ds);
        // <R, p_i> lies in the output ideal, and both have colength equal to
        // the degree of the part of R coprime to s_0.
        const auto basis = out.basis.generators();
        std::vector<MPoly> gens{Rm};
        gens.insert(gens.end(), sub->p.begin(), sub->p.end());
        for (const auto& g : gens)
          if (!normal_form(g, basis, MonomialOrder::lex()).is_zero())
            return false;
        UPoly coprime = R;
        for (UPoly h = upoly_gcd(coprime, sub->s[0]); h.degree() > 0; h = upoly_gcd(coprime, sub->s[0]))
          coprime = divmod(coprime, h).first;
        return out.basis.r.degree() == coprime.degree();
      });
    }
  }

  const auto charts = chart_decomposition(s);
  suite.run("multiplicity_stable", s, [&] {
    for (const auto& c : charts) {
      if (!c.has_length)
        continue;
      for (const auto& pt : chart_points(c))
        multiplicity_at_point(c, pt);
    }
    return true;
  });
  const bool finite = std::all_of(charts.begin(), charts.end(), [](const ChartIdeal& c) { return c.finite; });
  if (finite)
    suite.run("poisson", s, [&] { return verify_poisson(s).pass; });
}

}  // namespace

PolySystem random_system(std::mt19937_64& rng, std::size_t n, int max_degree)
{
  std::vector<MPoly> polys;
  for (std::size_t i = 0; i < n; ++i) {
    const int d = std::uniform_int_distribution<int>(1, max_degree)(rng);
    MPoly f(n + 1);
    f += MPoly::monomial(random_monomial(rng, n, d, std::uniform_int_distribution<int>(0, 1)(rng)), random_coeff(rng));
    const int extra = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int t = 0; t < extra; ++t) {
      const int xd = std::uniform_int_distribution<int>(0, d)(rng);
      const int hd = std::uniform_int_distribution<int>(0, 2)(rng);
      f += MPoly::monomial(random_monomial(rng, n, xd, hd), random_coeff(rng));
    }
    if (f.degree_in_range(1, n) < 1)
      f += MPoly::variable(n + 1, 1);
    polys.push_back(std::move(f));
  }
  return PolySystem::from_polys(std::move(polys));
}

bool FuzzReport::ok() const
{
  return std::all_of(checks.begin(), checks.end(), [](const FuzzCheck& c) { return c.failures == 0; });
}

const FuzzCheck& FuzzReport::check(const std::string& name) const
{
  for (const auto& c : checks)
    if (c.name == name)
      return c;
  throw std::out_of_range("no fuzz check named " + name);
}

FuzzReport run_fuzz(const FuzzOptions& opts)
{
  FuzzReport rep;
  rep.seed = opts.seed;
  Suite suite(rep);
  std::mt19937_64 rng(opts.seed);
  const std::size_t attempts = opts.max_attempts ? opts.max_attempts : 20 * opts.count;
  while (rep.checked < opts.count && rep.generated < attempts) {
    const std::size_t n = std::bernoulli_distribution(0.5)(rng) ? 3 : 2;
    const PolySystem s = random_system(rng, n);
    ++rep.generated;
    const Ideal I = Ideal::affine(s.nvars(), s.polys);
    try {
      if (!I.is_zero_dimensional())
        continue;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::WorkLimitExceeded)
        throw;
      ++rep.skipped;
      continue;
    }
    ++rep.checked;
    check_system(suite, s, I);
  }
  return rep;
}

}  // namespace shapelemma
