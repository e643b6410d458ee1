#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "commutant/builtin_chains.hpp"
#include "commutant/chain.hpp"

using namespace commutant;

namespace {

Polynomial random_homog(std::mt19937_64& rng, std::size_t nvars, unsigned deg,
                        int nterms) {
  std::vector<Polynomial::Term> raw;
  for (int t = 0; t < nterms; ++t) {
    Monomial m(nvars);
    unsigned left = deg;
    while (left) {
      std::size_t v = rng() % nvars;
      unsigned add = 1 + unsigned(rng() % left);
      m.set_deg(v, m.deg(v) + add);
      left -= add;
    }
    long re_num = long(rng() % 9) - 4;
    long im_num = long(rng() % 9) - 4;
    raw.push_back({m, GaussianRational(mpq_class(re_num, 1 + long(rng() % 3)),
                                       mpq_class(im_num, 1 + long(rng() % 3)))});
  }
  return Polynomial::normal_form(nvars, std::move(raw));
}

}  // namespace

TEST_CASE("bracket reproduces the structure constants on coordinates",
          "[poisson]") {
  for (const auto& name : builtin_chain_names()) {
    ChainSpec chain = builtin_chain(name);
    const auto& alg = chain.algebra();
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Polynomial expect(n);
        for (const auto& t : alg.bracket_of(int(i), int(j)))
          expect += Polynomial::monomial_term(Monomial::unit(n, t.target),
                                              t.coeff);
        Polynomial got = poisson_bracket(Polynomial::variable(n, i),
                                         Polynomial::variable(n, j), alg);
        INFO(name << " pair " << i << "," << j);
        REQUIRE(got == expect);
      }
    }
  }
}

TEST_CASE("paper bracket values", "[poisson]") {
  auto el = builtin_chain("elliott");
  auto names = el.algebra().generators();
  auto P = [&](const std::string& s) { return Polynomial::parse(s, names); };
  REQUIRE(poisson_bracket(P("l1"), P("l2"), el.algebra()) == P("i*l3"));

  auto sf = builtin_chain("surfon");
  auto namessf = sf.algebra().generators();
  auto S = [&](const std::string& s) { return Polynomial::parse(s, namessf); };
  REQUIRE(poisson_bracket(S("l0"), S("q3"), sf.algebra()) == S("3*q3"));
  // Leibniz consequence of [l0,q3]=3q3 and [l0,qm3]=-3qm3
  REQUIRE(poisson_bracket(S("l0"), S("q3*qm3"), sf.algebra()).is_zero());
}

TEST_CASE("antisymmetry, Leibniz, Jacobi on random polynomials", "[poisson]") {
  std::mt19937_64 rng(2024);
  for (const auto& name : builtin_chain_names()) {
    ChainSpec chain = builtin_chain(name);
    const auto& alg = chain.algebra();
    const std::size_t n = alg.dim();
    for (int it = 0; it < 12; ++it) {
      auto p = random_homog(rng, n, 1 + it % 3, 3);
      auto q = random_homog(rng, n, 1 + (it + 1) % 3, 3);
      auto r = random_homog(rng, n, 1 + (it + 2) % 3, 3);
      REQUIRE(poisson_bracket(p, q, alg) == -poisson_bracket(q, p, alg));
      REQUIRE(poisson_bracket(p, p, alg).is_zero());
      REQUIRE(poisson_bracket(p, q * r, alg) ==
              poisson_bracket(p, q, alg) * r + q * poisson_bracket(p, r, alg));
      Polynomial jac =
          poisson_bracket(p, poisson_bracket(q, r, alg), alg) +
          poisson_bracket(q, poisson_bracket(r, p, alg), alg) +
          poisson_bracket(r, poisson_bracket(p, q, alg), alg);
      REQUIRE(jac.is_zero());
    }
  }
}

TEST_CASE("degree law for homogeneous inputs", "[poisson]") {
  std::mt19937_64 rng(555);
  auto chain = builtin_chain("surfon");
  for (int it = 0; it < 30; ++it) {
    unsigned dp = 1 + it % 3, dq = 1 + (it / 3) % 3;
    auto p = random_homog(rng, 10, dp, 3);
    auto q = random_homog(rng, 10, dq, 3);
    auto br = poisson_bracket(p, q, chain.algebra());
    if (!br.is_zero()) {
      REQUIRE(br.is_homogeneous());
      REQUIRE(br.degree() == int(dp + dq - 1));
    }
  }
}

TEST_CASE("bidegree components", "[poisson]") {
  auto sf = builtin_chain("surfon");
  auto names = sf.algebra().generators();
  auto S = [&](const std::string& s) { return Polynomial::parse(s, names); };

  auto b1 = S("l0^2 + l1*lm1");
  REQUIRE(bidegree_components(b1, sf) == std::set<Bidegree>{{2, 0}});

  auto el = builtin_chain("elliott");
  auto E = [&](const std::string& s) {
    return Polynomial::parse(s, el.algebra().generators());
  };
  REQUIRE(bidegree_components(E("l1^2 + l2^2 + l3^2"), el) ==
          std::set<Bidegree>{{2, 0}});
  REQUIRE(bidegree_components(E("1"), el) == std::set<Bidegree>{{0, 0}});
  REQUIRE(bidegree_components(E("l1*t11 + t12"), el) ==
          std::set<Bidegree>{{1, 1}, {0, 1}});
  REQUIRE_THROWS_AS(bidegree_components(Polynomial(8), el),
                    std::invalid_argument);
}

TEST_CASE("bidegree additivity under products", "[poisson]") {
  std::mt19937_64 rng(808);
  auto chain = builtin_chain("elliott");
  for (int it = 0; it < 25; ++it) {
    auto p = random_homog(rng, 8, 1 + it % 3, 2);
    auto q = random_homog(rng, 8, 1 + (it + 1) % 2, 2);
    if (p.is_zero() || q.is_zero()) continue;
    auto pq = p * q;
    if (pq.is_zero()) continue;
    auto bp = bidegree_components(p, chain);
    auto bq = bidegree_components(q, chain);
    std::set<Bidegree> sums;
    for (auto& a : bp)
      for (auto& b : bq)
        sums.insert({a.first + b.first, a.second + b.second});
    for (auto& c : bidegree_components(pq, chain))
      REQUIRE(sums.count(c) == 1);
  }
}

TEST_CASE("evaluate example from the surfon chain", "[poisson]") {
  auto sf = builtin_chain("surfon");
  auto names = sf.algebra().generators();
  auto b1 = Polynomial::parse("l0^2 + l1*lm1", names);
  std::vector<GaussianRational> pt(10);
  pt[0] = GaussianRational(1);
  pt[1] = GaussianRational(2);
  pt[2] = GaussianRational(3);
  REQUIRE(b1.evaluate(pt) == GaussianRational(7));
}
