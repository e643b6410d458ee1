#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "commutant/gaussian.hpp"

using commutant::GaussianRational;

namespace {

GaussianRational rnd(std::mt19937_64& rng) {
  auto part = [&](bool allow_zero) {
    long num = long(rng() % 19) - 9;
    if (!allow_zero && num == 0) num = 1;
    long den = 1 + long(rng() % 6);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  };
  return GaussianRational(part(true), part(true));
}

}  // namespace

TEST_CASE("field axioms on random elements", "[gaussian]") {
  std::mt19937_64 rng(12345);
  for (int it = 0; it < 200; ++it) {
    auto a = rnd(rng), b = rnd(rng), c = rnd(rng);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + GaussianRational() == a);
    REQUIRE(a * GaussianRational(1) == a);
    REQUIRE((a - a).is_zero());
    if (!a.is_zero()) {
      REQUIRE(a * a.inverse() == GaussianRational(1));
      REQUIRE(a / a == GaussianRational(1));
    }
  }
}

TEST_CASE("i squared is minus one", "[gaussian]") {
  auto i = GaussianRational::i();
  REQUIRE(i * i == GaussianRational(-1));
}

TEST_CASE("lowest terms and positive denominators", "[gaussian]") {
  auto q = GaussianRational::ratio(4, -6);
  REQUIRE(q.re().get_num() == -2);
  REQUIRE(q.re().get_den() == 3);
}

TEST_CASE("canonical rendering", "[gaussian]") {
  REQUIRE(GaussianRational(0).str() == "0");
  REQUIRE(GaussianRational(7).str() == "7");
  REQUIRE(GaussianRational::ratio(-2, 3).str() == "-2/3");
  REQUIRE(GaussianRational::i().str() == "i");
  REQUIRE((-GaussianRational::i()).str() == "-i");
  REQUIRE(GaussianRational::imag_ratio(5, 2).str() == "5/2*i");
  REQUIRE(GaussianRational(mpq_class(1, 2), mpq_class(-2, 3)).str() ==
          "(1/2-2/3*i)");
  REQUIRE(GaussianRational(mpq_class(1, 2), mpq_class(1)).str() == "(1/2+i)");
}
