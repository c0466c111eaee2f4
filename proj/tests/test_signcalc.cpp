#include "e6/signcalc.hpp"

#include <random>

#include "doctest.h"

using e6::Assignment;
using e6::SignMonomial;
using e6::SignVar;

namespace {

SignMonomial m(const char* text) { return SignMonomial::parse(text); }

}  // namespace

TEST_CASE("variable universe has exactly 30 members with stable names") {
  for (int bit = 0; bit < SignVar::kCount; ++bit) {
    const SignVar v = SignVar::from_bit(bit);
    CHECK(SignVar::from_name(v.name()) == v);
    CHECK(SignVar::from_name(v.name()).bit() == bit);
  }
  CHECK(SignVar(SignVar::Family::A, 0).bit() == 9);  // a0 sorts after a9
  CHECK(SignVar::from_name("b9").bit() == 18);
  CHECK(SignVar::from_name("g6").bit() == 24);
  CHECK(SignVar::from_name("d3").bit() == 27);
  CHECK(SignVar::from_name("e2").bit() == 29);
  CHECK_THROWS_AS(SignVar::from_name("g7"), e6::ParseError);
  CHECK_THROWS_AS(SignVar::from_name("b0"), e6::ParseError);
  CHECK_THROWS_AS(SignVar::from_name("x1"), e6::ParseError);
}

TEST_CASE("multiplication is parity xor with sign product") {
  CHECK(m("a1") * m("a2*b1") == m("a1*a2*b1"));
  CHECK(m("a1") * m("a1") == SignMonomial::one());
  CHECK(m("-b5") * m("-a1*a6") == m("a1*a6*b5"));
  CHECK(m("a1*b2") * m("b2*g3") == m("a1*g3"));
}

TEST_CASE("evaluation under assignments") {
  const Assignment pos = Assignment::all_positive();
  CHECK(m("-a1*a6*b5").evaluate(pos) == -1);
  CHECK(SignMonomial::one().evaluate(pos) == 1);

  Assignment flip;
  flip.set(SignVar::from_name("a1"), -1);
  CHECK(m("a1*b2").evaluate(flip) == -1);
  CHECK(m("a2*b2").evaluate(flip) == 1);
}

TEST_CASE("canonical format") {
  CHECK(m("a1*a2*b1").str() == "a1*a2*b1");
  CHECK(m("b1*a1").str() == "a1*b1");
  CHECK(m("a0*a6").str() == "a6*a0");  // a0 after a9
  CHECK(SignMonomial::one().str() == "1");
  CHECK(SignMonomial::minus_one().str() == "-1");
  CHECK(m("-a6*a0*b4*b5*b7*b9*g2*g3*g5*g6*d1*d2*e2").str() ==
        "-a6*a0*b4*b5*b7*b9*g2*g3*g5*g6*d1*d2*e2");
}

TEST_CASE("parse rejects malformed text") {
  CHECK_THROWS_AS(m(""), e6::ParseError);
  CHECK_THROWS_AS(m("-"), e6::ParseError);
  CHECK_THROWS_AS(m("a1*"), e6::ParseError);
  CHECK_THROWS_AS(m("a1**b1"), e6::ParseError);
  CHECK_THROWS_AS(m("a1*1"), e6::ParseError);
  CHECK_THROWS_AS(m("q1"), e6::ParseError);
  CHECK(m("1") == SignMonomial::one());
  CHECK(m("-1") == SignMonomial::minus_one());
}

TEST_CASE("group laws and homomorphism on random samples") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const auto rand_mono = [&rng] {
      SignMonomial x;
      if (rng() & 1) x = -x;
      for (int bit = 0; bit < SignVar::kCount; ++bit)
        if (rng() & 1) x *= SignMonomial::var(SignVar::from_bit(bit));
      return x;
    };
    const SignMonomial x = rand_mono(), y = rand_mono(), z = rand_mono();
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * y == y * x);
    CHECK((x * x).is_unit());
    CHECK_FALSE((x * x).negative());

    // round trip through the text grammar
    CHECK(SignMonomial::parse(x.str()) == x);

    const Assignment a = Assignment::random(rng);
    CHECK((x * y).evaluate(a) == x.evaluate(a) * y.evaluate(a));
  }
}
