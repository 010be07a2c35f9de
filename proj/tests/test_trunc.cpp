#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trunclab/trunc.hpp"

using namespace trunclab;

namespace {

CarrierPtr vec2() { return TruncCarrier::fin_vec({Rat(1), Rat(3, 2)}); }

TruncElement el(CarrierPtr c, std::vector<Rat> coords) {
  return make_element(std::move(c), std::move(coords));
}

}  // namespace

TEST_CASE("carrier construction is validated") {
  CHECK_THROWS_AS(TruncCarrier::fin_vec({}), DomainError);
  CHECK_THROWS_AS(TruncCarrier::fin_vec({Rat(1), Rat(0)}), DomainError);
  CHECK_THROWS_AS(TruncCarrier::fin_vec({Rat(-1)}), DomainError);
  CHECK_THROWS_AS(TruncCarrier::ev_seq(0), DomainError);
  CHECK(TruncCarrier::ev_seq(4)->dim == 4);
  CHECK(vec2()->describe().find("unit (1,3/2)") != std::string::npos);
}

TEST_CASE("element construction is validated") {
  CarrierPtr c = vec2();
  CHECK_THROWS_AS(make_element(c, {Rat(1)}), SizeError);
  CHECK_THROWS_AS(make_element(c, {Rat(1), Rat(2)}, Rat(1)), DomainError);
  CarrierPtr s = TruncCarrier::ev_seq(3);
  // any prefix length is fine for a sequence, and tails are allowed
  TruncElement a = make_element(s, {Rat(1), Rat(0), Rat(0), Rat(0), Rat(2)});
  CHECK(a.at(4) == Rat(2));
  CHECK(a.at(100) == Rat(0));
  TruncElement t = make_element(s, {Rat(1)}, Rat(3));
  CHECK_FALSE(t.in_trunc());
  CHECK(t.at(7) == Rat(3));
}

TEST_CASE("json descriptions round trip") {
  CarrierPtr c = vec2();
  std::vector<std::vector<Rat>> gens;
  CarrierPtr back = TruncCarrier::parse_json(c->to_json(), &gens);
  CHECK(back->kind == CarrierKind::FinVec);
  CHECK(back->dim == 2);
  CHECK(back->unit == c->unit);
  CHECK(gens.empty());

  CarrierPtr s = TruncCarrier::parse_json(
      TruncCarrier::ev_seq(5)->to_json(), nullptr);
  CHECK(s->kind == CarrierKind::EvSeq);
  CHECK(s->dim == 5);

  CHECK_THROWS_AS(TruncCarrier::parse_json("{", nullptr), ParseError);
  CHECK_THROWS_AS(TruncCarrier::parse_json("{\"kind\":\"torus\"}", nullptr),
                  ParseError);
  CHECK_THROWS_AS(
      TruncCarrier::parse_json(
          "{\"kind\":\"finvec\",\"unit\":[\"1\"],\"dimension\":3}", nullptr),
      ParseError);

  std::vector<std::vector<Rat>> g2;
  TruncCarrier::parse_json(
      "{\"kind\":\"finvec\",\"unit\":[\"1\",\"3/2\"],"
      "\"generators\":[[\"1/2\",\"-2\"]]}",
      &g2);
  REQUIRE(g2.size() == 1);
  CHECK(g2[0] == std::vector<Rat>{Rat(1, 2), Rat(-2)});
}

TEST_CASE("lattice-group arithmetic is coordinatewise and exact") {
  CarrierPtr c = vec2();
  TruncElement a = el(c, {Rat(1, 3), Rat(-2)});
  TruncElement b = el(c, {Rat(1, 2), Rat(5, 4)});

  CHECK(eq(add(a, b), el(c, {Rat(5, 6), Rat(-3, 4)})));
  CHECK(eq(sub(a, b), el(c, {Rat(-1, 6), Rat(-13, 4)})));
  CHECK(eq(neg(a), el(c, {Rat(-1, 3), Rat(2)})));
  CHECK(eq(vee(a, b), el(c, {Rat(1, 2), Rat(5, 4)})));
  CHECK(eq(wedge(a, b), el(c, {Rat(1, 3), Rat(-2)})));
  CHECK(eq(abs(a), el(c, {Rat(1, 3), Rat(2)})));
  CHECK(eq(scale(Rat(-3, 2), a), el(c, {Rat(-1, 2), Rat(3)})));
  CHECK(eq(pos_part(a), el(c, {Rat(1, 3), Rat(0)})));
  CHECK(eq(neg_part(a), el(c, {Rat(0), Rat(2)})));
  CHECK(leq(wedge(a, b), a));
  CHECK_FALSE(leq(b, a));

  CarrierPtr other = TruncCarrier::fin_vec({Rat(1)});
  CHECK_THROWS_AS(add(a, el(other, {Rat(1)})), CarrierMismatch);
}

TEST_CASE("sequence arithmetic aligns prefixes and tails") {
  CarrierPtr s = TruncCarrier::ev_seq(2);
  TruncElement a = make_element(s, {Rat(1), Rat(2), Rat(3)});
  TruncElement b = make_element(s, {Rat(4)}, Rat(1));
  TruncElement sum = add(a, b);
  CHECK(sum.at(0) == Rat(5));
  CHECK(sum.at(1) == Rat(3));
  CHECK(sum.at(2) == Rat(4));
  CHECK(sum.at(9) == Rat(1));
  CHECK(vee(a, b).at(5) == Rat(1));
}

TEST_CASE("truncation clips at the unit") {
  CarrierPtr c = vec2();
  // unit (1, 3/2): values above the unit clip, values below pass through
  CHECK(eq(truncate(el(c, {Rat(3), Rat(1)})), el(c, {Rat(1), Rat(1)})));
  CHECK(eq(truncate(el(c, {Rat(1, 2), Rat(7, 4)})),
           el(c, {Rat(1, 2), Rat(3, 2)})));
  CHECK_THROWS_AS(truncate(el(c, {Rat(-1), Rat(0)})), DomainError);
  CHECK(is_truncated(el(c, {Rat(1), Rat(3, 2)})));
  CHECK_FALSE(is_truncated(el(c, {Rat(2), Rat(0)})));

  CarrierPtr s = TruncCarrier::ev_seq(2);
  // the sequence unit is the constant 1; clipping works past the window
  TruncElement a = make_element(s, {Rat(1, 2), Rat(4), Rat(4)});
  TruncElement t = truncate(a);
  CHECK(t.at(0) == Rat(1, 2));
  CHECK(t.at(1) == Rat(1));
  CHECK(t.at(2) == Rat(1));
  CHECK(unit_element(s).tail == Rat(1));
}

TEST_CASE("diminution subtracts scaled clips") {
  CarrierPtr c = vec2();
  TruncElement a = el(c, {Rat(3), Rat(3)});
  CHECK(eq(diminish(a, Rat(0)), a));
  // a (-) 1 = (a - u)+ : (3,3) - (1,3/2) = (2, 3/2)
  CHECK(eq(diminish(a, Rat(1)), el(c, {Rat(2), Rat(3, 2)})));
  CHECK(eq(diminish(a, Rat(4)), el(c, {Rat(0), Rat(0)})));
  CHECK_THROWS_AS(diminish(a, Rat(-1)), DomainError);
  CHECK_THROWS_AS(diminish(el(c, {Rat(-1), Rat(0)}), Rat(1)), DomainError);
}

TEST_CASE("indicator and unit follow the carrier scale") {
  CarrierPtr c = vec2();
  TruncElement i0 = indicator(c, {0});
  CHECK(i0.at(0) == Rat(1));
  CHECK(i0.at(1) == Rat(0));
  TruncElement i1 = indicator(c, {1});
  CHECK(i1.at(1) == Rat(3, 2));  // unit level, not 1
  CHECK(eq(unit_element(c), add(i0, i1)));
  CHECK_THROWS_AS(indicator(c, {2}), SizeError);

  CarrierPtr s = TruncCarrier::ev_seq(3);
  CHECK(indicator(s, {2}).at(2) == Rat(1));
}

TEST_CASE("support masks stay inside the window") {
  CarrierPtr c = vec2();
  CHECK(support_mask(el(c, {Rat(0), Rat(-5)})) == 0b10);
  CarrierPtr s = TruncCarrier::ev_seq(2);
  CHECK(support_mask(make_element(s, {Rat(1), Rat(0)})) == 0b01);
  CHECK_THROWS_AS(support_mask(make_element(s, {Rat(0), Rat(0), Rat(7)})),
                  SizeError);
}

TEST_CASE("mutation fixtures break exactly the truncation") {
  CarrierPtr z = TruncCarrier::fin_vec({Rat(1)}, TruncMutation::Zero);
  CHECK(truncate(make_element(z, {Rat(1, 2)})).is_zero());
  CarrierPtr id = TruncCarrier::fin_vec({Rat(1)}, TruncMutation::Identity);
  CHECK(eq(truncate(make_element(id, {Rat(5)})), make_element(id, {Rat(5)})));
  // arithmetic is untouched by the fixtures
  CHECK(eq(add(make_element(z, {Rat(1)}), make_element(z, {Rat(1)})),
           make_element(z, {Rat(2)})));
}

TEST_CASE("random draws are deterministic under a fixed seed") {
  CarrierPtr c = vec2();
  std::mt19937_64 r1(42), r2(42);
  for (int t = 0; t < 50; ++t) {
    CHECK(eq(random_element(c, r1), random_element(c, r2)));
    TruncElement tr = random_truncated(c, r1);
    random_truncated(c, r2);
    CHECK(is_truncated(tr));
    CHECK(leq(zero_element(c), tr));
  }
  std::mt19937_64 r3(7);
  for (int t = 0; t < 50; ++t) {
    Rat q = random_rat(r3, 6, 12, true);
    CHECK(q >= Rat(0));
    CHECK(q.denominator() <= 12);
  }
}
