#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "trunclab/real_map.hpp"

using namespace trunclab;

namespace {

FramePtr pow3() { return FiniteFrame::downsets(Poset::antichain(3)); }

RealFrameMap from_tuple(const std::vector<Rat>& v) {
  return rfm_from_atom_tuple(pow3(), v);
}

Rat rand_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 6);
  return Rat(num(rng), den(rng));
}

std::vector<Rat> rand_tuple(std::mt19937_64& rng) {
  return {rand_rat(rng), rand_rat(rng), rand_rat(rng)};
}

}  // namespace

TEST_CASE("normal form is enforced") {
  FramePtr L = pow3();
  // duplicate thresholds are rejected
  RealFrameMap dup{L, {{Rat(0), L->top()}, {Rat(0), L->bottom()}}};
  CHECK_THROWS_AS(normalize(dup), DomainError);
  // values must decrease
  RealFrameMap up{L, {{Rat(0), L->atoms()[0]}, {Rat(1), L->top()}}};
  CHECK_THROWS_AS(normalize(up), DomainError);
  // the final value must be bottom
  RealFrameMap open{L, {{Rat(0), L->atoms()[0]}}};
  CHECK_THROWS_AS(normalize(open), DomainError);
  // consecutive values must be rather below; in a 4-chain the two middle
  // elements are comparable but not rather below each other
  FramePtr c4 = FiniteFrame::downsets(Poset::chain(3));
  Mask lo = c4->elements()[1], hi = c4->elements()[2];
  RealFrameMap bad{c4, {{Rat(0), hi}, {Rat(1), lo}, {Rat(2), c4->bottom()}}};
  CHECK_THROWS_AS(normalize(bad), DomainError);
  // redundant repeats of the same value are dropped silently
  Mask v = L->atoms()[1] | L->atoms()[2];
  RealFrameMap dup_val{
      L, {{Rat(0), v}, {Rat(1), v}, {Rat(2), L->bottom()}}};
  RealFrameMap n = normalize(dup_val);
  CHECK(n.steps.size() == 2);
  CHECK(n.normalized());
}

TEST_CASE("upper and lower ray values") {
  FramePtr L = pow3();
  RealFrameMap f = from_tuple({Rat(0), Rat(1), Rat(2)});
  CHECK(f.upper(Rat(-1)) == L->top());
  CHECK(f.upper(Rat(0)) == (L->top() & ~L->atoms()[0]));
  CHECK(f.upper(Rat(3, 2)) == L->atoms()[2]);
  CHECK(f.upper(Rat(2)) == L->bottom());
  // lower rays come from pseudocomplements of earlier uppers
  CHECK(f.lower(Rat(0)) == L->bottom());
  CHECK(f.lower(Rat(1)) == L->atoms()[0]);
  CHECK(f.lower(Rat(3)) == L->top());
  CHECK(f.breakpoints().size() == 3);
}

TEST_CASE("constants and point evaluation") {
  FramePtr L = pow3();
  RealFrameMap c = rfm_constant(L, Rat(5, 3));
  CHECK(c.upper(Rat(1)) == L->top());
  CHECK(c.upper(Rat(5, 3)) == L->bottom());
  for (const auto& pt : points(L)) {
    CHECK(rfm_point_value(pt.map, c) == Rat(5, 3));
    RealFrameMap f = from_tuple({Rat(-1), Rat(0), Rat(7)});
    Rat v = rfm_point_value(pt.map, f);
    bool among = v == Rat(-1) || v == Rat(0) || v == Rat(7);
    CHECK(among);
  }
}

TEST_CASE("step arithmetic matches the atom-tuple arithmetic") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 150; ++t) {
    auto xs = rand_tuple(rng);
    auto ys = rand_tuple(rng);
    RealFrameMap f = from_tuple(xs), g = from_tuple(ys);

    auto expect = [&](RealFrameMap got, auto op) {
      std::vector<Rat> want;
      for (size_t i = 0; i < xs.size(); ++i) want.push_back(op(xs[i], ys[i]));
      CHECK(rfm_to_atom_tuple(got) == want);
    };
    expect(rfm_add(f, g), [](Rat a, Rat b) { return a + b; });
    expect(rfm_sub(f, g), [](Rat a, Rat b) { return a - b; });
    expect(rfm_vee(f, g), [](Rat a, Rat b) { return rat_max(a, b); });
    expect(rfm_wedge(f, g), [](Rat a, Rat b) { return rat_min(a, b); });

    std::vector<Rat> wneg, wscale, wtrunc;
    for (Rat x : xs) {
      wneg.push_back(-x);
      wscale.push_back(Rat(3, 2) * x);
      wtrunc.push_back(rat_min(x, Rat(1)));
    }
    CHECK(rfm_to_atom_tuple(rfm_neg(f)) == wneg);
    CHECK(rfm_to_atom_tuple(rfm_scale(Rat(3, 2), f)) == wscale);
    CHECK(rfm_to_atom_tuple(rfm_truncate(f)) == wtrunc);
  }
}

TEST_CASE("atom tuples require an atomic boolean target") {
  FramePtr c3 = FiniteFrame::downsets(Poset::chain(2));
  RealFrameMap f = rfm_constant(c3, Rat(1));
  CHECK_THROWS_AS(rfm_to_atom_tuple(f), DomainError);
  CHECK_THROWS_AS(rfm_from_atom_tuple(c3, {Rat(1), Rat(2)}), DomainError);
}

TEST_CASE("cozero and unit-contour elements") {
  FramePtr L = pow3();
  Mask a0 = L->atoms()[0], a1 = L->atoms()[1], a2 = L->atoms()[2];
  RealFrameMap f = from_tuple({Rat(0), Rat(-1, 2), Rat(2)});
  CHECK(rfm_coz(f) == (a1 | a2));           // where the value is nonzero
  CHECK(rfm_con(f) == (a0 | a1 | a2));      // where the value differs from 1
  RealFrameMap g = from_tuple({Rat(1), Rat(1), Rat(0)});
  CHECK(rfm_con(g) == a2);
  CHECK(rfm_coz(rfm_constant(L, Rat(0))) == L->bottom());
  CHECK(rfm_con(rfm_constant(L, Rat(1))) == L->bottom());
}

TEST_CASE("pushing along a frame map relabels the steps") {
  FramePtr L = pow3();
  FramePtr two = frame_two();
  auto pts = points(L);
  const auto& pt = pts.front();
  RealFrameMap f = from_tuple({Rat(1), Rat(2), Rat(3)});
  RealFrameMap pushed = rfm_push(f, pt.map);
  CHECK(pushed.target->size() == 2);
  CHECK(pushed.normalized());
  // pushing to a point is the same as evaluating there
  Rat v = rfm_point_value(pt.map, f);
  CHECK(rfm_eq(pushed, rfm_constant(two, v)));
}
