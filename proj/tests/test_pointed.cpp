#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "trunclab/pointed.hpp"

using namespace trunclab;

namespace {

FramePtr four() { return FiniteFrame::downsets(Poset::antichain(2)); }
FramePtr chain3() { return FiniteFrame::downsets(Poset::chain(2)); }

}  // namespace

TEST_CASE("filter laws are validated by name") {
  FramePtr L = four();
  Mask a = L->atoms()[0];
  CHECK_THROWS_WITH_AS(check_filter(*L, {}), doctest::Contains("empty"),
                       FilterLawError);
  // not upward closed: contains an atom but not top
  CHECK_THROWS_AS(check_filter(*L, {a}), FilterLawError);
  // not meet closed: both atoms and top, missing bottom = atom /\ atom
  CHECK_THROWS_AS(
      check_filter(*L, {L->atoms()[0], L->atoms()[1], L->top()}),
      FilterLawError);
  CHECK_NOTHROW(check_filter(*L, {a, L->top()}));
}

TEST_CASE("saturation produces the smallest filter over the generators") {
  FramePtr L = four();
  auto f = saturate_filter(*L, {L->atoms()[0]});
  std::vector<Mask> want{L->atoms()[0], L->top()};
  std::sort(want.begin(), want.end());
  CHECK(f == want);
  // two incomparable generators force the meet, hence the improper filter
  auto g = saturate_filter(*L, {L->atoms()[0], L->atoms()[1]});
  CHECK(g.size() == 4);
  CHECK(std::find(g.begin(), g.end(), L->bottom()) != g.end());
}

TEST_CASE("filter inventory of the small frames") {
  // four element frame: {top}, two principal atom filters, improper
  CHECK(all_filters(*four()).size() == 4);
  // chain of three: one filter per principal upset
  CHECK(all_filters(*chain3()).size() == 3);
  for (const auto& f : all_filters(*four())) CHECK_NOTHROW(check_filter(*four(), f));
}

TEST_CASE("the co-free construction doubles the frame") {
  Product2 p = product2(frame_two());
  CHECK(p.pointed.frame->size() == 4);
  CHECK(p.pointed.valid());
  CHECK(is_isolated(p.pointed));
  CHECK(p.eps_of(p.pair(true, frame_two()->bottom())));
  CHECK(p.drop(p.pair(true, frame_two()->top())) ==
        p.drop(p.pair(false, frame_two()->top())));
}

TEST_CASE("the filtered subframe keeps only admissible pairs") {
  FramePtr L = frame_two();
  // filter {top}: pairs (eps, a) with eps -> a = top; three elements
  Product2 m = two_sub_f(L, {L->top()});
  CHECK(m.pointed.frame->size() == 3);
  CHECK_FALSE(is_isolated(m.pointed));
  // improper filter: the whole product comes back
  Product2 full = two_sub_f(L, {L->bottom(), L->top()});
  CHECK(full.pointed.frame->size() == 4);
  CHECK(is_isolated(full.pointed));
  CHECK_THROWS_AS(two_sub_f(L, {L->bottom()}), FilterLawError);
}

TEST_CASE("round trip starting from a filtered frame") {
  for (const auto& L : {four(), chain3()}) {
    for (const auto& f : all_filters(*L)) {
      FilteredFrame lf{L, f};
      Product2 m = functor_d(lf);
      CHECK(m.pointed.valid());
      PointedDecomposition d = functor_e(m.pointed);
      // E(D(L,F)) recovers (L,F) up to the open-quotient renaming
      CHECK(d.part.frame->size() == L->size());
      CHECK(d.part.filter.size() == f.size());
      auto unit = equivalence_unit(m.pointed, functor_d(d.part));
      CHECK(check_frame_map(unit).valid);
      CHECK(is_frame_isomorphism(unit));
    }
  }
}

TEST_CASE("the unit fails to be injective off the image of the construction") {
  // 3-chain pointed at the bottom-most prime: the kernel is not a coatom,
  // and the rebuilt frame conflates the middle element with top
  PointedFrame m;
  m.frame = chain3();
  m.point.source = m.frame;
  m.point.target = frame_two();
  for (Mask a : m.frame->elements())
    m.point.image.push_back(a == m.frame->bottom() ? frame_two()->bottom()
                                                   : frame_two()->top());
  CHECK(m.valid());
  auto unit = equivalence_unit(m, functor_d(functor_e(m).part));
  CHECK(check_frame_map(unit).valid);
  CHECK_FALSE(is_frame_isomorphism(unit));
}

TEST_CASE("free isolated point frame and its insertion") {
  FilteredFrame lf{chain3(), saturate_filter(*chain3(), {chain3()->top()})};
  Product2 m = two_sub_f(lf.frame, lf.filter);
  FreeIsolated fi = free_isolated(m.pointed);
  CHECK(is_isolated(fi.target.pointed));
  CHECK(check_frame_map(fi.nu).valid);
  std::vector<Mask> seen;
  for (Mask a : m.pointed.frame->elements()) seen.push_back(fi.nu(a));
  std::sort(seen.begin(), seen.end());
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
}

TEST_CASE("co-free lifting is unique through the projection") {
  FramePtr L = four();
  Product2 twoL = product2(L);
  for (const auto& pt : points(L)) {
    PointedFrame m{L, pt.map};
    // k = (point, id): the unique pointed lift of the identity
    int lifts = 0;
    for (const auto& k : enumerate_pointed_maps(m, twoL.pointed)) {
      bool commutes = true;
      for (Mask a : L->elements())
        if (twoL.drop(k(a)) != a) commutes = false;
      if (commutes) ++lifts;
    }
    CHECK(lifts == 1);
  }
}

TEST_CASE("filtered morphisms validate and compose") {
  FilteredFrame src{chain3(), saturate_filter(*chain3(), {chain3()->top()})};
  FilteredMorphism id = identity_filtered(src);
  CHECK(check_filtered_morphism(id).valid);
  FilteredMorphism idid = compose_filtered(id, id);
  CHECK(check_filtered_morphism(idid).valid);
  CHECK(idid.f.same_table(id.f));

  // break it: keep the tables but demand a filter the arrow cannot reach
  FilteredMorphism bad = id;
  Mask mid = chain3()->elements()[1];
  bad.src.filter = saturate_filter(*chain3(), {mid});
  bad.dst.filter = {chain3()->top()};
  bad.c = chain3()->top();
  auto r = check_filtered_morphism(bad);
  CHECK_FALSE(r.valid);
  CHECK(r.violation.find(chain3()->element_name(mid)) != std::string::npos);
}

TEST_CASE("structural checks of the filtered subframe") {
  FramePtr L = four();
  FilteredFrame proper{L, saturate_filter(*L, {L->atoms()[0]})};
  auto c1 = frame_checks(two_sub_f(L, proper.filter), proper);
  CHECK(c1.projection_dense);
  CHECK(c1.compact);

  FilteredFrame improper{L, saturate_filter(*L, {L->bottom()})};
  auto c2 = frame_checks(two_sub_f(L, improper.filter), improper);
  CHECK_FALSE(improper.proper());
  CHECK_FALSE(c2.projection_dense);
}

TEST_CASE("bundle text round trips") {
  Poset base = Poset::antichain(2);
  FramePtr L = FiniteFrame::downsets(base);
  FilteredFrame lf{L, saturate_filter(*L, {L->atoms()[0]})};
  std::stringstream ss(serialize_filtered_bundle(lf, base));
  FilteredFrame back = parse_filtered_bundle(ss);
  CHECK(back.frame->size() == L->size());
  CHECK(back.filter == lf.filter);

  std::stringstream pt(base.serialize() + "point x1\n");
  PointedFrame m = parse_pointed_bundle(pt);
  CHECK(m.valid());
  CHECK(m.kernel() == L->atoms()[0]);

  std::stringstream bad(base.serialize() + "point x1 x2\n");
  CHECK_THROWS_AS(parse_pointed_bundle(bad), ParseError);
}

TEST_CASE("dot exports mark the distinguished data") {
  FilteredFrame lf{four(), saturate_filter(*four(), {four()->atoms()[0]})};
  CHECK(filtered_dot(lf).find("peripheries=2") != std::string::npos);
  PointedFrame m{four(), points(four()).front().map};
  CHECK(pointed_dot(m).find("filled") != std::string::npos);
}
