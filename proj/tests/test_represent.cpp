#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "trunclab/represent.hpp"

using namespace trunclab;

namespace {

CarrierPtr vec12() { return TruncCarrier::fin_vec({Rat(1), Rat(2)}); }

TruncElement el(CarrierPtr c, std::vector<Rat> coords) {
  return make_element(std::move(c), std::move(coords));
}

}  // namespace

TEST_CASE("the kernel-valued representation steps at the coordinate ratios") {
  CarrierPtr c = TruncCarrier::fin_vec({Rat(1), Rat(2)});
  KernelFrame kf = kernel_frame(c);
  // a = (3, 4/3): ratios to the unit are 3 and 2/3
  RealFrameMap f = underline(kf, el(c, {Rat(3), Rat(4, 3)}));
  CHECK(f.str() == "2/3:{x0} 3:bot");
  CHECK(f.upper(Rat(0)) == 0b11);
  CHECK(f.upper(Rat(2, 3)) == 0b01);
  CHECK(f.upper(Rat(3)) == 0);

  // negative coordinates step below zero through the negative part
  RealFrameMap g = underline(kf, el(c, {Rat(-1), Rat(1)}));
  CHECK(g.upper(Rat(-2)) == kf.frame->top());
  CHECK(g.upper(Rat(-1)) == 0b10);
  CHECK(g.upper(Rat(1, 2)) == 0);

  CHECK(rfm_eq(underline(kf, zero_element(c)),
               rfm_constant(kf.frame, Rat(0))));
}

TEST_CASE("atom values of the representation are the unit ratios") {
  std::mt19937_64 rng(515);
  CarrierPtr c = TruncCarrier::fin_vec({Rat(1), Rat(2), Rat(1, 3)});
  KernelFrame kf = kernel_frame(c);
  for (int t = 0; t < 150; ++t) {
    TruncElement a = random_element(c, rng);
    std::vector<Rat> atom_values = rfm_to_atom_tuple(underline(kf, a));
    REQUIRE(atom_values.size() == 3);
    for (int i = 0; i < 3; ++i)
      CHECK(atom_values[static_cast<size_t>(i)] ==
            a.at(i) / c->unit[static_cast<size_t>(i)]);
  }
}

TEST_CASE("the representation is a lattice group homomorphism") {
  std::mt19937_64 rng(99991);
  CarrierPtr c = TruncCarrier::fin_vec({Rat(1), Rat(3, 2)});
  KernelFrame kf = kernel_frame(c);
  for (int t = 0; t < 100; ++t) {
    TruncElement a = random_element(c, rng);
    TruncElement b = random_element(c, rng);
    CHECK(rfm_eq(underline(kf, add(a, b)),
                 rfm_add(underline(kf, a), underline(kf, b))));
    CHECK(rfm_eq(underline(kf, vee(a, b)),
                 rfm_vee(underline(kf, a), underline(kf, b))));
    CHECK(rfm_eq(underline(kf, wedge(a, b)),
                 rfm_wedge(underline(kf, a), underline(kf, b))));
    CHECK(rfm_eq(underline(kf, neg(a)), rfm_neg(underline(kf, a))));
    // truncation on the carrier side becomes meet with the constant 1
    TruncElement p = pos_part(a);
    CHECK(rfm_eq(underline(kf, truncate(p)),
                 rfm_truncate(underline(kf, p))));
    // injectivity: distinct elements have distinct step maps
    if (!eq(a, b)) CHECK_FALSE(rfm_eq(underline(kf, a), underline(kf, b)));
  }
}

TEST_CASE("sequences acquire a tail coordinate in the representation") {
  CarrierPtr s = TruncCarrier::ev_seq(2);
  KernelFrame kf = kernel_frame(s);
  // support beyond the window shows up through the tail bit
  TruncElement a = make_element(s, {Rat(2), Rat(0), Rat(3)});
  RealFrameMap f = underline(kf, a);
  Mask tail = Mask(1) << 2;
  CHECK((f.upper(Rat(1)) & tail) != 0);   // value 3 past the window
  CHECK((f.upper(Rat(3)) & tail) == 0);
  CHECK(f.upper(Rat(2)) == tail);
}

TEST_CASE("the spectrum-valued representation lands in the pointed reals") {
  CarrierPtr c = vec12();
  Spectrum sp = spectrum(c);
  TruncElement a = el(c, {Rat(3), Rat(4, 3)});
  RealFrameMap h = hat(sp, a);
  CHECK(h.str() == "0:{x0,x1} 2/3:{x0} 3:bot");
  CHECK(in_pointed_reals(sp.pointed, h));
  // negative values force the 2-component on, so the point sees them
  RealFrameMap hn = hat(sp, el(c, {Rat(-1), Rat(0)}));
  CHECK(in_pointed_reals(sp.pointed, hn));
  std::mt19937_64 rng(4242);
  for (int t = 0; t < 100; ++t)
    CHECK(in_pointed_reals(sp.pointed, hat(sp, random_element(c, rng))));
}

TEST_CASE("cozero and unit-contour of represented elements") {
  CarrierPtr c = vec12();
  Spectrum sp = spectrum(c);
  std::mt19937_64 rng(808);
  for (int t = 0; t < 100; ++t) {
    TruncElement a = pos_part(random_element(c, rng));
    CHECK(sp.pointed.drop(rfm_coz(hat(sp, a))) == support_mask(a));
    CHECK_FALSE(sp.pointed.eps_of(rfm_coz(hat(sp, a))));
    TruncElement tr = random_truncated(c, rng);
    Mask con = rfm_con(hat(sp, tr));
    CHECK(sp.pointed.eps_of(con));  // the value is 0 at the point, not 1
    CHECK(sp.pointed.drop(con) == oracles::dark_mask(tr, Rat(1)));
  }
}

TEST_CASE("the unital classification agrees across its three readings") {
  UnitalClassification uv = classify_unital(spectrum(vec12()));
  CHECK(uv.agree());
  CHECK(uv.unital());
  CHECK_FALSE(uv.witness.empty());

  UnitalClassification us = classify_unital(spectrum(TruncCarrier::ev_seq(3)));
  CHECK(us.agree());
  CHECK_FALSE(us.unital());
  CHECK_FALSE(us.witness.empty());
}

TEST_CASE("carrier morphisms must respect the units") {
  CarrierPtr a = TruncCarrier::fin_vec({Rat(2)});
  CarrierPtr b = TruncCarrier::fin_vec({Rat(1), Rat(3)});
  // coordinate reads source coordinate 0; the scale must carry 2 to the
  // target unit value
  TruncMorphism ok = make_morphism(a, b, {{0, Rat(1, 2)}, {0, Rat(3, 2)}});
  TruncElement img = ok.apply(el(a, {Rat(4)}));
  CHECK(img.at(0) == Rat(2));
  CHECK(img.at(1) == Rat(6));
  CHECK_THROWS_AS(make_morphism(a, b, {{0, Rat(1)}, {0, Rat(3, 2)}}),
                  DomainError);
  CHECK_THROWS_AS(make_morphism(a, b, {{1, Rat(1, 2)}, {0, Rat(3, 2)}}),
                  DomainError);
}

TEST_CASE("composing with hat yields a validated morphism") {
  std::mt19937_64 rng(606);
  CarrierPtr a = TruncCarrier::fin_vec({Rat(1)});
  CarrierPtr b = vec12();
  Spectrum spb = spectrum(b);
  TruncMorphism theta = make_morphism(a, b, {{0, Rat(1)}, {0, Rat(2)}});
  RealValuedMorphism mu = compose_with_hat(theta, spb);
  CHECK(validate_morphism(mu, rng, 80).empty());

  // the identity reading of a carrier inside its own spectrum
  TruncMorphism ident =
      make_morphism(b, b, {{0, Rat(1)}, {1, Rat(1)}});
  RealValuedMorphism self = compose_with_hat(ident, spb);
  CHECK(validate_morphism(self, rng, 80).empty());
}

TEST_CASE("the induced pointed map exists, commutes, and is unique") {
  std::mt19937_64 rng(1234);
  CarrierPtr a = TruncCarrier::fin_vec({Rat(1)});
  CarrierPtr b = vec12();
  Spectrum spa = spectrum(a);
  Spectrum spb = spectrum(b);
  TruncMorphism theta = make_morphism(a, b, {{0, Rat(1)}, {0, Rat(2)}});
  RealValuedMorphism mu = compose_with_hat(theta, spb);
  InducedG g = induced_g(mu, spa, rng, 60);
  CHECK(g.valid);
  CHECK(g.square_commutes);
  CHECK(g.join_stabilized);
  CHECK(g.competing_maps == 0);

  // the self morphism induces the identity on the spectrum
  TruncMorphism ident = make_morphism(b, b, {{0, Rat(1)}, {1, Rat(1)}});
  RealValuedMorphism self = compose_with_hat(ident, spb);
  InducedG gid = induced_g(self, spb, rng, 60);
  CHECK(gid.valid);
  CHECK(gid.square_commutes);
  CHECK(gid.g.same_table(FrameMapTable::identity(spb.pointed.pointed.frame)));
}

TEST_CASE("the unpointed representation fails functoriality; the pointed one repairs it") {
  std::mt19937_64 rng(777);
  NonFunctorialDemo d = non_functorial_demo(rng, 24);
  CHECK(d.base_map_count == 1);
  CHECK(d.lhs != d.rhs);
  CHECK_FALSE(d.probe.empty());
  CHECK(d.repair.valid);
  CHECK(d.repair.square_commutes);
  CHECK(d.repair.competing_maps == 0);
}

TEST_CASE("the reflection embeds tuples identically when already unital") {
  CarrierPtr c = vec12();
  WReflection w = w_reflect(c);
  CHECK(w.already_unital);
  CHECK(w.tuple_len == 2);
  CHECK_FALSE(w.has_tail_slot);
  TruncElement a = el(c, {Rat(5), Rat(-1, 3)});
  CHECK(w.embed(a) == std::vector<Rat>{Rat(5), Rat(-1, 3)});
  CHECK(w.member(w.embed(a)));
  CHECK(w.unit == std::vector<Rat>{Rat(1), Rat(2)});
}

TEST_CASE("the reflection adjoins a unit slot to sequences") {
  CarrierPtr s = TruncCarrier::ev_seq(4);
  WReflection w = w_reflect(s);
  CHECK_FALSE(w.already_unital);
  CHECK(w.has_tail_slot);
  CHECK(w.tuple_len == 5);
  TruncElement a = make_element(s, {Rat(1), Rat(0), Rat(2)});
  auto t = w.embed(a);
  REQUIRE(t.size() == 5);
  CHECK(t[0] == Rat(1));
  CHECK(t[2] == Rat(2));
  CHECK(t[4] == Rat(0));  // eventually-zero inputs vanish in the tail slot
  CHECK(w.member(w.unit));
  CHECK(w.member(t));
}

TEST_CASE("factorizations through the reflection are unique") {
  std::mt19937_64 rng(2468);
  for (CarrierPtr c : {TruncCarrier::fin_vec({Rat(1), Rat(3, 2)}),
                       CarrierPtr(TruncCarrier::ev_seq(3))}) {
    for (int n : reflection_factor_counts(w_reflect(c), rng, 40))
      CHECK(n == 1);
  }
}
