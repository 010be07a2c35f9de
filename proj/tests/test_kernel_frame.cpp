#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "trunclab/kernel_frame.hpp"

using namespace trunclab;

namespace {

CarrierPtr vec3() {
  return TruncCarrier::fin_vec({Rat(1), Rat(2), Rat(1, 2)});
}

TruncElement el(CarrierPtr c, std::vector<Rat> coords, Rat tail = Rat(0)) {
  return make_element(std::move(c), std::move(coords), tail);
}

}  // namespace

TEST_CASE("kernel membership goes by support") {
  CarrierPtr c = vec3();
  TruncationKernel k = kernel_from_mask(c, 0b101);
  CHECK(k.contains(el(c, {Rat(5), Rat(0), Rat(-1, 3)})));
  CHECK_FALSE(k.contains(el(c, {Rat(0), Rat(1), Rat(0)})));
  CHECK(kernel_zero(c).contains(zero_element(c)));
  CHECK(kernel_all(c).is_all());
  CHECK_THROWS_AS(kernel_from_mask(c, 0b1000), DomainError);

  CarrierPtr s = TruncCarrier::ev_seq(2);
  TruncationKernel tail_only = kernel_from_mask(s, 0b100);
  CHECK(tail_only.has_tail());
  CHECK(tail_only.contains(el(s, {Rat(0), Rat(0), Rat(0), Rat(9)})));
  CHECK_FALSE(tail_only.contains(el(s, {Rat(1)})));
  // elements with a nonzero eventual value are not members of the trunc
  CHECK_THROWS_AS(kernel_all(s).contains(el(s, {Rat(0)}, Rat(1))),
                  DomainError);
}

TEST_CASE("principal kernels and closures land on the support") {
  CarrierPtr c = vec3();
  CHECK(principal_kernel(el(c, {Rat(0), Rat(7), Rat(0)})).mask == 0b010);
  KernelClosure kc = kernel_closure(
      c, {el(c, {Rat(1), Rat(0), Rat(0)}), el(c, {Rat(0), Rat(0), Rat(-2)})});
  CHECK(kc.kernel.mask == 0b101);
  CHECK(kc.stages >= 1);  // the ladder confirmed a fixed point

  CarrierPtr s = TruncCarrier::ev_seq(2);
  // support past the window collapses into the tail bit
  CHECK(principal_kernel(el(s, {Rat(0), Rat(0), Rat(0), Rat(1)})).mask ==
        0b100);
}

TEST_CASE("kernel lattice operations match mask algebra") {
  CarrierPtr c = vec3();
  TruncationKernel j = kernel_from_mask(c, 0b011);
  TruncationKernel k = kernel_from_mask(c, 0b110);
  CHECK(kernel_join(j, k).mask == 0b111);
  CHECK(kernel_meet(j, k).mask == 0b010);
  CHECK(kernel_leq(kernel_meet(j, k), j));
  CHECK_FALSE(kernel_leq(j, k));
  CHECK_THROWS_AS(
      kernel_join(j, kernel_zero(TruncCarrier::fin_vec({Rat(1)}))),
      CarrierMismatch);
}

TEST_CASE("polars complement supports") {
  CarrierPtr c = vec3();
  TruncationKernel p = polar(c, {el(c, {Rat(1), Rat(0), Rat(-1)})});
  CHECK(p.mask == 0b010);
  CHECK(kernel_polar(p).mask == 0b101);
  CHECK(kernel_polar(kernel_zero(c)).is_all());
}

TEST_CASE("bright kernels agree with the coordinate oracle") {
  std::mt19937_64 rng(2026);
  CarrierPtr c = vec3();
  CarrierPtr s = TruncCarrier::ev_seq(3);
  for (int t = 0; t < 200; ++t) {
    TruncElement a = pos_part(random_element(c, rng));
    TruncElement b = pos_part(random_element(s, rng));
    Rat r = random_rat(rng, 4, 6, true);
    CHECK(bright(a, r).mask == oracles::bright_mask(a, r));
    CHECK(bright(b, r).mask == oracles::bright_mask(b, r));
  }
  CHECK_THROWS_AS(bright(pos_part(random_element(c, rng)), Rat(-1)),
                  DomainError);
}

TEST_CASE("dark kernels agree with the coordinate oracle") {
  std::mt19937_64 rng(31337);
  CarrierPtr c = vec3();
  CarrierPtr s = TruncCarrier::ev_seq(3);
  for (int t = 0; t < 200; ++t) {
    TruncElement a = random_truncated(c, rng);
    TruncElement b = random_truncated(s, rng);
    Rat r = random_rat(rng, 3, 6, true);
    CHECK(dark(a, r).mask == oracles::dark_mask(a, r));
    CHECK(dark(b, r).mask == oracles::dark_mask(b, r));
  }
  CHECK(dark(random_truncated(c, rng), Rat(0)).is_zero());
  // only truncated elements have a dark family
  CHECK_THROWS_AS(dark(el(c, {Rat(3), Rat(0), Rat(0)}), Rat(1)), DomainError);
}

TEST_CASE("the greatest truncated member of a tuple kernel") {
  CarrierPtr c = vec3();
  TruncElement z = zero_part_top(kernel_from_mask(c, 0b110));
  CHECK(z.at(0) == Rat(0));
  CHECK(z.at(1) == Rat(2));
  CHECK(z.at(2) == Rat(1, 2));
  CHECK_THROWS_AS(zero_part_top(kernel_zero(TruncCarrier::ev_seq(2))),
                  DomainError);
}

TEST_CASE("axiom checks pass on honest carriers and cite witnesses on broken ones") {
  std::mt19937_64 rng(7);
  CHECK(check_axioms(vec3(), rng, 60).passed());
  CHECK(check_axioms(TruncCarrier::ev_seq(4), rng, 60).passed());

  AxiomReport z = check_axioms(
      TruncCarrier::fin_vec({Rat(1)}, TruncMutation::Zero), rng, 60);
  CHECK_FALSE(z.zero_reflecting);
  CHECK_FALSE(z.violations.empty());

  AxiomReport id = check_axioms(
      TruncCarrier::fin_vec({Rat(1)}, TruncMutation::Identity), rng, 60);
  CHECK_FALSE(id.escapes_unit);
}

TEST_CASE("the kernel frame is the expected powerset") {
  KernelFrame kf = kernel_frame(vec3());
  CHECK(kf.frame->size() == 8);
  CHECK(kf.frame->is_atomic_boolean());
  CHECK(cross_check_ops(kf).empty());
  TruncationKernel k = kernel_from_mask(kf.carrier, 0b011);
  CHECK(kf.kernel_of(kf.of(k)).mask == k.mask);

  KernelFrame ks = kernel_frame(TruncCarrier::ev_seq(2));
  CHECK(ks.frame->size() == 8);  // window bits plus the tail bit
  CHECK(cross_check_ops(ks).empty());

  CHECK_THROWS_AS(
      kernel_frame(TruncCarrier::fin_vec(std::vector<Rat>(13, Rat(1)))),
      SizeError);
}

TEST_CASE("spectrum shapes on both carriers") {
  Spectrum sv = spectrum(TruncCarrier::fin_vec({Rat(1), Rat(3, 2)}));
  SpectrumProfile pv = profile(sv);
  CHECK(pv.kernel_count == 4);
  CHECK(pv.spectrum_size == 8);  // improper filter: the full product
  CHECK_FALSE(pv.filter_proper);
  CHECK(pv.point_isolated);
  CHECK(pv.base_boolean);
  CHECK(pv.base_atomic);

  Spectrum ss = spectrum(TruncCarrier::ev_seq(4));
  SpectrumProfile ps = profile(ss);
  CHECK(ps.kernel_count == 32);
  CHECK(ps.spectrum_size == 48);
  CHECK(ps.filter_proper);
  CHECK_FALSE(ps.filter_regular);
  CHECK_FALSE(ps.point_isolated);
  // the filter is exactly the upset of the tail kernel
  Mask tail = Mask(1) << 4;
  for (Mask a : ss.filtered.filter) CHECK((a & tail) != 0);
  CHECK(ss.filtered.filter.size() == 16);
}
