#include "trunclab/represent.hpp"

#include <algorithm>
#include <set>

namespace trunclab {

namespace {

/// The value of the representation on the open upper ray at r, computed
/// from the kernel calculus: the closure of the positive part of a
/// shifted by r times the truncation levels.
Mask underline_upper(const CarrierPtr& c, const TruncElement& a,
                     const Rat& r) {
  TruncElement shifted = a;
  const int n = c->kind == CarrierKind::FinVec
                    ? c->dim
                    : std::max(a.prefix_len(), c->dim);
  if (shifted.prefix_len() < n) shifted.coords.resize(static_cast<size_t>(n), Rat(0));
  for (int i = 0; i < n; ++i) {
    Rat level = c->kind == CarrierKind::FinVec
                    ? c->unit[static_cast<size_t>(i)]
                    : Rat(1);
    shifted.coords[static_cast<size_t>(i)] = a.at(i) - r * level;
  }
  Mask m = kernel_closure(c, {pos_part(shifted)}).kernel.mask;
  // beyond the window an eventually zero sequence sits at level 0, so
  // the tail region clears the ray exactly when r is negative
  if (c->kind == CarrierKind::EvSeq && r < Rat(0)) m |= Mask(1) << c->dim;
  return m;
}

std::set<Rat> underline_cuts(const CarrierPtr& c, const TruncElement& a) {
  std::set<Rat> cuts{Rat(0)};
  const int n = c->kind == CarrierKind::FinVec
                    ? c->dim
                    : std::max(a.prefix_len(), c->dim);
  for (int i = 0; i < n; ++i) {
    Rat level = c->kind == CarrierKind::FinVec
                    ? c->unit[static_cast<size_t>(i)]
                    : Rat(1);
    cuts.insert(a.at(i) / level);
  }
  return cuts;
}

}  // namespace

RealFrameMap underline(const KernelFrame& kf, const TruncElement& a) {
  if (a.tail != Rat(0))
    throw DomainError("representation needs a member of the trunc");
  RealFrameMap f;
  f.target = kf.frame;
  for (const Rat& r : underline_cuts(kf.carrier, a))
    f.steps.push_back({r, underline_upper(kf.carrier, a, r)});
  return normalize(std::move(f));
}

RealFrameMap hat(const Spectrum& sp, const TruncElement& a) {
  if (a.tail != Rat(0))
    throw DomainError("representation needs a member of the trunc");
  RealFrameMap f;
  f.target = sp.pointed.pointed.frame;
  for (const Rat& r : underline_cuts(sp.base.carrier, a))
    f.steps.push_back(
        {r, sp.pointed.pair(r < Rat(0),
                            underline_upper(sp.base.carrier, a, r))});
  return normalize(std::move(f));
}

bool in_pointed_reals(const Product2& m, const RealFrameMap& f) {
  if (f.target->elements() != m.pointed.frame->elements()) return false;
  std::vector<Rat> probes{Rat(0)};
  Rat lowest(-1);
  for (const auto& [bp, val] : f.steps) lowest = rat_min(lowest, bp - Rat(1));
  probes.push_back(lowest);
  for (std::size_t i = 0; i < f.steps.size(); ++i) {
    probes.push_back(f.steps[i].first);
    if (i + 1 < f.steps.size())
      probes.push_back((f.steps[i].first + f.steps[i + 1].first) / Rat(2));
    else
      probes.push_back(f.steps[i].first + Rat(1));
  }
  for (const Rat& r : probes)
    if (m.eps_of(f.upper(r)) != (r < Rat(0))) return false;
  return true;
}

UnitalClassification classify_unital(const Spectrum& sp) {
  const CarrierPtr& c = sp.base.carrier;
  UnitalClassification u;

  // candidate greatest truncated element: the truncation levels on every
  // window coordinate; any other truncated member has a smaller dark set
  std::vector<int> window;
  for (int i = 0; i < c->dim; ++i) window.push_back(i);
  TruncElement candidate = indicator(c, window);
  u.dark_unit_zero = dark(truncate(candidate), Rat(1)).is_zero();

  u.point_isolated = is_isolated(sp.pointed.pointed);

  if (c->kind == CarrierKind::FinVec) {
    u.has_top_of_trunc = true;  // the unit dominates every truncated tuple
    u.witness = "unit " + candidate.str();
  } else {
    // a challenger supported past any finite prefix beats any candidate
    TruncElement challenger = zero_element(c);
    challenger.coords.resize(static_cast<size_t>(c->dim) + 1, Rat(0));
    challenger.coords.back() = Rat(1);
    u.has_top_of_trunc = leq(challenger, candidate);
    u.witness = "no greatest truncated element: " + challenger.str() +
                " escapes " + candidate.str();
  }
  return u;
}

TruncElement TruncMorphism::apply(const TruncElement& a) const {
  if (!a.carrier || a.carrier->kind != source->kind ||
      a.carrier->dim != source->dim)
    throw CarrierMismatch("morphism applied outside its source");
  auto read = [&](const Coord& c) -> Rat {
    if (c.src < 0) return c.scale * a.tail;
    return c.scale * a.at(c.src);
  };
  TruncElement out = zero_element(target);
  out.coords.resize(static_cast<size_t>(target->dim), Rat(0));
  for (int j = 0; j < target->dim; ++j)
    out.coords[static_cast<size_t>(j)] = read(coords[static_cast<size_t>(j)]);
  if (target->kind == CarrierKind::EvSeq) out.tail = read(tail_rule);
  return out;
}

TruncMorphism make_morphism(CarrierPtr source, CarrierPtr target,
                            std::vector<TruncMorphism::Coord> coords,
                            TruncMorphism::Coord tail_rule) {
  if (!source || !target) throw DomainError("morphism needs both carriers");
  if (static_cast<int>(coords.size()) != target->dim)
    throw SizeError("coordinate rule count does not match the target");
  auto src_level = [&](int i) -> Rat {
    if (i < 0 || source->kind == CarrierKind::EvSeq) return Rat(1);
    if (i >= source->dim) throw DomainError("rule reads outside the source");
    return source->unit[static_cast<size_t>(i)];
  };
  auto check = [&](const TruncMorphism::Coord& c, const Rat& tgt_level) {
    if (c.scale < Rat(0))
      throw DomainError("rule scale must be nonnegative");
    if (c.src < -1 ||
        (source->kind == CarrierKind::FinVec && c.src >= source->dim))
      throw DomainError("rule reads outside the source");
    if (c.src == -1 && source->kind != CarrierKind::EvSeq)
      throw DomainError("tuples have no tail to read");
    if (c.scale != Rat(0) && c.scale * src_level(c.src) != tgt_level)
      throw DomainError("rule does not carry the truncation level across");
  };
  for (int j = 0; j < target->dim; ++j) {
    Rat lvl = target->kind == CarrierKind::FinVec
                  ? target->unit[static_cast<size_t>(j)]
                  : Rat(1);
    check(coords[static_cast<size_t>(j)], lvl);
  }
  if (target->kind == CarrierKind::EvSeq) check(tail_rule, Rat(1));
  TruncMorphism m;
  m.source = std::move(source);
  m.target = std::move(target);
  m.coords = std::move(coords);
  m.tail_rule = tail_rule;
  return m;
}

RealFrameMap RealValuedMorphism::apply(const TruncElement& a) const {
  if (a.tail != Rat(0) || a.prefix_len() > source->dim)
    throw DomainError("morphism input must be supported inside the window");
  RealFrameMap f = rfm_constant(target.pointed.frame, Rat(0));
  for (int i = 0; i < a.prefix_len(); ++i) {
    Rat level = source->kind == CarrierKind::FinVec
                    ? source->unit[static_cast<size_t>(i)]
                    : Rat(1);
    Rat coeff = a.at(i) / level;
    if (coeff == Rat(0)) continue;
    f = rfm_add(f, rfm_scale(coeff, gen_images[static_cast<size_t>(i)]));
  }
  return f;
}

RealValuedMorphism compose_with_hat(const TruncMorphism& theta,
                                    const Spectrum& target_spectrum) {
  RealValuedMorphism m;
  m.source = theta.source;
  m.target = target_spectrum.pointed;
  // generator convention: gen_images[i] is the image of the unit-level
  // indicator at i, which is exactly what indicator() produces
  for (int i = 0; i < theta.source->dim; ++i)
    m.gen_images.push_back(
        hat(target_spectrum, theta.apply(indicator(theta.source, {i}))));
  return m;
}

std::string validate_morphism(const RealValuedMorphism& theta,
                              std::mt19937_64& rng, int samples) {
  CarrierPtr c = theta.source;
  for (int t = 0; t < samples; ++t) {
    TruncElement a = random_element(c, rng, 4, 6);
    TruncElement b = random_element(c, rng, 4, 6);
    RealFrameMap fa = theta.apply(a), fb = theta.apply(b);
    if (!rfm_eq(theta.apply(vee(a, b)), rfm_vee(fa, fb)))
      return "join not preserved at " + a.str() + ", " + b.str();
    if (!rfm_eq(theta.apply(wedge(a, b)), rfm_wedge(fa, fb)))
      return "meet not preserved at " + a.str() + ", " + b.str();
    if (!rfm_eq(theta.apply(add(a, b)), rfm_add(fa, fb)))
      return "sum not preserved at " + a.str() + ", " + b.str();
    TruncElement p = pos_part(a);
    if (!rfm_eq(theta.apply(truncate(p)), rfm_truncate(theta.apply(p))))
      return "truncation not preserved at " + p.str();
    if (!in_pointed_reals(theta.target, fa))
      return "image of " + a.str() + " leaves the pointed reals";
  }
  return "";
}

namespace {

/// Deterministic generating family for the two join formulas defining
/// the induced map, per kernel mask. The bottom slot joins cozeros of
/// truncated members inside K; the top slot joins co-one values of
/// truncated members whose dark set sits inside K.
struct JoinGrids {
  std::vector<TruncElement> zero_slot;
  std::vector<TruncElement> one_slot;
};

JoinGrids grids_for(const CarrierPtr& c, Mask kmask) {
  if (c->kind != CarrierKind::FinVec)
    throw DomainError(
        "induced map realization is window exact for tuples only");
  JoinGrids g;
  std::vector<int> support;
  for (int i = 0; i < c->dim; ++i)
    if ((kmask >> i) & 1) support.push_back(i);
  // bottom slot: the truncated members inside K form a downset with top
  // u restricted to the support; walk the indicator sublattice
  const std::size_t subsets = std::size_t(1) << support.size();
  for (std::size_t s = 0; s < subsets; ++s) {
    std::vector<int> sub;
    for (std::size_t b = 0; b < support.size(); ++b)
      if ((s >> b) & 1) sub.push_back(support[static_cast<size_t>(b)]);
    TruncElement e = indicator(c, sub);
    g.zero_slot.push_back(e);
    g.zero_slot.push_back(scale(Rat(1, 2), e));
  }
  // top slot: a truncated member has its dark set inside K exactly when
  // it matches the unit off the support; vary the support values
  const int levels = 3;  // 0, 1/2, 1 of the unit value per coordinate
  std::size_t combos = 1;
  for (std::size_t i = 0; i < support.size(); ++i) combos *= levels;
  for (std::size_t s = 0; s < combos; ++s) {
    TruncElement e = make_element(c, c->unit);
    std::size_t code = s;
    for (int i : support) {
      int lvl = static_cast<int>(code % levels);
      code /= levels;
      e.coords[static_cast<size_t>(i)] =
          c->unit[static_cast<size_t>(i)] * Rat(lvl, levels - 1);
    }
    g.one_slot.push_back(e);
  }
  return g;
}

}  // namespace

InducedG induced_g(const RealValuedMorphism& theta, const Spectrum& sp,
                   std::mt19937_64& rng, int samples, bool check_unique) {
  const CarrierPtr& c = sp.base.carrier;
  InducedG out;
  out.g.source = sp.pointed.pointed.frame;
  out.g.target = theta.target.pointed.frame;
  out.join_stabilized = true;

  for (Mask m : sp.pointed.pointed.frame->elements()) {
    bool eps = sp.pointed.eps_of(m);
    Mask kmask = sp.pointed.drop(m);
    JoinGrids grids = grids_for(c, kmask);
    Mask v = theta.target.pointed.frame->bottom();
    if (!eps) {
      for (const auto& a : grids.zero_slot)
        v |= rfm_coz(theta.apply(a));
      // random members of the slot must not move the join
      TruncationKernel k = kernel_from_mask(c, kmask);
      for (int t = 0; t < samples; ++t) {
        TruncElement a = wedge(random_truncated(c, rng), zero_part_top(k));
        if ((v | rfm_coz(theta.apply(a))) != v) out.join_stabilized = false;
      }
    } else {
      for (const auto& a : grids.one_slot)
        v |= rfm_con(theta.apply(a));
      TruncationKernel k = kernel_from_mask(c, kmask);
      for (int t = 0; t < samples; ++t) {
        TruncElement a = vee(random_truncated(c, rng),
                             sub(make_element(c, c->unit), zero_part_top(k)));
        if (!dark_below(a, Rat(1), k)) continue;
        if ((v | rfm_con(theta.apply(a))) != v) out.join_stabilized = false;
      }
    }
    out.g.image.push_back(v);
  }

  auto mc = check_frame_map(out.g);
  out.valid = mc.valid;
  if (out.valid)
    for (Mask m : sp.pointed.pointed.frame->elements())
      if (theta.target.pointed.point(out.g(m)) !=
          sp.pointed.pointed.point(m))
        out.valid = false;

  out.square_commutes = true;
  for (int i = 0; i < c->dim && out.square_commutes; ++i) {
    TruncElement e = indicator(c, {i});
    if (!rfm_eq(rfm_push(hat(sp, e), out.g), theta.apply(e)))
      out.square_commutes = false;
  }
  for (int t = 0; t < samples && out.square_commutes; ++t) {
    TruncElement a = random_element(c, rng, 4, 6);
    if (!rfm_eq(rfm_push(hat(sp, a), out.g), theta.apply(a)))
      out.square_commutes = false;
  }

  out.competing_maps = 0;
  if (check_unique && sp.pointed.pointed.frame->size() <= 16 &&
      theta.target.pointed.frame->size() <= 32) {
    for (const auto& h :
         enumerate_pointed_maps(sp.pointed.pointed, theta.target.pointed)) {
      if (h.same_table(out.g)) continue;
      bool commutes = true;
      for (int i = 0; i < c->dim && commutes; ++i) {
        TruncElement e = indicator(c, {i});
        if (!rfm_eq(rfm_push(hat(sp, e), h), theta.apply(e)))
          commutes = false;
      }
      if (commutes) ++out.competing_maps;
    }
  }
  return out;
}

NonFunctorialDemo non_functorial_demo(std::mt19937_64& rng, int samples) {
  NonFunctorialDemo d;
  d.a = TruncCarrier::fin_vec({Rat(1)});
  d.b = TruncCarrier::fin_vec({Rat(1), Rat(1)});
  d.theta = make_morphism(d.a, d.b, {{0, Rat(1)}, {0, Rat(0)}});

  KernelFrame ka = kernel_frame(d.a);
  KernelFrame kb = kernel_frame(d.b);
  auto maps = enumerate_frame_maps(ka.frame, kb.frame);
  d.base_map_count = static_cast<int>(maps.size());

  // evaluate both routes on the open interval (1/2, 3/2)
  const Rat lo(1, 2), hi(3, 2);
  TruncElement one = make_element(d.a, {Rat(1)});
  RealFrameMap via_theta = underline(kb, d.theta.apply(one));
  d.lhs = via_theta.upper(lo) & via_theta.lower(hi);
  RealFrameMap via_a = underline(ka, one);
  Mask val_a = via_a.upper(lo) & via_a.lower(hi);
  d.rhs = maps.empty() ? kb.frame->bottom() : maps.front()(val_a);
  d.probe = "(" + rat_str(lo) + ", " + rat_str(hi) + ")";

  Spectrum sa = spectrum(d.a);
  Spectrum sb = spectrum(d.b);
  d.repair = induced_g(compose_with_hat(d.theta, sb), sa, rng, samples);
  return d;
}

WReflection w_reflect(CarrierPtr carrier) {
  WReflection w;
  w.carrier = carrier;
  w.sp = spectrum(carrier);
  w.has_tail_slot = carrier->kind == CarrierKind::EvSeq;
  w.tuple_len = carrier->dim + (w.has_tail_slot ? 1 : 0);
  w.already_unital = classify_unital(w.sp).unital();
  w.unit.assign(static_cast<size_t>(w.tuple_len), Rat(1));
  if (carrier->kind == CarrierKind::FinVec)
    for (int i = 0; i < carrier->dim; ++i)
      w.unit[static_cast<size_t>(i)] = carrier->unit[static_cast<size_t>(i)];
  return w;
}

std::vector<Rat> WReflection::embed(const TruncElement& a) const {
  if (a.tail != Rat(0) || a.prefix_len() > carrier->dim)
    throw DomainError("embedding needs a window supported member");
  std::vector<Rat> t(static_cast<size_t>(tuple_len), Rat(0));
  for (int i = 0; i < carrier->dim; ++i) t[static_cast<size_t>(i)] = a.at(i);
  return t;  // tail slot stays 0: the image is eventually zero
}

bool WReflection::member(const std::vector<Rat>& t) const {
  // the span of the embedded trunc and the adjoined unit: window slots
  // free, tail slot an arbitrary constant (b0 contributes it)
  return static_cast<int>(t.size()) == tuple_len;
}

std::vector<int> reflection_factor_counts(const WReflection& w,
                                          std::mt19937_64& rng, int probes,
                                          int max_target_dim) {
  std::vector<int> counts;
  const int dim = w.carrier->dim;
  std::uniform_int_distribution<int> ydim(1, max_target_dim);
  // the zero rule (-1) only factors through a tail slot, so tuples
  // without one draw window rules only
  std::uniform_int_distribution<int> pick(w.has_tail_slot ? -1 : 0, dim - 1);

  for (int t = 0; t < probes; ++t) {
    const int y = ydim(rng);
    std::vector<Rat> vunit;
    std::vector<int> reads;
    for (int j = 0; j < y; ++j) {
      Rat v = random_rat(rng, 4, 4, true);
      if (v == Rat(0)) v = Rat(1);
      vunit.push_back(v);
      reads.push_back(pick(rng));
    }
    // theta_j(a) = vunit[j] * a(reads[j]) / level, or 0 for the zero rule
    auto theta = [&](const TruncElement& a, int j) -> Rat {
      if (reads[static_cast<size_t>(j)] < 0) return Rat(0);
      int i = reads[static_cast<size_t>(j)];
      Rat level = w.carrier->kind == CarrierKind::FinVec
                      ? w.carrier->unit[static_cast<size_t>(i)]
                      : Rat(1);
      return vunit[static_cast<size_t>(j)] * a.at(i) / level;
    };
    // candidates psi: each output slot reads one reflection slot at the
    // scale forced by unit preservation; count those matching theta on
    // the coordinate indicators
    std::size_t total = 1;
    for (int j = 0; j < y; ++j) total *= static_cast<size_t>(w.tuple_len);
    int matching = 0;
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      bool ok = true;
      for (int j = 0; j < y && ok; ++j) {
        int slot = static_cast<int>(c % static_cast<size_t>(w.tuple_len));
        c /= static_cast<size_t>(w.tuple_len);
        // psi_j(t) = vunit[j] * t[slot] / w.unit[slot]
        for (int i = 0; i < dim && ok; ++i) {
          TruncElement e = indicator(w.carrier, {i});
          std::vector<Rat> img = w.embed(e);
          Rat via_psi = vunit[static_cast<size_t>(j)] *
                        img[static_cast<size_t>(slot)] /
                        w.unit[static_cast<size_t>(slot)];
          if (via_psi != theta(e, j)) ok = false;
        }
      }
      if (ok) ++matching;
    }
    counts.push_back(matching);
  }
  return counts;
}

}  // namespace trunclab
