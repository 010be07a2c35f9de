#include "trunclab/trunc.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace trunclab {

namespace {

using Json = nlohmann::ordered_json;

void require_same(const TruncElement& a, const TruncElement& b) {
  if (!a.carrier || !b.carrier) throw CarrierMismatch("element lacks a carrier");
  if (a.carrier->kind != b.carrier->kind ||
      a.carrier->dim != b.carrier->dim || a.carrier->unit != b.carrier->unit)
    throw CarrierMismatch("operands come from different carriers");
}

TruncElement zip(const TruncElement& a, const TruncElement& b,
                 Rat (*op)(const Rat&, const Rat&)) {
  require_same(a, b);
  TruncElement r;
  r.carrier = a.carrier;
  int n = std::max(a.prefix_len(), b.prefix_len());
  if (a.carrier->kind == CarrierKind::FinVec) n = a.carrier->dim;
  r.coords.reserve(n);
  for (int i = 0; i < n; ++i) r.coords.push_back(op(a.at(i), b.at(i)));
  r.tail = op(a.tail, b.tail);
  return r;
}

Rat op_add(const Rat& x, const Rat& y) { return x + y; }
Rat op_sub(const Rat& x, const Rat& y) { return x - y; }
Rat op_max(const Rat& x, const Rat& y) { return rat_max(x, y); }
Rat op_min(const Rat& x, const Rat& y) { return rat_min(x, y); }

TruncElement map1(const TruncElement& a, Rat (*op)(const Rat&)) {
  TruncElement r;
  r.carrier = a.carrier;
  r.coords.reserve(a.coords.size());
  for (const Rat& x : a.coords) r.coords.push_back(op(x));
  r.tail = op(a.tail);
  return r;
}

/// The level the truncation cuts at in coordinate i: the unit for
/// FinVec, the constant 1 for EvSeq.
Rat cut_level(const TruncCarrier& c, int i) {
  if (c.kind == CarrierKind::FinVec) return c.unit[static_cast<size_t>(i)];
  return Rat(1);
}

}  // namespace

CarrierPtr TruncCarrier::fin_vec(std::vector<Rat> unit,
                                 TruncMutation mutation) {
  if (unit.empty() || unit.size() > 16)
    throw DomainError("index set must have between 1 and 16 coordinates");
  for (const Rat& u : unit)
    if (!(u > Rat(0))) throw DomainError("unit must be strictly positive");
  auto c = std::make_shared<TruncCarrier>();
  c->kind = CarrierKind::FinVec;
  c->dim = static_cast<int>(unit.size());
  c->unit = std::move(unit);
  c->mutation = mutation;
  return c;
}

CarrierPtr TruncCarrier::ev_seq(int window, TruncMutation mutation) {
  if (window < 1 || window > 16)
    throw DomainError("window must have between 1 and 16 coordinates");
  auto c = std::make_shared<TruncCarrier>();
  c->kind = CarrierKind::EvSeq;
  c->dim = window;
  c->mutation = mutation;
  return c;
}

std::string TruncCarrier::describe() const {
  std::ostringstream out;
  if (kind == CarrierKind::FinVec) {
    out << "rational tuples over " << dim << " coordinates, unit (";
    for (int i = 0; i < dim; ++i)
      out << (i ? "," : "") << rat_str(unit[static_cast<size_t>(i)]);
    out << ")";
  } else {
    out << "eventually zero rational sequences, window " << dim;
  }
  return out.str();
}

CarrierPtr TruncCarrier::parse_json(const std::string& text,
                                    std::vector<std::vector<Rat>>* generators) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("carrier description: ") + e.what());
  }
  if (!j.contains("kind") || !j["kind"].is_string())
    throw ParseError("carrier description needs a `kind` string");
  std::string kind = j["kind"];
  CarrierPtr c;
  if (kind == "finvec") {
    if (!j.contains("unit") || !j["unit"].is_array())
      throw ParseError("finvec description needs a `unit` array");
    std::vector<Rat> unit;
    for (const auto& v : j["unit"]) unit.push_back(parse_rat(v.get<std::string>()));
    if (j.contains("dimension") &&
        j["dimension"].get<int>() != static_cast<int>(unit.size()))
      throw ParseError("`dimension` disagrees with the unit length");
    c = fin_vec(std::move(unit));
  } else if (kind == "evseq") {
    if (!j.contains("window")) throw ParseError("evseq needs a `window`");
    c = ev_seq(j["window"].get<int>());
  } else {
    throw ParseError("unknown carrier kind `" + kind + "`");
  }
  if (generators) {
    generators->clear();
    if (j.contains("generators"))
      for (const auto& g : j["generators"]) {
        std::vector<Rat> coords;
        for (const auto& v : g) coords.push_back(parse_rat(v.get<std::string>()));
        generators->push_back(std::move(coords));
      }
  }
  return c;
}

std::string TruncCarrier::to_json() const {
  Json j;
  if (kind == CarrierKind::FinVec) {
    j["kind"] = "finvec";
    j["dimension"] = dim;
    Json u = Json::array();
    for (const Rat& q : unit) u.push_back(rat_str(q));
    j["unit"] = u;
  } else {
    j["kind"] = "evseq";
    j["window"] = dim;
  }
  return j.dump(2);
}

Rat TruncElement::at(int i) const {
  if (i < prefix_len()) return coords[static_cast<size_t>(i)];
  return tail;
}

bool TruncElement::is_zero() const {
  if (tail != Rat(0)) return false;
  for (const Rat& x : coords)
    if (x != Rat(0)) return false;
  return true;
}

bool TruncElement::in_trunc() const {
  if (!carrier) return false;
  return carrier->kind == CarrierKind::FinVec || tail == Rat(0);
}

std::string TruncElement::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i)
    out += (i ? "," : "") + rat_str(coords[i]);
  out += ")";
  if (carrier && carrier->kind == CarrierKind::EvSeq)
    out += "~" + rat_str(tail);
  return out;
}

TruncElement make_element(CarrierPtr carrier, std::vector<Rat> coords,
                          Rat tail) {
  if (!carrier) throw DomainError("element needs a carrier");
  if (carrier->kind == CarrierKind::FinVec) {
    if (static_cast<int>(coords.size()) != carrier->dim)
      throw SizeError("coordinate count does not match the index set");
    if (tail != Rat(0)) throw DomainError("tuples carry no tail value");
  }
  TruncElement e;
  e.carrier = std::move(carrier);
  e.coords = std::move(coords);
  e.tail = tail;
  return e;
}

TruncElement zero_element(CarrierPtr carrier) {
  std::vector<Rat> coords;
  if (carrier->kind == CarrierKind::FinVec)
    coords.assign(static_cast<size_t>(carrier->dim), Rat(0));
  return make_element(std::move(carrier), std::move(coords));
}

TruncElement unit_element(CarrierPtr carrier) {
  if (carrier->kind == CarrierKind::FinVec)
    return make_element(carrier, carrier->unit);
  // the ambient constant 1 sequence: not a member of the trunc itself
  TruncElement e;
  e.carrier = std::move(carrier);
  e.tail = Rat(1);
  return e;
}

TruncElement indicator(CarrierPtr carrier, const std::vector<int>& support) {
  TruncElement e = zero_element(carrier);
  for (int i : support) {
    if (i < 0) throw DomainError("negative coordinate index");
    if (carrier->kind == CarrierKind::FinVec && i >= carrier->dim)
      throw SizeError("coordinate index outside the index set");
    if (i >= e.prefix_len()) e.coords.resize(static_cast<size_t>(i) + 1, Rat(0));
    e.coords[static_cast<size_t>(i)] =
        carrier->kind == CarrierKind::FinVec ? carrier->unit[static_cast<size_t>(i)]
                                             : Rat(1);
  }
  return e;
}

TruncElement add(const TruncElement& a, const TruncElement& b) {
  return zip(a, b, op_add);
}
TruncElement sub(const TruncElement& a, const TruncElement& b) {
  return zip(a, b, op_sub);
}
TruncElement neg(const TruncElement& a) {
  return map1(a, +[](const Rat& x) { return -x; });
}
TruncElement vee(const TruncElement& a, const TruncElement& b) {
  return zip(a, b, op_max);
}
TruncElement wedge(const TruncElement& a, const TruncElement& b) {
  return zip(a, b, op_min);
}
TruncElement abs(const TruncElement& a) {
  return map1(a, +[](const Rat& x) { return rat_abs(x); });
}
TruncElement scale(const Rat& q, const TruncElement& a) {
  TruncElement r = a;
  for (Rat& x : r.coords) x *= q;
  r.tail *= q;
  return r;
}
TruncElement pos_part(const TruncElement& a) { return map1(a, rat_pos); }
TruncElement neg_part(const TruncElement& a) { return pos_part(neg(a)); }

bool leq(const TruncElement& a, const TruncElement& b) {
  require_same(a, b);
  int n = std::max(a.prefix_len(), b.prefix_len());
  for (int i = 0; i < n; ++i)
    if (a.at(i) > b.at(i)) return false;
  return a.tail <= b.tail;
}

bool eq(const TruncElement& a, const TruncElement& b) {
  return leq(a, b) && leq(b, a);
}

TruncElement truncate(const TruncElement& a) {
  if (!a.carrier) throw DomainError("element needs a carrier");
  TruncElement z = zero_element(a.carrier);
  if (!leq(z, a)) throw DomainError("truncation applies to a >= 0 only");
  switch (a.carrier->mutation) {
    case TruncMutation::Zero:
      return z;
    case TruncMutation::Identity:
      return a;
    case TruncMutation::None:
      break;
  }
  TruncElement r = a;
  int n = a.carrier->kind == CarrierKind::FinVec ? a.carrier->dim
                                                 : a.prefix_len();
  for (int i = 0; i < n; ++i)
    r.coords[static_cast<size_t>(i)] =
        rat_min(a.at(i), cut_level(*a.carrier, i));
  r.tail = rat_min(a.tail, Rat(1));
  return r;
}

TruncElement diminish(const TruncElement& a, const Rat& r) {
  if (r < Rat(0)) throw DomainError("diminution threshold must be >= 0");
  if (r == Rat(0)) return a;
  TruncElement z = zero_element(a.carrier);
  if (!leq(z, a)) throw DomainError("diminution applies to a >= 0 only");
  // a - r*(a/r)-bar, via the truncation so mutations propagate
  return sub(a, scale(r, truncate(scale(Rat(1) / r, a))));
}

bool is_truncated(const TruncElement& a) { return eq(a, truncate(a)); }

Mask support_mask(const TruncElement& a) {
  Mask m = 0;
  for (int i = 0; i < a.prefix_len(); ++i)
    if (a.at(i) != Rat(0)) {
      if (i >= a.carrier->dim)
        throw SizeError("support reaches past the coordinate window");
      m |= Mask(1) << i;
    }
  return m;
}

Rat random_rat(std::mt19937_64& rng, int max_num, int max_den,
               bool nonnegative) {
  std::uniform_int_distribution<long long> num(nonnegative ? 0 : -max_num,
                                               max_num);
  std::uniform_int_distribution<long long> den(1, max_den);
  return Rat(num(rng), den(rng));
}

TruncElement random_element(CarrierPtr carrier, std::mt19937_64& rng,
                            int max_num, int max_den, bool nonnegative) {
  TruncElement e = zero_element(carrier);
  int n = carrier->dim;
  if (carrier->kind == CarrierKind::EvSeq) {
    std::uniform_int_distribution<int> len(0, carrier->dim);
    n = len(rng);
  }
  e.coords.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    e.coords[static_cast<size_t>(i)] = random_rat(rng, max_num, max_den,
                                                  nonnegative);
  return e;
}

TruncElement random_truncated(CarrierPtr carrier, std::mt19937_64& rng,
                              int max_den) {
  TruncElement e = random_element(carrier, rng, 2, max_den, true);
  return truncate(pos_part(e));
}

}  // namespace trunclab
