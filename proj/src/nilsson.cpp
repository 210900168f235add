#include "problogic/nilsson.hpp"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace problogic {

Rational NilssonStructure::measure(const WorldSet& worlds) const {
  if (worlds.size() != masses_.size())
    throw std::invalid_argument("world set width does not match structure");
  Rational total = 0;
  for (auto w = worlds.find_first(); w != WorldSet::npos; w = worlds.find_next(w))
    total += masses_[w];
  return total;
}

NilssonStructure make_structure(const Alphabet& a,
                                const std::map<World, Rational>& masses,
                                std::size_t enum_cap) {
  if (a.size() > enum_cap)
    throw CapExceeded("alphabet of " + std::to_string(a.size()) +
                      " propositions exceeds enumeration cap " +
                      std::to_string(enum_cap));
  std::vector<Rational> dense(a.world_count(), Rational(0));
  Rational total = 0;
  for (const auto& [w, m] : masses) {
    if (w >= dense.size())
      throw std::invalid_argument("world index " + std::to_string(w) +
                                  " out of range for alphabet of " +
                                  std::to_string(a.size()) + " propositions");
    if (m < 0)
      throw std::invalid_argument("negative mass " + rational_to_string(m) +
                                  " at world " + a.world_key(w));
    dense[w] = m;
    total += m;
  }
  if (total != 1)
    throw std::invalid_argument("total mass " + rational_to_string(total) + " != 1");
  return NilssonStructure(a, std::move(dense));
}

NilssonStructure uniform_structure(const Alphabet& a, std::size_t enum_cap) {
  std::map<World, Rational> masses;
  const Rational share(1, a.world_count());
  for (World w = 0; w < a.world_count(); ++w) masses[w] = share;
  return make_structure(a, masses, enum_cap);
}

WorldSet satisfying_worlds(const Formula& f, const Alphabet& a) {
  WorldSet set(a.world_count());
  for (World w = 0; w < a.world_count(); ++w)
    if (eval_world(f, w, a)) set.set(w);
  return set;
}

Rational weight(const NilssonStructure& n, const Formula& f) {
  Rational total = 0;
  for (World w = 0; w < n.world_count(); ++w)
    if (eval_world(f, w, n.alphabet())) total += n.mass(w);
  return total;
}

PValue p_conj(const NilssonStructure& n, const PValue& a, const PValue& b) {
  WorldSet meet = a.indicator & b.indicator;
  const bool designated =
      a.prob == n.measure(a.indicator) && b.prob == n.measure(b.indicator);
  Rational prob = designated ? n.measure(meet) : Rational(0);
  return {std::move(meet), std::move(prob)};
}

PValue p_neg(const NilssonStructure& n, const PValue& a) {
  WorldSet comp = ~a.indicator;
  const bool designated = a.prob == n.measure(a.indicator);
  Rational prob = designated ? n.measure(comp) : Rational(0);
  return {std::move(comp), std::move(prob)};
}

PValue mv_eval(const NilssonStructure& n, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Prop: {
      const auto idx = n.alphabet().index_of(f.prop_name());
      if (!idx)
        throw std::invalid_argument("unknown proposition '" + f.prop_name() + "'");
      WorldSet set(n.world_count());
      for (World w = 0; w < n.world_count(); ++w)
        if (n.alphabet().world_truth(w, *idx)) set.set(w);
      Rational prob = n.measure(set);
      return {std::move(set), std::move(prob)};
    }
    case Formula::Kind::Const: {
      // Same value as evaluating the definitional expansion over the first
      // proposition.
      WorldSet set(n.world_count());
      if (f.const_value()) set.set();
      Rational prob = f.const_value() ? Rational(1) : Rational(0);
      return {std::move(set), std::move(prob)};
    }
    case Formula::Kind::Not:
      return p_neg(n, mv_eval(n, f.child()));
    case Formula::Kind::And:
      return p_conj(n, mv_eval(n, f.left()), mv_eval(n, f.right()));
  }
  throw std::logic_error("unreachable formula kind");
}

bool is_designated(const NilssonStructure& n, const PValue& v) {
  return v.prob == n.measure(v.indicator);
}

NilssonStructure structure_from_json(const nlohmann::json& doc, std::size_t enum_cap) {
  if (!doc.is_object() || !doc.contains("props") || !doc.contains("measure"))
    throw std::invalid_argument("structure document needs 'props' and 'measure'");
  std::vector<std::string> props;
  for (const auto& p : doc.at("props")) props.push_back(p.get<std::string>());
  Alphabet a(std::move(props));
  std::map<World, Rational> masses;
  for (const auto& [key, value] : doc.at("measure").items()) {
    const World w = a.world_from_key(key);
    Rational m = value.is_number_integer()
                     ? Rational(value.get<long long>())
                     : parse_rational(value.get<std::string>());
    masses[w] = std::move(m);
  }
  return make_structure(a, masses, enum_cap);
}

nlohmann::json structure_to_json(const NilssonStructure& n) {
  nlohmann::json doc;
  doc["props"] = n.alphabet().props();
  nlohmann::json measure = nlohmann::json::object();
  for (World w = 0; w < n.world_count(); ++w)
    measure[n.alphabet().world_key(w)] = rational_to_string(n.mass(w));
  doc["measure"] = std::move(measure);
  return doc;
}

NilssonStructure load_structure(const std::string& path, std::size_t enum_cap) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open structure file '" + path + "'");
  nlohmann::json doc;
  in >> doc;
  return structure_from_json(doc, enum_cap);
}

}  // namespace problogic
