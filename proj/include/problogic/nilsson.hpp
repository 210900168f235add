#pragma once

#include <boost/dynamic_bitset.hpp>

#include <map>
#include <string>
#include <vector>

#include "problogic/formula.hpp"
#include "problogic/rational.hpp"

#include <nlohmann/json_fwd.hpp>

namespace problogic {

/// Set of worlds, indexed by world number.
using WorldSet = boost::dynamic_bitset<>;

/// Truth value of the probabilistic algebra: a set of worlds together with
/// a probability. The pair is designated when the probability is exactly
/// the measure of the world set.
struct PValue {
  WorldSet indicator;
  Rational prob;
};

/// A finite probability space over all truth assignments of an alphabet.
/// Point masses are exact rationals, nonnegative, and sum to one.
class NilssonStructure {
 public:
  const Alphabet& alphabet() const { return alphabet_; }
  std::uint64_t world_count() const { return masses_.size(); }
  const Rational& mass(World w) const { return masses_.at(w); }
  const std::vector<Rational>& masses() const { return masses_; }

  /// Measure of a world set: the sum of its point masses.
  Rational measure(const WorldSet& worlds) const;

 private:
  friend NilssonStructure make_structure(const Alphabet&,
                                         const std::map<World, Rational>&,
                                         std::size_t);
  NilssonStructure(Alphabet a, std::vector<Rational> masses)
      : alphabet_(std::move(a)), masses_(std::move(masses)) {}

  Alphabet alphabet_;
  std::vector<Rational> masses_;
};

/// Builds and validates a structure from sparse point masses (missing
/// worlds default to zero). Rejects negative masses, a total different
/// from one, and alphabets beyond the enumeration cap.
NilssonStructure make_structure(const Alphabet& a,
                                const std::map<World, Rational>& masses,
                                std::size_t enum_cap = kDefaultEnumCap);

NilssonStructure uniform_structure(const Alphabet& a,
                                   std::size_t enum_cap = kDefaultEnumCap);

/// Worlds at which the formula evaluates true.
WorldSet satisfying_worlds(const Formula& f, const Alphabet& a);

/// Probability of a formula by direct world summation. This is the
/// reference route for all probability computation.
Rational weight(const NilssonStructure& n, const Formula& f);

/// The algebra's p-conjunction: intersects indicators; the probability is
/// the measure of the intersection when both inputs are designated and 0
/// otherwise.
PValue p_conj(const NilssonStructure& n, const PValue& a, const PValue& b);

/// The algebra's p-negation: complements the indicator; the probability is
/// the measure of the complement when the input is designated and 0
/// otherwise.
PValue p_neg(const NilssonStructure& n, const PValue& a);

/// Truth-functional bottom-up evaluation through the algebra. Independent
/// of `weight`; the two agree on every formula.
PValue mv_eval(const NilssonStructure& n, const Formula& f);

bool is_designated(const NilssonStructure& n, const PValue& v);

// Structure files: {"props": [...], "measure": {"bit-key": "a/b" | decimal}}.
NilssonStructure structure_from_json(const nlohmann::json& doc,
                                     std::size_t enum_cap = kDefaultEnumCap);
nlohmann::json structure_to_json(const NilssonStructure& n);
NilssonStructure load_structure(const std::string& path,
                                std::size_t enum_cap = kDefaultEnumCap);

}  // namespace problogic
