#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace problogic {

/// A possible world: one truth assignment to the alphabet, encoded as the
/// integer value of its bit-string key (first proposition = most
/// significant bit, so key "10" over {p,q} is world 2 with p=1, q=0).
using World = std::uint64_t;

/// Enumeration-based operations refuse alphabets beyond this many
/// propositions unless told otherwise.
inline constexpr std::size_t kDefaultEnumCap = 24;
/// Default world cap for linear-program compilation.
inline constexpr std::size_t kDefaultLpCap = 20;

struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t off)
      : std::runtime_error(msg + " at offset " + std::to_string(off)), offset(off) {}
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ordered set of distinct proposition names. The order is fixed and
/// defines bit positions of worlds.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> props);

  std::size_t size() const { return props_.size(); }
  const std::vector<std::string>& props() const { return props_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  std::uint64_t world_count() const;
  bool world_truth(World w, std::size_t prop_index) const;
  std::string world_key(World w) const;
  World world_from_key(const std::string& key) const;

  bool operator==(const Alphabet& other) const { return props_ == other.props_; }

 private:
  std::vector<std::string> props_;
};

/// Immutable propositional formula over conjunction and negation.
/// Disjunction and implication are definitional sugar and expand at
/// construction; `true`/`false` are kept as constant nodes that evaluate
/// exactly like their expansions.
class Formula {
 public:
  enum class Kind { Prop, Not, And, Const };

  static Formula prop(std::string name);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula constant(bool value);

  Kind kind() const;
  const std::string& prop_name() const;  // Kind::Prop
  bool const_value() const;              // Kind::Const
  Formula child() const;                 // Kind::Not
  Formula left() const;                  // Kind::And
  Formula right() const;                 // Kind::And

  bool structurally_equal(const Formula& other) const;

  /// Fully parenthesized minimal-operator form; parses back to an
  /// identical tree.
  std::string to_string() const;

  /// Distinct proposition names in order of first appearance.
  std::vector<std::string> props() const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Grammar: atoms [a-zA-Z_][a-zA-Z0-9_]*, literals `true`/`false`,
/// operators `~` > `&` > `|` > `->` (right-assoc.), parentheses.
/// Throws ParseError with a byte offset.
Formula parse_formula(const std::string& text);

/// Classical two-valued evaluation at one world. Throws
/// std::invalid_argument on a proposition missing from the alphabet.
bool eval_world(const Formula& f, World w, const Alphabet& a);

/// Brute-force equivalence over all 2^|a| worlds.
bool equivalent(const Formula& f, const Formula& g, const Alphabet& a,
                std::size_t enum_cap = kDefaultEnumCap);

}  // namespace problogic
