#include "problogic/formula.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace problogic {

// ---------------------------------------------------------------------------
// Alphabet

Alphabet::Alphabet(std::vector<std::string> props) : props_(std::move(props)) {
  if (props_.empty()) throw std::invalid_argument("alphabet must be non-empty");
  std::unordered_set<std::string_view> seen;
  for (const auto& p : props_) {
    if (p.empty()) throw std::invalid_argument("empty proposition name");
    if (!seen.insert(p).second)
      throw std::invalid_argument("duplicate proposition '" + p + "'");
  }
  if (props_.size() > 63)
    throw std::invalid_argument("alphabet too large for world indexing");
}

std::optional<std::size_t> Alphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < props_.size(); ++i)
    if (props_[i] == name) return i;
  return std::nullopt;
}

std::uint64_t Alphabet::world_count() const {
  return std::uint64_t{1} << props_.size();
}

bool Alphabet::world_truth(World w, std::size_t prop_index) const {
  return (w >> (props_.size() - 1 - prop_index)) & 1u;
}

std::string Alphabet::world_key(World w) const {
  std::string key(props_.size(), '0');
  for (std::size_t i = 0; i < props_.size(); ++i)
    if (world_truth(w, i)) key[i] = '1';
  return key;
}

World Alphabet::world_from_key(const std::string& key) const {
  if (key.size() != props_.size())
    throw std::invalid_argument("world key '" + key + "' has wrong width (expected " +
                                std::to_string(props_.size()) + " bits)");
  World w = 0;
  for (char c : key) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("world key '" + key + "' is not a bit-string");
    w = (w << 1) | static_cast<World>(c == '1');
  }
  return w;
}

// ---------------------------------------------------------------------------
// Formula

struct Formula::Node {
  Kind kind;
  std::string name;       // Prop
  bool value = false;     // Const
  std::shared_ptr<const Node> lhs, rhs;
};

Formula Formula::prop(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Prop;
  n->name = std::move(name);
  return Formula(std::move(n));
}

Formula Formula::negation(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->lhs = std::move(f.node_);
  return Formula(std::move(n));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->lhs = std::move(lhs.node_);
  n->rhs = std::move(rhs.node_);
  return Formula(std::move(n));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return negation(conjunction(negation(std::move(lhs)), negation(std::move(rhs))));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return negation(conjunction(std::move(lhs), negation(std::move(rhs))));
}

Formula Formula::constant(bool value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->value = value;
  return Formula(std::move(n));
}

Formula::Kind Formula::kind() const { return node_->kind; }

const std::string& Formula::prop_name() const { return node_->name; }

bool Formula::const_value() const { return node_->value; }

Formula Formula::child() const { return Formula(node_->lhs); }

Formula Formula::left() const { return Formula(node_->lhs); }

Formula Formula::right() const { return Formula(node_->rhs); }

namespace {

bool nodes_equal(const Formula& a, const Formula& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Prop:
      return a.prop_name() == b.prop_name();
    case Formula::Kind::Const:
      return a.const_value() == b.const_value();
    case Formula::Kind::Not:
      return nodes_equal(a.child(), b.child());
    case Formula::Kind::And:
      return nodes_equal(a.left(), b.left()) && nodes_equal(a.right(), b.right());
  }
  return false;
}

void print_node(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Prop:
      out += f.prop_name();
      break;
    case Formula::Kind::Const:
      out += f.const_value() ? "true" : "false";
      break;
    case Formula::Kind::Not:
      out += '~';
      print_node(f.child(), out);
      break;
    case Formula::Kind::And:
      out += '(';
      print_node(f.left(), out);
      out += " & ";
      print_node(f.right(), out);
      out += ')';
      break;
  }
}

void collect_props(const Formula& f, std::vector<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Prop:
      if (std::find(out.begin(), out.end(), f.prop_name()) == out.end())
        out.push_back(f.prop_name());
      break;
    case Formula::Kind::Const:
      break;
    case Formula::Kind::Not:
      collect_props(f.child(), out);
      break;
    case Formula::Kind::And:
      collect_props(f.left(), out);
      collect_props(f.right(), out);
      break;
  }
}

}  // namespace

bool Formula::structurally_equal(const Formula& other) const {
  return nodes_equal(*this, other);
}

std::string Formula::to_string() const {
  std::string out;
  print_node(*this, out);
  return out;
}

std::vector<std::string> Formula::props() const {
  std::vector<std::string> out;
  collect_props(*this, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Token {
  enum class Type { Ident, True, False, Not, And, Or, Implies, LParen, RParen, End };
  Type type;
  std::string text;
  std::size_t offset;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) return {Token::Type::End, "", start};
    const char c = text_[pos_];
    if (c == '~') { ++pos_; return {Token::Type::Not, "~", start}; }
    if (c == '&') { ++pos_; return {Token::Type::And, "&", start}; }
    if (c == '|') { ++pos_; return {Token::Type::Or, "|", start}; }
    if (c == '(') { ++pos_; return {Token::Type::LParen, "(", start}; }
    if (c == ')') { ++pos_; return {Token::Type::RParen, ")", start}; }
    if (c == '-') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
        pos_ += 2;
        return {Token::Type::Implies, "->", start};
      }
      throw ParseError("unexpected character '-'", start);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
        ++end;
      std::string word = text_.substr(pos_, end - pos_);
      pos_ = end;
      if (word == "true") return {Token::Type::True, word, start};
      if (word == "false") return {Token::Type::False, word, start};
      return {Token::Type::Ident, word, start};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lexer_(text) { advance(); }

  Formula parse() {
    if (current_.type == Token::Type::End)
      throw ParseError("empty input", 0);
    Formula f = parse_implication();
    if (current_.type != Token::Type::End)
      throw ParseError("unexpected token '" + current_.text + "'", current_.offset);
    return f;
  }

 private:
  void advance() { current_ = lexer_.next(); }

  Formula parse_implication() {
    Formula lhs = parse_disjunction();
    if (current_.type == Token::Type::Implies) {
      advance();
      return Formula::implication(std::move(lhs), parse_implication());
    }
    return lhs;
  }

  Formula parse_disjunction() {
    Formula f = parse_conjunction();
    while (current_.type == Token::Type::Or) {
      advance();
      f = Formula::disjunction(std::move(f), parse_conjunction());
    }
    return f;
  }

  Formula parse_conjunction() {
    Formula f = parse_negation();
    while (current_.type == Token::Type::And) {
      advance();
      f = Formula::conjunction(std::move(f), parse_negation());
    }
    return f;
  }

  Formula parse_negation() {
    if (current_.type == Token::Type::Not) {
      advance();
      return Formula::negation(parse_negation());
    }
    return parse_atom();
  }

  Formula parse_atom() {
    switch (current_.type) {
      case Token::Type::Ident: {
        Formula f = Formula::prop(current_.text);
        advance();
        return f;
      }
      case Token::Type::True:
        advance();
        return Formula::constant(true);
      case Token::Type::False:
        advance();
        return Formula::constant(false);
      case Token::Type::LParen: {
        const std::size_t open = current_.offset;
        advance();
        Formula f = parse_implication();
        if (current_.type != Token::Type::RParen)
          throw ParseError("unbalanced parenthesis", open);
        advance();
        return f;
      }
      case Token::Type::End:
        throw ParseError("expected formula", current_.offset);
      default:
        throw ParseError("unexpected token '" + current_.text + "'", current_.offset);
    }
  }

  Lexer lexer_;
  Token current_{Token::Type::End, "", 0};
};

}  // namespace

Formula parse_formula(const std::string& text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Evaluation

bool eval_world(const Formula& f, World w, const Alphabet& a) {
  switch (f.kind()) {
    case Formula::Kind::Prop: {
      const auto idx = a.index_of(f.prop_name());
      if (!idx)
        throw std::invalid_argument("unknown proposition '" + f.prop_name() + "'");
      return a.world_truth(w, *idx);
    }
    case Formula::Kind::Const:
      return f.const_value();
    case Formula::Kind::Not:
      return !eval_world(f.child(), w, a);
    case Formula::Kind::And:
      return eval_world(f.left(), w, a) && eval_world(f.right(), w, a);
  }
  return false;
}

bool equivalent(const Formula& f, const Formula& g, const Alphabet& a,
                std::size_t enum_cap) {
  if (a.size() > enum_cap)
    throw CapExceeded("alphabet of " + std::to_string(a.size()) +
                      " propositions exceeds enumeration cap " +
                      std::to_string(enum_cap));
  const std::uint64_t n = a.world_count();
  for (World w = 0; w < n; ++w)
    if (eval_world(f, w, a) != eval_world(g, w, a)) return false;
  return true;
}

}  // namespace problogic
