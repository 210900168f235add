#include "problogic/constraints.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace problogic {

std::vector<Rational> expand_weight_term(const Alphabet& a, const WeightTerm& term) {
  std::vector<Rational> coeffs(a.world_count(), Rational(0));
  for (const auto& entry : term.entries) {
    for (World w = 0; w < a.world_count(); ++w)
      if (eval_world(entry.formula, w, a)) coeffs[w] += entry.coeff;
  }
  return coeffs;
}

LinearProgram compile(const Alphabet& a, const std::vector<WeightConstraint>& cs,
                      std::size_t lp_cap) {
  if (a.size() > lp_cap)
    throw CapExceeded("alphabet of " + std::to_string(a.size()) +
                      " propositions exceeds world cap " + std::to_string(lp_cap));
  LinearProgram lp;
  lp.num_vars = a.world_count();
  for (const auto& c : cs) {
    LinearRow row;
    row.coeffs = expand_weight_term(a, c.lhs);
    row.rel = c.rel;
    row.rhs = c.rhs - c.lhs.constant;
    lp.rows.push_back(std::move(row));
  }
  // Total mass row; together with variable nonnegativity it encodes the
  // probability axioms over the world masses.
  LinearRow mass;
  mass.coeffs.assign(lp.num_vars, Rational(1));
  mass.rel = RowRelation::Equal;
  mass.rhs = 1;
  lp.rows.push_back(std::move(mass));
  lp.objective.assign(lp.num_vars, Rational(0));
  return lp;
}

namespace {

NilssonStructure witness_from_point(const Alphabet& a,
                                    const std::vector<Rational>& point) {
  std::map<World, Rational> masses;
  for (World w = 0; w < point.size(); ++w)
    if (point[w] != 0) masses[w] = point[w];
  return make_structure(a, masses, /*enum_cap=*/a.size());
}

}  // namespace

SatResult satisfiable(const Alphabet& a, const std::vector<WeightConstraint>& cs,
                      std::size_t lp_cap) {
  const LinearProgram lp = compile(a, cs, lp_cap);
  const LpSolution sol = lp_solve(lp, Sense::Maximize);
  if (sol.status != SolveStatus::Optimal) return {SatStatus::Unsat, std::nullopt};
  return {SatStatus::Sat, witness_from_point(a, sol.point)};
}

BoundResult bound(const Alphabet& a, const std::vector<WeightConstraint>& cs,
                  const WeightTerm& objective, Sense sense, std::size_t lp_cap) {
  LinearProgram lp = compile(a, cs, lp_cap);
  lp.objective = expand_weight_term(a, objective);
  const LpSolution sol = lp_solve(lp, sense);
  if (sol.status != SolveStatus::Optimal) return {sol.status, Rational(0), std::nullopt};
  return {SolveStatus::Optimal, sol.value + objective.constant,
          witness_from_point(a, sol.point)};
}

bool holds(const NilssonStructure& n, const WeightConstraint& c) {
  Rational lhs = c.lhs.constant;
  for (const auto& entry : c.lhs.entries)
    lhs += entry.coeff * weight(n, entry.formula);
  switch (c.rel) {
    case RowRelation::LessEq: return lhs <= c.rhs;
    case RowRelation::GreaterEq: return lhs >= c.rhs;
    case RowRelation::Equal: return lhs == c.rhs;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Surface syntax

namespace {

class TermParser {
 public:
  TermParser(const std::string& text, std::size_t base_offset)
      : text_(text), base_(base_offset) {}

  WeightTerm parse_side() {
    WeightTerm term;
    term.constant = 0;
    parse_term(term, /*negated=*/false);
    for (;;) {
      skip_space();
      if (peek() == '+') {
        ++pos_;
        parse_term(term, false);
      } else if (peek() == '-') {
        ++pos_;
        parse_term(term, true);
      } else {
        break;
      }
    }
    return term;
  }

  RowRelation parse_relation() {
    skip_space();
    if (peek() == '<') {
      expect('<'); expect('=');
      return RowRelation::LessEq;
    }
    if (peek() == '>') {
      expect('>'); expect('=');
      return RowRelation::GreaterEq;
    }
    expect('=');
    return RowRelation::Equal;
  }

  void expect_end() {
    skip_space();
    if (pos_ < text_.size())
      throw ParseError("unexpected trailing input", base_ + pos_);
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  void expect(char c) {
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "'", base_ + pos_);
    ++pos_;
  }

  void parse_term(WeightTerm& out, bool negated) {
    skip_space();
    bool negative = negated;
    while (peek() == '+' || peek() == '-') {
      if (peek() == '-') negative = !negative;
      ++pos_;
      skip_space();
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Rational value = parse_number();
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
        Formula f = parse_weight_atom();
        out.entries.push_back({negative ? -value : value, std::move(f)});
      } else {
        out.constant += negative ? -value : value;
      }
    } else if (peek() == 'w') {
      Formula f = parse_weight_atom();
      out.entries.push_back({Rational(negative ? -1 : 1), std::move(f)});
    } else {
      throw ParseError("expected number or w(...)", base_ + pos_);
    }
  }

  Rational parse_number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '.' || text_[pos_] == '/'))
      ++pos_;
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), base_ + start);
    }
  }

  Formula parse_weight_atom() {
    expect('w');
    skip_space();
    const std::size_t open = pos_;
    expect('(');
    int depth = 1;
    std::size_t end = pos_;
    while (end < text_.size() && depth > 0) {
      if (text_[end] == '(') ++depth;
      else if (text_[end] == ')') --depth;
      if (depth > 0) ++end;
    }
    if (depth != 0) throw ParseError("unbalanced parenthesis", base_ + open);
    const std::string inner = text_.substr(pos_, end - pos_);
    Formula f = [&] {
      try {
        return parse_formula(inner);
      } catch (const ParseError& e) {
        throw ParseError("in w(...): " + std::string(e.what()), base_ + pos_ + e.offset);
      }
    }();
    pos_ = end + 1;
    return f;
  }

  const std::string& text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

WeightConstraint parse_constraint_line(const std::string& line, std::size_t base) {
  TermParser parser(line, base);
  WeightTerm lhs = parser.parse_side();
  RowRelation rel = parser.parse_relation();
  WeightTerm rhs = parser.parse_side();
  parser.expect_end();
  // Normal form: formulas on the left, the constant on the right.
  WeightConstraint c;
  c.lhs.entries = std::move(lhs.entries);
  for (auto& entry : rhs.entries) {
    entry.coeff = -entry.coeff;
    c.lhs.entries.push_back(std::move(entry));
  }
  c.lhs.constant = 0;
  c.rel = rel;
  c.rhs = rhs.constant - lhs.constant;
  return c;
}

}  // namespace

std::vector<WeightConstraint> parse_constraints(const std::string& text) {
  std::vector<WeightConstraint> out;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string::npos) line_end = text.size();
    std::string line = text.substr(line_start, line_end - line_start);
    if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch))) { blank = false; break; }
    if (!blank) out.push_back(parse_constraint_line(line, line_start));
    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }
  return out;
}

WeightTerm parse_weight_term(const std::string& text) {
  TermParser parser(text, 0);
  WeightTerm term = parser.parse_side();
  parser.expect_end();
  return term;
}

std::string to_string(const WeightTerm& term) {
  std::ostringstream out;
  bool first = true;
  for (const auto& entry : term.entries) {
    if (!first) out << " + ";
    first = false;
    out << rational_to_string(entry.coeff) << "*w(" << entry.formula.to_string() << ")";
  }
  if (term.constant != 0 || first) {
    if (!first) out << " + ";
    out << rational_to_string(term.constant);
  }
  return out.str();
}

std::string to_string(const WeightConstraint& c) {
  std::ostringstream out;
  out << to_string(c.lhs);
  switch (c.rel) {
    case RowRelation::LessEq: out << " <= "; break;
    case RowRelation::GreaterEq: out << " >= "; break;
    case RowRelation::Equal: out << " = "; break;
  }
  out << rational_to_string(c.rhs);
  return out.str();
}

Alphabet constraints_alphabet(const std::vector<WeightConstraint>& cs) {
  std::vector<std::string> props;
  for (const auto& c : cs)
    for (const auto& entry : c.lhs.entries)
      for (const auto& p : entry.formula.props())
        if (std::find(props.begin(), props.end(), p) == props.end())
          props.push_back(p);
  if (props.empty())
    throw std::invalid_argument("constraints mention no propositions; supply an alphabet");
  return Alphabet(std::move(props));
}

}  // namespace problogic
