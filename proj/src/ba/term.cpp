#include "monkbench/ba/term.hpp"

#include <cctype>
#include <algorithm>
#include <array>
#include <charconv>
#include <optional>

#include "monkbench/errors.hpp"

namespace monkbench {

struct Term::Node {
  Kind kind;
  Label label = 0;
  std::optional<Term> left;
  std::optional<Term> right;
};

Term Term::zero() {
  static const auto node = std::make_shared<const Node>(Node{Kind::Zero, 0, std::nullopt, std::nullopt});
  return Term(node);
}

Term Term::one() {
  static const auto node = std::make_shared<const Node>(Node{Kind::One, 0, std::nullopt, std::nullopt});
  return Term(node);
}

Term Term::gen(Label label) { return Term(std::make_shared<const Node>(Node{Kind::Gen, label, std::nullopt, std::nullopt})); }

Term operator~(const Term& t) {
  return Term(std::make_shared<const Term::Node>(Term::Node{Term::Kind::Not, 0, t, std::nullopt}));
}

Term operator&(const Term& a, const Term& b) {
  return Term(std::make_shared<const Term::Node>(Term::Node{Term::Kind::And, 0, a, b}));
}

Term operator|(const Term& a, const Term& b) {
  return Term(std::make_shared<const Term::Node>(Term::Node{Term::Kind::Or, 0, a, b}));
}

Term operator-(const Term& a, const Term& b) { return a & ~b; }

Term::Kind Term::kind() const { return node_->kind; }

Label Term::label() const {
  if (node_->kind != Kind::Gen) throw UsageError("label() on a non-generator term");
  return node_->label;
}

const Term& Term::lhs() const {
  if (!node_->left) throw UsageError("term has no operand");
  return *node_->left;
}

const Term& Term::rhs() const {
  if (!node_->right) throw UsageError("term has no right operand");
  return *node_->right;
}

namespace {

void collect_labels(const Term& t, std::vector<Label>& out) {
  switch (t.kind()) {
    case Term::Kind::Gen: out.push_back(t.label()); break;
    case Term::Kind::Not: collect_labels(t.lhs(), out); break;
    case Term::Kind::And:
    case Term::Kind::Or:
      collect_labels(t.lhs(), out);
      collect_labels(t.rhs(), out);
      break;
    default: break;
  }
}

std::size_t count_nodes(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Not: return 1 + count_nodes(t.lhs());
    case Term::Kind::And:
    case Term::Kind::Or: return 1 + count_nodes(t.lhs()) + count_nodes(t.rhs());
    default: return 1;
  }
}

void print(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Zero: out += '0'; break;
    case Term::Kind::One: out += '1'; break;
    case Term::Kind::Gen: out += 'x' + std::to_string(t.label()); break;
    case Term::Kind::Not:
      out += "(not ";
      print(t.lhs(), out);
      out += ')';
      break;
    case Term::Kind::And:
    case Term::Kind::Or:
      out += t.kind() == Term::Kind::And ? "(and " : "(or ";
      print(t.lhs(), out);
      out += ' ';
      print(t.rhs(), out);
      out += ')';
      break;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Term parse_all() {
    Term t = parse_term();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("term parse error at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view word() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')')
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Term parse_term() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] == '(') {
      ++pos_;
      std::string_view op = word();
      std::vector<Term> args;
      for (;;) {
        skip_space();
        if (pos_ >= text_.size()) fail("missing ')'");
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        args.push_back(parse_term());
      }
      if (op == "not") {
        if (args.size() != 1) fail("not takes one operand");
        return ~args[0];
      }
      if (op == "minus") {
        if (args.size() != 2) fail("minus takes two operands");
        return args[0] - args[1];
      }
      if (op == "and" || op == "or") {
        if (args.size() < 2) fail(std::string(op) + " takes at least two operands");
        Term acc = args[0];
        for (std::size_t i = 1; i < args.size(); ++i) acc = op == "and" ? (acc & args[i]) : (acc | args[i]);
        return acc;
      }
      fail("unknown operator '" + std::string(op) + "'");
    }
    std::string_view w = word();
    if (w == "0") return Term::zero();
    if (w == "1") return Term::one();
    if (w.size() >= 2 && w[0] == 'x') {
      Label label = 0;
      auto [ptr, ec] = std::from_chars(w.data() + 1, w.data() + w.size(), label);
      if (ec == std::errc() && ptr == w.data() + w.size()) return Term::gen(label);
    }
    fail("bad atom '" + std::string(w) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Label> Term::labels() const {
  std::vector<Label> out;
  collect_labels(*this, out);
  return make_label_set(std::move(out));
}

std::size_t Term::node_count() const { return count_nodes(*this); }

Term Term::substitute(const std::function<Label(Label)>& rename) const {
  switch (kind()) {
    case Kind::Zero:
    case Kind::One: return *this;
    case Kind::Gen: return gen(rename(label()));
    case Kind::Not: return ~lhs().substitute(rename);
    case Kind::And: return lhs().substitute(rename) & rhs().substitute(rename);
    case Kind::Or: return lhs().substitute(rename) | rhs().substitute(rename);
  }
  return *this;
}

std::string Term::to_string() const {
  std::string out;
  print(*this, out);
  return out;
}

Term Term::parse(std::string_view text) { return Parser(text).parse_all(); }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Zero:
    case Term::Kind::One: return true;
    case Term::Kind::Gen: return a.label() == b.label();
    case Term::Kind::Not: return a.lhs() == b.lhs();
    default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

Term conjunction(const std::vector<Term>& terms) {
  if (terms.empty()) return Term::one();
  Term acc = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) acc = acc & terms[i];
  return acc;
}

Term disjunction(const std::vector<Term>& terms) {
  if (terms.empty()) return Term::zero();
  Term acc = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) acc = acc | terms[i];
  return acc;
}

bool eval_hom(const Term& t, const Assignment& f) {
  // Reject stray labels up front so the error does not depend on evaluation order.
  for (Label l : t.labels())
    if (!f.find(l)) throw DomainError("generator x" + std::to_string(l) + " outside assignment domain");
  std::function<bool(const Term&)> go = [&](const Term& s) -> bool {
    switch (s.kind()) {
      case Term::Kind::Zero: return false;
      case Term::Kind::One: return true;
      case Term::Kind::Gen: return f.at(s.label());
      case Term::Kind::Not: return !go(s.lhs());
      case Term::Kind::And: return go(s.lhs()) && go(s.rhs());
      case Term::Kind::Or: return go(s.lhs()) || go(s.rhs());
    }
    return false;
  };
  return go(t);
}

CompiledTerm::CompiledTerm(const Term& t, std::span<const Label> w) {
  std::function<void(const Term&)> emit = [&](const Term& s) {
    switch (s.kind()) {
      case Term::Kind::Gen: {
        auto pos = position_of(w, s.label());
        if (!pos) throw DomainError("generator x" + std::to_string(s.label()) + " outside w");
        program_.push_back({Term::Kind::Gen, static_cast<std::uint8_t>(*pos)});
        return;
      }
      case Term::Kind::Not: emit(s.lhs()); break;
      case Term::Kind::And:
      case Term::Kind::Or:
        emit(s.lhs());
        emit(s.rhs());
        break;
      default: break;
    }
    program_.push_back({s.kind(), 0});
  };
  emit(t);
  std::size_t depth = 0;
  std::size_t max_depth = 0;
  for (const Op& op : program_) {
    if (op.kind == Term::Kind::And || op.kind == Term::Kind::Or) --depth;
    else if (op.kind != Term::Kind::Not) ++depth;
    max_depth = std::max(max_depth, depth);
  }
  if (max_depth > kMaxStack) throw CapacityError("term too deeply nested to compile");
}

bool CompiledTerm::eval(Row f) const {
  std::array<bool, kMaxStack> stack;
  std::size_t top = 0;
  for (const Op& op : program_) {
    switch (op.kind) {
      case Term::Kind::Zero: stack[top++] = false; break;
      case Term::Kind::One: stack[top++] = true; break;
      case Term::Kind::Gen: stack[top++] = ((f >> op.position) & 1U) != 0; break;
      case Term::Kind::Not: stack[top - 1] = !stack[top - 1]; break;
      case Term::Kind::And:
        --top;
        stack[top - 1] = stack[top - 1] && stack[top];
        break;
      case Term::Kind::Or:
        --top;
        stack[top - 1] = stack[top - 1] || stack[top];
        break;
    }
  }
  return stack[0];
}

}  // namespace monkbench
