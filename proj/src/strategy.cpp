#include "qwalk/strategy.hpp"

#include <cctype>
#include <stdexcept>

namespace qwalk::dsl {

namespace {

constexpr std::size_t kMaxCoinsPerStep = 4;
constexpr std::uint64_t kMaxRepeat = 1'000'000'000'000ull;

struct Parser {
  std::string_view src;
  std::size_t pos = 0;

  bool at_end() const { return pos >= src.size(); }
  char peek() const { return src[pos]; }

  void skip_ws() {
    while (!at_end() && (src[pos] == ' ' || src[pos] == '\t' || src[pos] == '\n' ||
                         src[pos] == '\r')) {
      ++pos;
    }
  }

  AstNode parse_step() {
    AstNode node;
    const std::size_t start = pos;
    while (!at_end() && (peek() == 'A' || peek() == 'B')) {
      if (pos - start == kMaxCoinsPerStep) {
        throw ParseError("step token longer than 4 coins", pos);
      }
      node.step.push_back(static_cast<Tag>(peek()));
      ++pos;
    }
    return node;
  }

  std::uint64_t parse_count() {
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError("expected repeat count after '^'", pos);
    }
    const std::size_t start = pos;
    std::uint64_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (value > kMaxRepeat) throw ParseError("repeat count too large", start);
      ++pos;
    }
    if (value == 0) throw ParseError("repeat count must be positive", start);
    return value;
  }

  AstNode parse_group() {
    const std::size_t open = pos;
    ++pos;  // consume '('
    AstNode node;
    node.group = true;
    node.children = parse_items(true);
    if (node.children.empty()) throw ParseError("empty group", open);
    skip_ws();
    if (at_end()) throw ParseError("unterminated group", open);
    ++pos;  // consume ')'
    skip_ws();
    if (at_end() || peek() != '^') {
      throw ParseError("expected '^' and a repeat count after ')'", pos);
    }
    ++pos;  // consume '^'
    node.repeat = parse_count();
    return node;
  }

  std::vector<AstNode> parse_items(bool inside_group) {
    std::vector<AstNode> items;
    while (true) {
      skip_ws();
      if (at_end()) {
        if (inside_group) throw ParseError("expected ')'", pos);
        break;
      }
      const char c = peek();
      if (c == ')') {
        if (!inside_group) throw ParseError("unmatched ')'", pos);
        break;
      }
      if (c == '(') {
        items.push_back(parse_group());
      } else if (c == 'A' || c == 'B') {
        items.push_back(parse_step());
      } else if (c == '^') {
        throw ParseError("repeat applies only to parenthesized groups", pos);
      } else {
        throw ParseError(std::string("invalid character '") + c + "'", pos);
      }
    }
    return items;
  }
};

void expand_into(const AstNode& node, StepProgram& out, std::size_t step_cap) {
  if (!node.group) {
    if (out.size() >= step_cap) throw std::length_error("program exceeds the step cap");
    out.push_back(node.step);
    return;
  }
  for (std::uint64_t r = 0; r < node.repeat; ++r) {
    for (const AstNode& child : node.children) expand_into(child, out, step_cap);
  }
}

}  // namespace

StrategyAst parse(std::string_view src) {
  Parser parser{src};
  StrategyAst ast;
  ast.items = parser.parse_items(false);
  if (ast.items.empty()) throw ParseError("empty program", parser.pos);
  return ast;
}

StepProgram expand(const StrategyAst& ast, std::size_t step_cap) {
  StepProgram out;
  for (const AstNode& node : ast.items) expand_into(node, out, step_cap);
  return out;
}

std::string render(const StepProgram& program) {
  std::string out;
  for (std::size_t i = 0; i < program.size(); ++i) {
    if (i > 0) out += ' ';
    for (Tag tag : program[i]) out += static_cast<char>(tag);
  }
  return out;
}

}  // namespace qwalk::dsl
