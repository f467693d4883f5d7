#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/parse_error.hpp"

namespace qwalk::dsl {

enum class Tag : char { A = 'A', B = 'B' };

// One step: the coins applied before the single shift, in application order.
// Invariant: 1 to 4 tags per step.
using Step = std::vector<Tag>;
using StepProgram = std::vector<Step>;

struct AstNode {
  bool group = false;
  Step step;                      // set when !group
  std::vector<AstNode> children;  // set when group
  std::uint64_t repeat = 1;
};

struct StrategyAst {
  std::vector<AstNode> items;
};

// Grammar:
//   program := item+
//   item    := step | '(' item+ ')' '^' count
//   step    := [AB]{1,4}
//   count   := positive decimal integer
// Tokens may be separated by whitespace. Within a step token the letters are
// listed in application order (leftmost coin acts first).
StrategyAst parse(std::string_view src);

inline constexpr std::size_t kDefaultStepCap = 1'000'000;

// Flattens repeats into the explicit per-step list.
StepProgram expand(const StrategyAst& ast, std::size_t step_cap = kDefaultStepCap);

// Canonical printer: flat space-separated step tokens. expand(parse(render(p))) == p.
std::string render(const StepProgram& program);

inline std::size_t program_length(const StepProgram& program) { return program.size(); }

}  // namespace qwalk::dsl
