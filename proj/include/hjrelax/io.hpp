#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hjrelax/corpus.hpp"
#include "hjrelax/godunov.hpp"
#include "hjrelax/guerand.hpp"
#include "hjrelax/solver.hpp"

namespace hjrelax {

struct U0Spec {
  enum class Kind { Linear, Constant, Nodes };
  Kind kind = Kind::Linear;
  Rational gradient{0};          // Linear: u0(x) = gradient * x
  Rational value{0};             // Constant
  std::vector<double> nodes;     // Nodes: raw nodal values

  std::vector<double> materialize(const GridConfig& cfg) const;
};

struct SolverBlock {
  GridConfig cfg;
  U0Spec u0;
};

struct ProblemSpec {
  std::optional<PLFunction> hamiltonian;
  std::optional<BoundarySpec> boundary;
  std::optional<SolverBlock> solver;
  std::optional<std::uint64_t> seed;
};

/// Parses the JSON problem document. Rationals are accepted as integers,
/// decimal/scientific literals (converted exactly from their source text), or
/// "n/d" strings. Throws ParseError on malformed input and ValidationError
/// when a module precondition fails (e.g. non-coercive Hamiltonian).
ProblemSpec parse_spec(const std::string& text);

/// JSON parse that keeps non-integer number literals as their raw strings so
/// decimal values survive exactly.
nlohmann::json parse_json_exact(const std::string& text);

Rational rational_from_json(const nlohmann::json& j);
PLFunction pl_from_json(const nlohmann::json& j);
nlohmann::json pl_to_json(const PLFunction& f);

std::string function_csv(const PLFunction& f);
std::string solution_csv(const GridSolution& sol);
std::string refine_csv(const std::vector<Rational>& dxs, const std::vector<double>& diffs);
std::string charpoints_csv(const std::vector<CharPoint>& pts);
std::string limiters_csv(const std::vector<LimiterPoint>& pts);
std::string germ_csv(const Germ& g);
std::string corpus_report_json(const CorpusReport& report);

/// SVG overlay: H solid, F0 dashed, relaxed condition highlighted.
std::string plot_svg(const PLFunction& H, const PLFunction* F0, const PLFunction* relaxed);

/// Writes via a temporary file and rename; throws IoError on failure.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace hjrelax
