#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coverlab/fiber.hpp"
#include "coverlab/grading.hpp"
#include "coverlab/graph.hpp"
#include "json.hpp"

namespace coverlab {

struct AnalysisOptions {
  std::size_t max_toric_degree = 4;
  unsigned powers = 3;
};

struct AnalysisReport {
  // graph summary
  std::size_t order = 0;
  std::size_t edge_count = 0;
  std::size_t independence_number = 0;
  std::size_t reduced_order = 0;
  std::size_t equivalent_pairs = 0;

  std::vector<std::string> generators;
  bool equigenerated = false;
  std::optional<WeightWitness> witness;

  // present only when a witness exists
  std::optional<FiberReport> fiber;
  std::vector<PowerCheck> powers;
  std::optional<ToricProfile> toric;
  std::vector<std::string> toric_relations;  // "T2*T5 - T3*T4", 1-based generator indices

  std::vector<TheoremCheck> theorems;

  bool all_theorems_hold() const;
};

AnalysisReport analyze(const Graph& g, const AnalysisOptions& opts = {});

nlohmann::ordered_json to_json(const AnalysisReport& r);
std::string to_text(const AnalysisReport& r);

}  // namespace coverlab
