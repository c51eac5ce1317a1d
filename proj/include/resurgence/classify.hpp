#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "resurgence/graph.hpp"

namespace resurgence {

enum class GraphKind {
  Bipartite,
  OddCycle,
  Cactus,
  CliquesumBipartiteOddCycles,
  CompleteMultipartite,
  ChiEqualsOmega,
  Unknown,
};

std::string kind_name(GraphKind k);

/// Structural data for clique-sums of bipartite graphs and odd cycles:
/// the distinct induced odd cycle half-lengths n_1 < ... < n_r and, per
/// half-length, the maximum number of induced (2n+1)-cycles pairwise at
/// distance >= 2.
struct OddCycleClassData {
  std::vector<int> half_lengths;
  std::map<int, int> k_by_half_length;
};

struct GraphClassification {
  GraphKind kind = GraphKind::Unknown;
  int chi = 0;
  int omega = 0;
  bool chi_equals_omega = false;
  bool cactus = false;
  bool in_cliquesum_class = false;

  std::optional<std::vector<int>> bipartition;
  std::optional<int> odd_cycle_length;           // when the graph is one cycle
  std::optional<int> smallest_odd_cycle_length;  // any non-bipartite graph
  std::optional<std::vector<int>> multipartite_parts;
  std::vector<std::vector<int>> atoms;           // clique separator atoms
  std::optional<OddCycleClassData> class_data;   // when in_cliquesum_class
};

/// Recognizes the dispatch-relevant graph classes.  `kind` is the most
/// specific match in the order: bipartite, odd cycle, clique-sum of
/// bipartite graphs and odd cycles, cactus, complete multipartite,
/// chi = omega.  Requires a connected graph without isolated vertices.
GraphClassification classify(const Graph& g);

/// Re-checks every certificate carried by a classification against the graph.
bool verify_classification(const Graph& g, const GraphClassification& c);

}  // namespace resurgence
