#pragma once

#include <string>
#include <vector>

#include "resurgence/graph.hpp"

namespace resurgence {

/// Catalog of named graphs: C<n>, K<n>, K<a>_<b>..., P<n> (paths), petersen,
/// bowtie, two-triangles-d2, three-triangles-d2, triangle-c4-edge,
/// cactus-c5-c4, join-k1c-c4, join-k2c-c4.
Graph builtin_graph(const std::string& name);

std::vector<std::string> builtin_graph_names();

}  // namespace resurgence
