#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dwalk/graph.hpp"

namespace dwalk {

enum class Family {
  Complete,               // complete:N
  Cycle,                  // cycle:m
  Path,                   // path:m
  CompleteBipartite,      // complete_bipartite:p,q
  Petersen,               // petersen
  Hamming,                // hamming:d,q
  Johnson,                // johnson:n,k
  CartesianCycleSquare,   // cartesian_cycle_square:m
  UnfoldedComplete,       // unfolded_complete:N
};

struct FamilySpec {
  Family family;
  std::vector<long> params;
};

/// Parses "name" or "name:p1,p2,...". Throws InvalidFamilyParameters.
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);

Graph generate(const FamilySpec& spec);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t m);
Graph path_graph(std::size_t m);
Graph complete_bipartite_graph(std::size_t p, std::size_t q);
Graph petersen_graph();
Graph hamming_graph(std::size_t d, std::size_t q);
Graph johnson_graph(std::size_t n, std::size_t k);

}  // namespace dwalk
