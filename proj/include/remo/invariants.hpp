#pragma once

#include <vector>

#include "remo/graph.hpp"
#include "remo/rational.hpp"

namespace remo {

bool is_connected(const Graph& g);

// BFS distances from `source`. Throws if any vertex is unreachable;
// distance queries on disconnected graphs are a caller bug, not infinity.
std::vector<int> distances_from(const Graph& g, int source);

long long transmission(const Graph& g, int v);

// transmission / (n - 1); undefined for order 1.
Rational avg_distance(const Graph& g, int v);

struct RemotenessResult {
    Rational value;
    std::vector<int> maximizers;  // every vertex attaining the max, ascending
};

RemotenessResult remoteness(const Graph& g);

struct DistanceProfile {
    int source;
    std::vector<int> layer_counts;  // layer_counts[d] = #vertices at distance d; [0] == 1
};

DistanceProfile distance_layers(const Graph& g, int source);

int eccentricity(const Graph& g, int v);
int diameter(const Graph& g);

}  // namespace remo
