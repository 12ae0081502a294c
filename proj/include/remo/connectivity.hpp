#pragma once

#include "remo/graph.hpp"

namespace remo {

// Whitney chain: vertex_connectivity <= edge_connectivity <= min_degree.
struct ConnectivityFacts {
    int vertex_connectivity;
    int edge_connectivity;
    int min_degree;
    bool triangle_free;
};

int min_degree(const Graph& g);

// kappa(K_n) = n - 1; otherwise the minimum over non-adjacent pairs (s,t) of
// the number of internally vertex-disjoint s-t paths (vertex-split max-flow).
int vertex_connectivity(const Graph& g);

// Minimum over t != 0 of the number of edge-disjoint 0-t paths. 0 for K_1
// and for disconnected graphs.
int edge_connectivity(const Graph& g);

bool is_kappa_connected(const Graph& g, int k);
bool is_lambda_edge_connected(const Graph& g, int l);

bool is_triangle_free(const Graph& g);

ConnectivityFacts connectivity_facts(const Graph& g);

}  // namespace remo
