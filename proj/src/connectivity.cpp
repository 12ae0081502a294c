#include "remo/connectivity.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <vector>

namespace remo {

namespace {

// Dense unit-style max-flow, BFS augmenting paths. Node count is at most
// 2 * kMaxOrder (vertex-split nets), so everything lives in flat arrays.
class DenseFlow {
public:
    explicit DenseFlow(int nodes) : nodes_(nodes), cap_(nodes * nodes, 0) {}

    void set_cap(int u, int v, int c) { cap_[u * nodes_ + v] = c; }

    // Augments until `limit` is reached or no path remains. Values above
    // `limit` are truncated; callers only fold the result into a running min.
    int max_flow(int s, int t, int limit) {
        int flow = 0;
        std::array<int, 2 * kMaxOrder> parent{};
        std::array<int, 2 * kMaxOrder> queue{};
        while (flow < limit) {
            std::memset(parent.data(), -1, sizeof(int) * nodes_);
            parent[s] = s;
            int head = 0, tail = 0;
            queue[tail++] = s;
            while (head < tail && parent[t] < 0) {
                int u = queue[head++];
                const int* row = cap_.data() + u * nodes_;
                for (int v = 0; v < nodes_; ++v)
                    if (row[v] > 0 && parent[v] < 0) {
                        parent[v] = u;
                        queue[tail++] = v;
                    }
            }
            if (parent[t] < 0) break;
            int bottleneck = limit;
            for (int v = t; v != s; v = parent[v]) {
                int c = cap_[parent[v] * nodes_ + v];
                bottleneck = c < bottleneck ? c : bottleneck;
            }
            for (int v = t; v != s; v = parent[v]) {
                cap_[parent[v] * nodes_ + v] -= bottleneck;
                cap_[v * nodes_ + parent[v]] += bottleneck;
            }
            flow += bottleneck;
        }
        return flow;
    }

private:
    int nodes_;
    std::vector<int> cap_;
};

int edge_flow(const Graph& g, int s, int t, int limit) {
    int n = g.order();
    DenseFlow net(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && g.adjacent(u, v)) net.set_cap(u, v, 1);
    return net.max_flow(s, t, limit);
}

// Internally vertex-disjoint s-t paths for non-adjacent s, t: split each
// vertex into in/out with capacity 1, edges get unbounded arcs both ways.
int vertex_flow(const Graph& g, int s, int t, int limit) {
    int n = g.order();
    DenseFlow net(2 * n);
    for (int v = 0; v < n; ++v) net.set_cap(v, v + n, 1);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && g.adjacent(u, v)) net.set_cap(u + n, v, n);
    return net.max_flow(s + n, t, limit);
}

bool is_complete(const Graph& g) {
    return g.size() == g.order() * (g.order() - 1) / 2;
}

}  // namespace

int min_degree(const Graph& g) {
    int d = g.order();
    for (int v = 0; v < g.order(); ++v) {
        int dv = g.degree(v);
        d = dv < d ? dv : d;
    }
    return d;
}

int vertex_connectivity(const Graph& g) {
    int n = g.order();
    if (is_complete(g)) return n - 1;
    int best = n - 2;
    for (int s = 0; s < n && best > 0; ++s)
        for (int t = s + 1; t < n && best > 0; ++t) {
            if (g.adjacent(s, t)) continue;
            int f = vertex_flow(g, s, t, best);
            best = f < best ? f : best;
        }
    return best;
}

int edge_connectivity(const Graph& g) {
    int n = g.order();
    if (n == 1) return 0;
    int best = g.degree(0);
    for (int t = 1; t < n && best > 0; ++t) {
        int f = edge_flow(g, 0, t, best);
        best = f < best ? f : best;
    }
    return best;
}

bool is_kappa_connected(const Graph& g, int k) {
    int n = g.order();
    if (k <= 0) return true;
    if (is_complete(g)) return n - 1 >= k;
    if (min_degree(g) < k) return false;  // kappa <= delta
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            if (g.adjacent(s, t)) continue;
            if (vertex_flow(g, s, t, k) < k) return false;
        }
    return true;
}

bool is_lambda_edge_connected(const Graph& g, int l) {
    int n = g.order();
    if (l <= 0) return true;
    if (n == 1) return false;
    if (min_degree(g) < l) return false;  // lambda <= delta
    for (int t = 1; t < n; ++t)
        if (edge_flow(g, 0, t, l) < l) return false;
    return true;
}

bool is_triangle_free(const Graph& g) {
    int n = g.order();
    for (int u = 0; u < n; ++u) {
        std::uint64_t nu = g.neighbors(u);
        for (std::uint64_t f = nu >> (u + 1); f; f &= f - 1) {
            int v = u + 1 + std::countr_zero(f);
            if (nu & g.neighbors(v)) return false;
        }
    }
    return true;
}

ConnectivityFacts connectivity_facts(const Graph& g) {
    return {vertex_connectivity(g), edge_connectivity(g), min_degree(g), is_triangle_free(g)};
}

}  // namespace remo
