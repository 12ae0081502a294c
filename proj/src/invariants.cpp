#include "remo/invariants.hpp"

#include <bit>
#include <stdexcept>

namespace remo {

namespace {

// Bit-parallel BFS; returns the visited mask and fills dist for reached vertices.
std::uint64_t bfs(const Graph& g, int source, int* dist) {
    std::uint64_t visited = 1ull << source;
    std::uint64_t frontier = visited;
    dist[source] = 0;
    int d = 0;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
        next &= ~visited;
        ++d;
        for (std::uint64_t f = next; f; f &= f - 1) dist[std::countr_zero(f)] = d;
        visited |= next;
        frontier = next;
    }
    return visited;
}

}  // namespace

bool is_connected(const Graph& g) {
    int dist[kMaxOrder];
    return bfs(g, 0, dist) == g.vertex_mask();
}

std::vector<int> distances_from(const Graph& g, int source) {
    if (source < 0 || source >= g.order())
        throw std::invalid_argument("distances_from: source out of range");
    int dist[kMaxOrder];
    if (bfs(g, source, dist) != g.vertex_mask())
        throw std::invalid_argument("distances_from: graph is disconnected");
    return std::vector<int>(dist, dist + g.order());
}

long long transmission(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("transmission: vertex out of range");
    int dist[kMaxOrder];
    if (bfs(g, v, dist) != g.vertex_mask())
        throw std::invalid_argument("transmission: graph is disconnected");
    long long sum = 0;
    for (int u = 0; u < g.order(); ++u) sum += dist[u];
    return sum;
}

Rational avg_distance(const Graph& g, int v) {
    if (g.order() < 2) throw std::invalid_argument("avg_distance needs order >= 2");
    return Rational(transmission(g, v), g.order() - 1);
}

RemotenessResult remoteness(const Graph& g) {
    int n = g.order();
    if (n < 2) throw std::invalid_argument("remoteness needs order >= 2");
    long long best = -1;
    std::vector<int> argmax;
    int dist[kMaxOrder];
    for (int v = 0; v < n; ++v) {
        if (bfs(g, v, dist) != g.vertex_mask())
            throw std::invalid_argument("remoteness: graph is disconnected");
        long long sum = 0;
        for (int u = 0; u < n; ++u) sum += dist[u];
        if (sum > best) {
            best = sum;
            argmax.assign(1, v);
        } else if (sum == best) {
            argmax.push_back(v);
        }
    }
    return {Rational(best, n - 1), std::move(argmax)};
}

DistanceProfile distance_layers(const Graph& g, int source) {
    std::vector<int> dist = distances_from(g, source);
    int ecc = 0;
    for (int d : dist) ecc = d > ecc ? d : ecc;
    DistanceProfile profile{source, std::vector<int>(ecc + 1, 0)};
    for (int d : dist) ++profile.layer_counts[d];
    return profile;
}

int eccentricity(const Graph& g, int v) {
    std::vector<int> dist = distances_from(g, v);
    int ecc = 0;
    for (int d : dist) ecc = d > ecc ? d : ecc;
    return ecc;
}

int diameter(const Graph& g) {
    int diam = 0;
    for (int v = 0; v < g.order(); ++v) {
        int e = eccentricity(g, v);
        diam = e > diam ? e : diam;
    }
    return diam;
}

}  // namespace remo
