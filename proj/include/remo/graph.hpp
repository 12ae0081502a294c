#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace remo {

// One adjacency row per vertex fits a single machine word at this cap.
inline constexpr int kMaxOrder = 62;

// Simple undirected graph on vertices 0..n-1, no loops, no multi-edges.
// Invariants: 1 <= n <= kMaxOrder, adjacency is symmetric, diagonal clear.
class Graph {
public:
    explicit Graph(int n);

    int order() const { return n_; }
    int size() const;

    bool adjacent(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    std::uint64_t neighbors(int v) const;
    int degree(int v) const;
    std::uint64_t vertex_mask() const { return n_ == 64 ? ~0ull : (1ull << n_) - 1; }

    bool operator==(const Graph& other) const;
    bool operator!=(const Graph& other) const { return !(*this == other); }

    static Graph path(int n);
    static Graph cycle(int n);  // needs n >= 3
    static Graph complete(int n);

private:
    int n_;
    std::array<std::uint64_t, kMaxOrder> adj_{};
    void check_vertex(int v, const char* what) const;
};

enum class BlockKind { Complete, Empty };

struct Block {
    BlockKind kind;
    int size;  // >= 1
};

// Sequential sum: consecutive blocks are fully joined, vertices numbered
// left to right.
using BlockSequence = std::vector<Block>;

Graph from_block_sequence(const BlockSequence& blocks);

// "C1,C2,E3" <-> {K1, K2, empty block of 3}.
BlockSequence parse_blocks(std::string_view text);
std::string blocks_str(const BlockSequence& blocks);

Graph complement(const Graph& g);

// Edge bits in the order (0,1),(0,2),(1,2),(0,3),... (column-major upper
// triangle, the graph6 bit order). Needs C(n,2) <= 64, i.e. n <= 11.
Graph from_edge_mask(int n, std::uint64_t mask);
std::uint64_t to_edge_mask(const Graph& g);

}  // namespace remo
