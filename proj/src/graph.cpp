#include "remo/graph.hpp"

#include <bit>
#include <stdexcept>

namespace remo {

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxOrder)
        throw std::invalid_argument("graph order must be between 1 and " +
                                    std::to_string(kMaxOrder) + ", got " + std::to_string(n));
}

void Graph::check_vertex(int v, const char* what) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) +
                                    " out of range for order " + std::to_string(n_));
}

int Graph::size() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u, "adjacent");
    check_vertex(v, "adjacent");
    return (adj_[u] >> v) & 1;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u, "add_edge");
    check_vertex(v, "add_edge");
    if (u == v) throw std::invalid_argument("add_edge: loops are not allowed");
    adj_[u] |= 1ull << v;
    adj_[v] |= 1ull << u;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u, "remove_edge");
    check_vertex(v, "remove_edge");
    adj_[u] &= ~(1ull << v);
    adj_[v] &= ~(1ull << u);
}

std::uint64_t Graph::neighbors(int v) const {
    check_vertex(v, "neighbors");
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v, "degree");
    return std::popcount(adj_[v]);
}

bool Graph::operator==(const Graph& other) const {
    if (n_ != other.n_) return false;
    for (int v = 0; v < n_; ++v)
        if (adj_[v] != other.adj_[v]) return false;
    return true;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs order >= 3, got " + std::to_string(n));
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph from_block_sequence(const BlockSequence& blocks) {
    if (blocks.empty()) throw std::invalid_argument("block sequence must be non-empty");
    int total = 0;
    for (const Block& b : blocks) {
        if (b.size < 1) throw std::invalid_argument("block sizes must be >= 1");
        total += b.size;
    }
    if (total > kMaxOrder)
        throw std::invalid_argument("block sequence order " + std::to_string(total) +
                                    " exceeds cap " + std::to_string(kMaxOrder));
    Graph g(total);
    int start = 0;
    int prev_start = 0, prev_size = 0;
    for (const Block& b : blocks) {
        if (b.kind == BlockKind::Complete)
            for (int u = start; u < start + b.size; ++u)
                for (int v = u + 1; v < start + b.size; ++v) g.add_edge(u, v);
        for (int u = prev_start; u < prev_start + prev_size; ++u)
            for (int v = start; v < start + b.size; ++v) g.add_edge(u, v);
        prev_start = start;
        prev_size = b.size;
        start += b.size;
    }
    return g;
}

BlockSequence parse_blocks(std::string_view text) {
    BlockSequence blocks;
    size_t i = 0;
    while (i < text.size()) {
        char kind = text[i];
        if (kind != 'C' && kind != 'E')
            throw std::invalid_argument("block spec must start with C or E: " + std::string(text));
        ++i;
        size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == start) throw std::invalid_argument("block spec missing size: " + std::string(text));
        int sz = std::stoi(std::string(text.substr(start, i - start)));
        blocks.push_back({kind == 'C' ? BlockKind::Complete : BlockKind::Empty, sz});
        if (i < text.size()) {
            if (text[i] != ',') throw std::invalid_argument("block specs are comma-separated");
            ++i;
            if (i == text.size()) throw std::invalid_argument("trailing comma in block spec");
        }
    }
    if (blocks.empty()) throw std::invalid_argument("block sequence must be non-empty");
    return blocks;
}

std::string blocks_str(const BlockSequence& blocks) {
    std::string s;
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (i) s += ',';
        s += blocks[i].kind == BlockKind::Complete ? 'C' : 'E';
        s += std::to_string(blocks[i].size);
    }
    return s;
}

Graph complement(const Graph& g) {
    int n = g.order();
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) h.add_edge(u, v);
    return h;
}

Graph from_edge_mask(int n, std::uint64_t mask) {
    if (n > 11) throw std::invalid_argument("edge mask only covers orders up to 11");
    Graph g(n);
    int bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if ((mask >> bit) & 1) g.add_edge(u, v);
    return g;
}

std::uint64_t to_edge_mask(const Graph& g) {
    int n = g.order();
    if (n > 11) throw std::invalid_argument("edge mask only covers orders up to 11");
    std::uint64_t mask = 0;
    int bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (g.adjacent(u, v)) mask |= 1ull << bit;
    return mask;
}

}  // namespace remo
