#include "remo/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "remo/graph6.hpp"

namespace remo {

namespace {

// Stable vertex coloring: start from degrees, then repeatedly split classes
// by the multiset of neighbor colors until no class splits. The class order
// is derived from the signatures, so it is invariant under relabeling.
std::vector<int> refine_colors(const Graph& g) {
    int n = g.order();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.push_back(color[v]);
            for (std::uint64_t f = g.neighbors(v); f; f &= f - 1)
                s.push_back(color[std::countr_zero(f)]);
            std::sort(s.begin() + 1, s.end());
            sig[v] = {std::move(s), v};
        }
        std::map<std::vector<int>, int> ids;
        for (const auto& [s, v] : sig) ids.emplace(s, 0);
        int next = 0;
        for (auto& [s, id] : ids) id = next++;
        bool changed = false;
        for (const auto& [s, v] : sig) {
            int c = ids.at(s);
            if (c != color[v]) changed = true;
            color[v] = c;
        }
        if (!changed) return color;
    }
}

// Upper-triangle bits in graph6 column order, packed big-endian into one
// word; 45 bits suffice for order 10.
struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<std::vector<int>> position_pool;  // candidates per position
    std::vector<int> assigned;                    // canonical position -> vertex
    std::vector<bool> used;
    std::uint64_t best = ~0ull;
    std::uint64_t cur = 0;
    bool have_best = false;

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()) {}

    void run() {
        std::vector<int> color = refine_colors(g);
        // Positions are blocked by ascending color; all vertices of a color
        // compete for that block's positions.
        std::vector<int> order(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return color[a] < color[b]; });
        position_pool.assign(n, {});
        for (int pos = 0; pos < n; ++pos) {
            int c = color[order[pos]];
            for (int v = 0; v < n; ++v)
                if (color[v] == c) position_pool[pos].push_back(v);
        }
        assigned.assign(n, -1);
        used.assign(n, false);
        dfs(0, 0);
    }

    void dfs(int pos, int bits_filled) {
        if (pos == n) {
            if (!have_best || cur < best) {
                best = cur;
                have_best = true;
            }
            return;
        }
        for (int v : position_pool[pos]) {
            if (used[v]) continue;
            std::uint64_t saved = cur;
            int b = bits_filled;
            for (int j = 0; j < pos; ++j, ++b)
                if (g.adjacent(assigned[j], v)) cur |= 1ull << (63 - b);
            // Unfilled bits are zero in cur, so cur can only grow within the
            // subtree; a prefix already above best cannot recover.
            if (!have_best || cur <= best) {
                used[v] = true;
                assigned[pos] = v;
                dfs(pos + 1, b);
                assigned[pos] = -1;
                used[v] = false;
            }
            cur = saved;
        }
    }
};

}  // namespace

std::string canonical_form(const Graph& g) {
    int n = g.order();
    if (n > kMaxCanonicalOrder) throw std::invalid_argument("canonical_form: order above cap");
    if (n == 1) return encode_graph6(g);
    CanonSearch search(g);
    search.run();
    Graph canon(n);
    int bit = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++bit)
            if (search.best & (1ull << (63 - bit))) canon.add_edge(row, col);
    return encode_graph6(canon);
}

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    int n = g.order();
    std::vector<int> dg(n), dh(n);
    for (int v = 0; v < n; ++v) {
        dg[v] = g.degree(v);
        dh[v] = h.degree(v);
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    return canonical_form(g) == canonical_form(h);
}

}  // namespace remo
