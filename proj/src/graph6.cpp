#include "remo/graph6.hpp"

#include <stdexcept>

namespace remo {

namespace {
constexpr std::string_view kHeader = ">>graph6<<";
}

std::string encode_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int nbits = n * (n - 1) / 2;
    int acc = 0, filled = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    if (nbits % 6 != 0) out.push_back(static_cast<char>((acc << (6 - nbits % 6)) + 63));
    return out;
}

Graph decode_graph6(std::string_view record) {
    if (record.substr(0, kHeader.size()) == kHeader) record.remove_prefix(kHeader.size());
    if (record.empty()) throw std::runtime_error("graph6: empty record");
    for (char c : record)
        if (c < 63 || c > 126)
            throw std::runtime_error("graph6: byte out of range");
    int n = record[0] - 63;
    if (n == 63) throw std::runtime_error("graph6: long-form orders are not supported");
    if (n < 1 || n > kMaxOrder)
        throw std::runtime_error("graph6: order " + std::to_string(n) + " out of range [1,62]");
    int nbits = n * (n - 1) / 2;
    size_t expect = 1 + (nbits + 5) / 6;
    if (record.size() != expect)
        throw std::runtime_error("graph6: record for order " + std::to_string(n) + " must be " +
                                 std::to_string(expect) + " bytes, got " + std::to_string(record.size()));
    Graph g(n);
    int bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit) {
            int group = record[1 + bit / 6] - 63;
            if ((group >> (5 - bit % 6)) & 1) g.add_edge(u, v);
        }
    if (nbits % 6 != 0) {
        int last = record.back() - 63;
        if (last & ((1 << (6 - nbits % 6)) - 1))
            throw std::runtime_error("graph6: nonzero padding bits");
    }
    return g;
}

}  // namespace remo
