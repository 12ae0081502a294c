#pragma once

#include <string>
#include <string_view>

#include "remo/graph.hpp"

namespace remo {

// Short-form graph6 record for 1 <= n <= 62: one length byte (n + 63), then
// the upper-triangle bits (0,1),(0,2),(1,2),(0,3),... packed big-endian into
// 6-bit groups, zero-padded, each group offset by 63.
std::string encode_graph6(const Graph& g);

// Accepts an optional leading ">>graph6<<" marker. Rejects records with a bad
// length, bytes outside [63,126], orders outside [1,62], or nonzero padding.
Graph decode_graph6(std::string_view record);

}  // namespace remo
