#pragma once

#include <string>

#include "remo/graph.hpp"

namespace remo {

// Canonical graph6 string: equal iff the graphs are isomorphic. Color
// refinement narrows the candidate orderings, then a class-respecting
// backtracking search minimizes the upper-triangle bit string. Cost grows
// with automorphism-rich classes, hence the order cap.
inline constexpr int kMaxCanonicalOrder = 10;

std::string canonical_form(const Graph& g);

// Order or size mismatch returns false rather than throwing.
bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace remo
