#pragma once

#include <string>
#include <vector>

#include "remo/graph.hpp"

namespace remo {

// K_1 + [K_kappa]^ell + K_a + K_b with ell >= 1, a >= kappa, b >= 1.
// Realized order is 1 + ell*kappa + a + b.
struct KappaPcParams {
    int kappa, ell, a, b;
};

BlockSequence kappa_pc_blocks(const KappaPcParams& p);
Graph kappa_pc_graph(const KappaPcParams& p);
std::string kappa_pc_str(const KappaPcParams& p);

struct KappaPcMember {
    KappaPcParams params;
    int size;  // edge count of the realized graph
};

struct KappaPcFamily {
    std::vector<KappaPcMember> members;  // ascending size, ties by (ell, b)
    bool size_collision = false;         // two members share a size (expected never)
};

KappaPcFamily enumerate_kappa_pc(int n, int kappa);

struct KappaPcSelection {
    KappaPcMember member;
    bool size_tie = false;
};

// Member of minimum size >= m.
KappaPcSelection pk_kappa_member(int n, int m, int kappa);
Graph pk_kappa(int n, int m, int kappa);

struct KappaPcSizeRange {
    int min_size;
    int max_size;  // C(n-1, 2)
    int residue;   // every member size is congruent to this mod kappa
};

// Closed-form range; the enumeration is the cross-check, not the source.
KappaPcSizeRange kappa_pc_size_range(int n, int kappa);

// Three shapes of lambda-edge-connected path-complete graphs:
//   F1: [K1+K_l]^k + K_a + K_b       k >= 1, a,b >= 1, ab >= l
//   F2: [K1+K_l]^k + K1 + K_a + K_b  k >= 0, a >= l, b >= 1
//   F3: [K1+K3]^k + K2 + K_a + K1    l == 3, k >= 1, a >= 3 (b fixed at 1)
enum class LambdaFamily { F1 = 1, F2 = 2, F3 = 3 };

struct LambdaPcParams {
    LambdaFamily family;
    int lambda, k, a, b;
};

BlockSequence lambda_pc_blocks(const LambdaPcParams& p);
Graph lambda_pc_graph(const LambdaPcParams& p);
std::string lambda_pc_str(const LambdaPcParams& p);

struct LambdaPcMember {
    LambdaPcParams params;
    int size;
};

struct LambdaPcFamily {
    std::vector<LambdaPcMember> members;  // ascending size, ties by (k, family, b)
    bool size_collision = false;
};

LambdaPcFamily enumerate_lambda_pc(int n, int lambda);

struct LambdaPcSelection {
    LambdaPcMember member;
    bool size_tie = false;
};

LambdaPcSelection pk_lambda_member(int n, int m, int lambda);
Graph pk_lambda(int n, int m, int lambda);

// Closed-form minimum family size, split on the residue of n. The maximum is
// always C(n,2) - 1 (F2 with k = 0, b = 1). Enumeration is the cross-check.
int lambda_pc_min_size_formula(int n, int lambda);

// Bipartite path-complete graph [K1]^(n-t+1) + E_a + E_b + E_c where t is the
// least integer with m - n <= floor(t^2/4) - t - 1, f = floor(t^2/4) - t - (m-n),
// a = floor(t/2) - f, b = ceil(t/2) - 1, c = f.
struct BpkParams {
    int n, m, t, f, a, b, c;
};

BpkParams bpk_params(int n, int m);  // reports the violated inequality on failure
BlockSequence bpk_blocks(const BpkParams& p);
Graph bpk(int n, int m);

}  // namespace remo
