#pragma once

#include <optional>
#include <string>

#include "remo/rational.hpp"

namespace remo {

enum class BoundId { Order, Size, Kappa, LambdaOrder, LambdaSize, TriangleFree, PkDirect };

std::string bound_id_str(BoundId id);

struct BoundReport {
    BoundId id;
    int n = 0;
    int m = -1;      // -1 when the bound does not involve a size
    int kappa = 0;   // 0 when unused
    int lambda = 0;  // 0 when unused
    bool applicable = true;
    std::optional<Rational> value;  // present iff applicable
    std::string note;
};

// n/2; attained exactly by paths.
Rational bound_order(int n);

// (n+2)/2 - m/(n-1) over connected (n,m)-graphs.
BoundReport bound_size(int n, int m);

// Least value >= m congruent to C(n-1,2) modulo kappa.
long long m_star(int n, int m, int kappa);

// n/(2k) + 2 - 1/k - (k-1)/(n-1) - m*/(k(n-1)); applicable only when the
// kappa-pc family window contains m.
BoundReport bound_kappa(int n, int m, int kappa);

// Order-only bound for lambda-edge-connected graphs, split on the residue of n.
Rational bound_lambda_order(int n, int lambda);

// Size-aware refinement; below the size threshold it falls back to the
// order-only value.
BoundReport bound_lambda_size(int n, int m, int lambda);

// n/2 + 2 - 2m/(n-1) over connected triangle-free graphs.
Rational bound_triangle_free(int n, int m);

// rho(pk_lambda(n,m,lambda)) minus the linear base n/3 - 2m/(3(n-1)) for
// lambda=2, n/4 - m/(2(n-1)) for lambda=3. Defined for m between the family
// minimum and C(n,2)-1.
Rational epsilon_exact(int n, int m, int lambda);

// Closed forms for the epsilon of lambda=2 members. For F2 two candidate
// expressions circulate; only _b agrees with direct evaluation (the
// epsilon-window sweep records both).
Rational epsilon_f1_closed(int n, int k, int b);
Rational epsilon_f2_closed_a(int n, int k, int b);
Rational epsilon_f2_closed_b(int n, int k, int b);

}  // namespace remo
