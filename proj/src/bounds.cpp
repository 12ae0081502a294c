#include "remo/bounds.hpp"

#include <stdexcept>

#include "remo/families.hpp"
#include "remo/invariants.hpp"

namespace remo {

namespace {

void check_order(int n) {
    if (n < 2) throw std::invalid_argument("bound needs order >= 2");
}

void check_lambda(int lambda) {
    if (lambda != 2 && lambda != 3) throw std::invalid_argument("lambda must be 2 or 3");
}

}  // namespace

std::string bound_id_str(BoundId id) {
    switch (id) {
        case BoundId::Order: return "ORDER";
        case BoundId::Size: return "SIZE";
        case BoundId::Kappa: return "KAPPA";
        case BoundId::LambdaOrder: return "LAMBDA_ORDER";
        case BoundId::LambdaSize: return "LAMBDA_SIZE";
        case BoundId::TriangleFree: return "TRIANGLE_FREE";
        case BoundId::PkDirect: return "PK_DIRECT";
    }
    return "?";
}

Rational bound_order(int n) {
    check_order(n);
    return Rational(n, 2);
}

BoundReport bound_size(int n, int m) {
    check_order(n);
    if (m < 0 || m > n * (n - 1) / 2) throw std::invalid_argument("size out of range");
    BoundReport r{BoundId::Size, n, m, 0, 0, true, std::nullopt, ""};
    r.value = Rational(n + 2, 2) - Rational(m, n - 1);
    return r;
}

long long m_star(int n, int m, int kappa) {
    check_order(n);
    if (kappa < 1) throw std::invalid_argument("kappa must be >= 1");
    int target = ((n - 1) * (n - 2) / 2) % kappa;
    int rem = ((m % kappa) + kappa) % kappa;
    return m + (target - rem + kappa) % kappa;
}

BoundReport bound_kappa(int n, int m, int kappa) {
    check_order(n);
    if (kappa < 1) throw std::invalid_argument("kappa must be >= 1");
    if (m < 0) throw std::invalid_argument("size must be >= 0");
    BoundReport r{BoundId::Kappa, n, m, kappa, 0, true, std::nullopt, ""};
    if (n < 2 * kappa + 2) {
        r.applicable = false;
        r.note = "no kappa-pc graphs of order " + std::to_string(n) +
                 " for kappa=" + std::to_string(kappa);
        return r;
    }
    KappaPcSizeRange range = kappa_pc_size_range(n, kappa);
    if (m < range.min_size || m > range.max_size) {
        r.applicable = false;
        r.note = "m outside the family size window [" + std::to_string(range.min_size) + "," +
                 std::to_string(range.max_size) + "]";
        return r;
    }
    long long ms = m_star(n, m, kappa);
    r.value = Rational(n, 2 * kappa) + Rational(2) - Rational(1, kappa) -
              Rational(kappa - 1, n - 1) - Rational(ms, static_cast<long long>(kappa) * (n - 1));
    return r;
}

Rational bound_lambda_order(int n, int lambda) {
    check_order(n);
    check_lambda(lambda);
    if (lambda == 2) {
        if (n % 3 == 2) return Rational(n, 3) - Rational(2, 3LL * (n - 1));
        return Rational(n, 3);
    }
    switch (n % 4) {
        case 2: return Rational(n, 4) - Rational(1, 2LL * (n - 1));
        case 3: return Rational(n, 4) - Rational(3, 2LL * (n - 1));
        default: return Rational(n, 4);
    }
}

BoundReport bound_lambda_size(int n, int m, int lambda) {
    check_order(n);
    check_lambda(lambda);
    if (m < 0 || m > n * (n - 1) / 2) throw std::invalid_argument("size out of range");
    BoundReport r{BoundId::LambdaSize, n, m, 0, lambda, true, std::nullopt, ""};
    if (lambda == 2) {
        int threshold = (5 * n + 2) / 3 - 2;  // ceil(5n/3) - 2
        if (m < threshold) {
            r.value = Rational(n, 3);
            r.note = "below size threshold " + std::to_string(threshold);
        } else {
            r.value = Rational(n, 3) - Rational(2 * m, 3LL * (n - 1)) + Rational(5, 3);
        }
    } else {
        int threshold = (9 * n + 3) / 4 - 2;  // ceil(9n/4) - 2
        if (m < threshold) {
            r.value = Rational(n, 4);
            r.note = "below size threshold " + std::to_string(threshold);
        } else {
            r.value = Rational(n, 4) - Rational(m, 2LL * (n - 1)) + Rational(3, 2);
        }
    }
    return r;
}

Rational bound_triangle_free(int n, int m) {
    check_order(n);
    if (m < 0 || m > n * (n - 1) / 2) throw std::invalid_argument("size out of range");
    return Rational(n, 2) + Rational(2) - Rational(2 * m, n - 1);
}

Rational epsilon_exact(int n, int m, int lambda) {
    check_lambda(lambda);
    LambdaPcFamily fam = enumerate_lambda_pc(n, lambda);
    if (m < fam.members.front().size || m > fam.members.back().size)
        throw std::invalid_argument("epsilon is defined for m in [" +
                                    std::to_string(fam.members.front().size) + "," +
                                    std::to_string(fam.members.back().size) + "], got " +
                                    std::to_string(m));
    Rational rho = remoteness(pk_lambda(n, m, lambda)).value;
    Rational base = lambda == 2 ? Rational(n, 3) - Rational(2 * m, 3LL * (n - 1))
                                : Rational(n, 4) - Rational(m, 2LL * (n - 1));
    return rho - base;
}

Rational epsilon_f1_closed(int n, int k, int b) {
    return Rational(4, 3) - Rational(2 * k + b, 3LL * (n - 1));
}

Rational epsilon_f2_closed_a(int n, int k, int b) {
    return Rational(5, 3) - Rational(9 * k + b + 2, 3LL * (n - 1));
}

Rational epsilon_f2_closed_b(int n, int k, int b) {
    return Rational(1) + Rational(k + b, 3LL * (n - 1));
}

}  // namespace remo
