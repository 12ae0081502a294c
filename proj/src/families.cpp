#include "remo/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace remo {

namespace {

int binom2(int x) { return x * (x - 1) / 2; }

std::string pair_str(int n, int m) {
    return "(n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")";
}

}  // namespace

BlockSequence kappa_pc_blocks(const KappaPcParams& p) {
    if (p.kappa < 1 || p.ell < 1 || p.b < 1 || p.a < p.kappa)
        throw std::invalid_argument("kappa-pc parameters out of range: " + kappa_pc_str(p));
    BlockSequence blocks{{BlockKind::Complete, 1}};
    for (int i = 0; i < p.ell; ++i) blocks.push_back({BlockKind::Complete, p.kappa});
    blocks.push_back({BlockKind::Complete, p.a});
    blocks.push_back({BlockKind::Complete, p.b});
    return blocks;
}

Graph kappa_pc_graph(const KappaPcParams& p) { return from_block_sequence(kappa_pc_blocks(p)); }

std::string kappa_pc_str(const KappaPcParams& p) {
    return "kappa=" + std::to_string(p.kappa) + ",ell=" + std::to_string(p.ell) +
           ",a=" + std::to_string(p.a) + ",b=" + std::to_string(p.b);
}

KappaPcFamily enumerate_kappa_pc(int n, int kappa) {
    if (kappa < 1) throw std::invalid_argument("kappa must be >= 1");
    if (n > kMaxOrder) throw std::invalid_argument("order exceeds cap");
    KappaPcFamily fam;
    for (int ell = 1; 1 + ell * kappa + kappa + 1 <= n; ++ell)
        for (int a = kappa; 1 + ell * kappa + a + 1 <= n; ++a) {
            int b = n - 1 - ell * kappa - a;
            KappaPcParams p{kappa, ell, a, b};
            fam.members.push_back({p, kappa_pc_graph(p).size()});
        }
    if (fam.members.empty())
        throw std::invalid_argument("no kappa-pc graphs of order " + std::to_string(n) +
                                    " for kappa=" + std::to_string(kappa) +
                                    " (need n >= " + std::to_string(2 * kappa + 2) + ")");
    std::sort(fam.members.begin(), fam.members.end(),
              [](const KappaPcMember& x, const KappaPcMember& y) {
                  if (x.size != y.size) return x.size < y.size;
                  if (x.params.ell != y.params.ell) return x.params.ell < y.params.ell;
                  return x.params.b < y.params.b;
              });
    for (size_t i = 1; i < fam.members.size(); ++i)
        if (fam.members[i].size == fam.members[i - 1].size) fam.size_collision = true;
    return fam;
}

KappaPcSelection pk_kappa_member(int n, int m, int kappa) {
    KappaPcFamily fam = enumerate_kappa_pc(n, kappa);
    for (size_t i = 0; i < fam.members.size(); ++i)
        if (fam.members[i].size >= m) {
            bool tie = i + 1 < fam.members.size() && fam.members[i + 1].size == fam.members[i].size;
            return {fam.members[i], tie};
        }
    throw std::invalid_argument("no kappa-pc graph of order " + std::to_string(n) +
                                " with size >= " + std::to_string(m) + " for kappa=" +
                                std::to_string(kappa) + " (max size " +
                                std::to_string(fam.members.back().size) + ")");
}

Graph pk_kappa(int n, int m, int kappa) { return kappa_pc_graph(pk_kappa_member(n, m, kappa).member.params); }

KappaPcSizeRange kappa_pc_size_range(int n, int kappa) {
    if (kappa < 1) throw std::invalid_argument("kappa must be >= 1");
    if (n < 2 * kappa + 2)
        throw std::invalid_argument("no kappa-pc graphs of order " + std::to_string(n) +
                                    " for kappa=" + std::to_string(kappa));
    int b = (n - 2) % kappa + 1;  // b in 1..kappa, b == n-1 (mod kappa)
    int min_size = (n * (3 * kappa - 1) - 2 * kappa * kappa - kappa + 1 - b * (kappa - b)) / 2;
    int max_size = binom2(n - 1);
    return {min_size, max_size, max_size % kappa};
}

BlockSequence lambda_pc_blocks(const LambdaPcParams& p) {
    bool ok = (p.lambda == 2 || p.lambda == 3);
    switch (p.family) {
        case LambdaFamily::F1:
            ok = ok && p.k >= 1 && p.a >= 1 && p.b >= 1 && p.a * p.b >= p.lambda;
            break;
        case LambdaFamily::F2:
            ok = ok && p.k >= 0 && p.a >= p.lambda && p.b >= 1;
            break;
        case LambdaFamily::F3:
            ok = ok && p.lambda == 3 && p.k >= 1 && p.a >= 3 && p.b == 1;
            break;
    }
    if (!ok) throw std::invalid_argument("lambda-pc parameters out of range: " + lambda_pc_str(p));
    BlockSequence blocks;
    for (int i = 0; i < p.k; ++i) {
        blocks.push_back({BlockKind::Complete, 1});
        blocks.push_back({BlockKind::Complete, p.lambda});
    }
    if (p.family == LambdaFamily::F2) blocks.push_back({BlockKind::Complete, 1});
    if (p.family == LambdaFamily::F3) blocks.push_back({BlockKind::Complete, 2});
    blocks.push_back({BlockKind::Complete, p.a});
    blocks.push_back({BlockKind::Complete, p.b});
    return blocks;
}

Graph lambda_pc_graph(const LambdaPcParams& p) { return from_block_sequence(lambda_pc_blocks(p)); }

std::string lambda_pc_str(const LambdaPcParams& p) {
    return "family=F" + std::to_string(static_cast<int>(p.family)) +
           ",lambda=" + std::to_string(p.lambda) + ",k=" + std::to_string(p.k) +
           ",a=" + std::to_string(p.a) + ",b=" + std::to_string(p.b);
}

LambdaPcFamily enumerate_lambda_pc(int n, int lambda) {
    if (lambda != 2 && lambda != 3) throw std::invalid_argument("lambda must be 2 or 3");
    if (n > kMaxOrder) throw std::invalid_argument("order exceeds cap");
    LambdaPcFamily fam;
    auto add = [&fam](const LambdaPcParams& p) {
        fam.members.push_back({p, lambda_pc_graph(p).size()});
    };
    for (int k = 1; (lambda + 1) * k + 2 <= n; ++k) {
        int rest = n - (lambda + 1) * k;
        for (int a = 1; a < rest; ++a) {
            int b = rest - a;
            if (a * b >= lambda) add({LambdaFamily::F1, lambda, k, a, b});
        }
    }
    for (int k = 0; (lambda + 1) * k + 1 + lambda + 1 <= n; ++k) {
        int rest = n - (lambda + 1) * k - 1;
        for (int a = lambda; a < rest; ++a) add({LambdaFamily::F2, lambda, k, a, rest - a});
    }
    if (lambda == 3)
        for (int k = 1; 4 * k + 6 <= n; ++k) add({LambdaFamily::F3, 3, k, n - 4 * k - 3, 1});
    if (fam.members.empty())
        throw std::invalid_argument("no lambda-pc graphs of order " + std::to_string(n) +
                                    " for lambda=" + std::to_string(lambda));
    std::sort(fam.members.begin(), fam.members.end(),
              [](const LambdaPcMember& x, const LambdaPcMember& y) {
                  if (x.size != y.size) return x.size < y.size;
                  if (x.params.k != y.params.k) return x.params.k < y.params.k;
                  if (x.params.family != y.params.family) return x.params.family < y.params.family;
                  return x.params.b < y.params.b;
              });
    for (size_t i = 1; i < fam.members.size(); ++i)
        if (fam.members[i].size == fam.members[i - 1].size) fam.size_collision = true;
    return fam;
}

LambdaPcSelection pk_lambda_member(int n, int m, int lambda) {
    LambdaPcFamily fam = enumerate_lambda_pc(n, lambda);
    for (size_t i = 0; i < fam.members.size(); ++i)
        if (fam.members[i].size >= m) {
            bool tie = i + 1 < fam.members.size() && fam.members[i + 1].size == fam.members[i].size;
            return {fam.members[i], tie};
        }
    throw std::invalid_argument("no lambda-pc graph of order " + std::to_string(n) +
                                " with size >= " + std::to_string(m) + " for lambda=" +
                                std::to_string(lambda) + " (max size " +
                                std::to_string(fam.members.back().size) + ")");
}

Graph pk_lambda(int n, int m, int lambda) {
    return lambda_pc_graph(pk_lambda_member(n, m, lambda).member.params);
}

int lambda_pc_min_size_formula(int n, int lambda) {
    if (lambda == 2) {
        if (n < 4) throw std::invalid_argument("lambda=2 family needs n >= 4");
        switch (n % 3) {
            case 0: return (5 * n - 6) / 3;
            case 1: return (5 * n - 5) / 3;
            default: return (5 * n - 1) / 3;
        }
    }
    if (lambda == 3) {
        if (n < 5) throw std::invalid_argument("lambda=3 family needs n >= 5");
        switch (n % 4) {
            case 0: return (9 * n - 12) / 4;
            case 1: return (9 * n - 9) / 4;
            case 2: return (9 * n - 2) / 4;
            default: return (9 * n + 9) / 4;
        }
    }
    throw std::invalid_argument("lambda must be 2 or 3");
}

BpkParams bpk_params(int n, int m) {
    if (n < 2 || n > kMaxOrder)
        throw std::invalid_argument("bpk order out of range: " + std::to_string(n));
    if (m < n - 1 || m > n * n / 4)
        throw std::invalid_argument("bpk size must satisfy n-1 <= m <= n^2/4, got " + pair_str(n, m));
    int excess = m - n;
    int t = 1;
    while (t * t / 4 - t - 1 < excess) ++t;
    int f = t * t / 4 - t - excess;
    BpkParams p{n, m, t, f, t / 2 - f, (t + 1) / 2 - 1, f};
    if (n - t + 1 < 1)
        throw std::invalid_argument("bpk window violated at " + pair_str(n, m) +
                                    ": n-t+1 >= 1 fails (t=" + std::to_string(t) + ")");
    if (f < 1 || f > t / 2 - 1)
        throw std::invalid_argument("bpk window violated at " + pair_str(n, m) +
                                    ": 1 <= f <= t/2-1 fails (t=" + std::to_string(t) +
                                    ", f=" + std::to_string(f) + ")");
    return p;
}

BlockSequence bpk_blocks(const BpkParams& p) {
    BlockSequence blocks(p.n - p.t + 1, Block{BlockKind::Complete, 1});
    blocks.push_back({BlockKind::Empty, p.a});
    blocks.push_back({BlockKind::Empty, p.b});
    blocks.push_back({BlockKind::Empty, p.c});
    return blocks;
}

Graph bpk(int n, int m) {
    Graph g = from_block_sequence(bpk_blocks(bpk_params(n, m)));
    if (g.size() != m)
        throw std::logic_error("bpk construction produced wrong size at " + pair_str(n, m));
    return g;
}

}  // namespace remo
