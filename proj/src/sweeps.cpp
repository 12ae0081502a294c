#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "remo/bounds.hpp"
#include "remo/connectivity.hpp"
#include "remo/families.hpp"
#include "remo/graph.hpp"
#include "remo/graph6.hpp"
#include "remo/invariants.hpp"
#include "remo/verifier.hpp"

namespace remo {

std::string sweep_check_str(SweepCheck c) {
    switch (c) {
        case SweepCheck::KappaFormula: return "kappa-formula";
        case SweepCheck::LambdaSharpness: return "lambda-sharpness";
        case SweepCheck::EpsilonWindow: return "epsilon-window";
        case SweepCheck::BpkEquality: return "bpk-equality";
        case SweepCheck::FamilyStructure: return "family-structure";
        case SweepCheck::EdgeAddition: return "edge-addition";
    }
    return "?";
}

std::optional<SweepCheck> sweep_check_parse(const std::string& s) {
    for (SweepCheck c : {SweepCheck::KappaFormula, SweepCheck::LambdaSharpness,
                         SweepCheck::EpsilonWindow, SweepCheck::BpkEquality,
                         SweepCheck::FamilyStructure, SweepCheck::EdgeAddition})
        if (sweep_check_str(c) == s) return c;
    return std::nullopt;
}

namespace {

// Member remoteness values for one family at one order, computed once so a
// walk over m only advances an index.
template <typename Member>
std::vector<Rational> member_rhos(const std::vector<Member>& members,
                                  Graph (*build)(const decltype(Member::params)&)) {
    std::vector<Rational> rhos;
    rhos.reserve(members.size());
    for (const Member& mem : members) rhos.push_back(remoteness(build(mem.params)).value);
    return rhos;
}

void sweep_kappa_formula(VerificationReport& rep, const SweepLimits& lim) {
    for (int kappa = 1; kappa <= lim.kappa_max; ++kappa) {
        for (int n = 2 * kappa + 2; n <= lim.n_max; ++n) {
            KappaPcFamily fam = enumerate_kappa_pc(n, kappa);
            std::vector<Rational> rhos =
                member_rhos<KappaPcMember>(fam.members, kappa_pc_graph);
            KappaPcSizeRange range = kappa_pc_size_range(n, kappa);
            std::size_t idx = 0;
            for (int m = range.min_size; m <= range.max_size; ++m) {
                while (fam.members[idx].size < m) ++idx;
                ++rep.graphs_scanned;
                BoundReport br = bound_kappa(n, m, kappa);
                if (!br.applicable) {
                    rep.violations.push_back(
                        {n, m, "kappa=" + std::to_string(kappa), Rational(0), Rational(0),
                         "formula reported inapplicable inside the family size window"});
                    continue;
                }
                if (*br.value != rhos[idx])
                    rep.violations.push_back(
                        {n, m, kappa_pc_str(fam.members[idx].params), rhos[idx], *br.value,
                         "formula disagrees with the remoteness of the selected member"});
            }
            for (int m : {range.min_size - 1, range.max_size + 1}) {
                if (m < 0) continue;
                if (bound_kappa(n, m, kappa).applicable)
                    rep.violations.push_back(
                        {n, m, "kappa=" + std::to_string(kappa), Rational(0), Rational(0),
                         "formula applicable outside the family size window"});
            }
        }
    }
    rep.notes.push_back("checked every size cell of every family up to n=" +
                        std::to_string(lim.n_max) + ", kappa=" + std::to_string(lim.kappa_max));
}

void sweep_lambda_sharpness(VerificationReport& rep, const SweepLimits& lim) {
    for (int lambda : {2, 3}) {
        for (int n = lambda + 2; n <= lim.n_max; ++n) {
            LambdaPcFamily fam = enumerate_lambda_pc(n, lambda);
            const LambdaPcMember& least = fam.members.front();
            Rational rho = remoteness(lambda_pc_graph(least.params)).value;
            Rational bound = bound_lambda_order(n, lambda);
            ++rep.graphs_scanned;
            if (rho != bound)
                rep.violations.push_back(
                    {n, -1, lambda_pc_str(least.params), rho, bound,
                     "order bound not attained by the minimum-size member"});
        }
    }
    rep.notes.push_back("checked the minimum-size member for lambda in {2,3} up to n=" +
                        std::to_string(lim.n_max));
}

void sweep_epsilon_window(VerificationReport& rep, const SweepLimits& lim) {
    long long f2a_match = 0, f2a_total = 0;
    std::string f2a_first_mismatch;
    for (int lambda : {2, 3}) {
        Rational lower = lambda == 2 ? Rational(2, 3) : Rational(1);
        Rational upper = lambda == 2 ? Rational(5, 3) : Rational(3, 2);
        for (int n = lambda + 2; n <= lim.n_max; ++n) {
            LambdaPcFamily fam = enumerate_lambda_pc(n, lambda);
            std::vector<Rational> rhos =
                member_rhos<LambdaPcMember>(fam.members, lambda_pc_graph);
            auto base = [&](int m) {
                return lambda == 2
                           ? Rational(n, 3) - Rational(2 * m, 3 * (n - 1))
                           : Rational(n, 4) - Rational(m, 2 * (n - 1));
            };
            std::size_t idx = 0;
            int top = n * (n - 1) / 2 - 1;
            for (int m = n - 1; m <= top; ++m) {
                while (fam.members[idx].size < m) ++idx;
                ++rep.graphs_scanned;
                // Size-aware bound must dominate the selected member at every
                // size, including below the family minimum where it falls
                // back to the order bound.
                Rational dom = *bound_lambda_size(n, m, lambda).value;
                if (dom < rhos[idx])
                    rep.violations.push_back(
                        {n, m, lambda_pc_str(fam.members[idx].params), rhos[idx], dom,
                         "size bound fails to dominate the selected member"});
                if (m < fam.members.front().size) continue;
                Rational eps = rhos[idx] - base(m);
                if (!(lower < eps))
                    rep.violations.push_back(
                        {n, m, lambda_pc_str(fam.members[idx].params), rhos[idx],
                         base(m) + lower,
                         "epsilon " + eps.str() + " is not above the open lower end " +
                             lower.str()});
                else if (!(eps < upper))
                    rep.violations.push_back(
                        {n, m, lambda_pc_str(fam.members[idx].params), rhos[idx],
                         base(m) + upper,
                         "epsilon " + eps.str() + " is not below the open upper end " +
                             upper.str()});
            }
            if (lambda != 2) continue;
            // Closed forms are stated at the member's own size.
            for (std::size_t i = 0; i < fam.members.size(); ++i) {
                const LambdaPcParams& p = fam.members[i].params;
                Rational eps = rhos[i] - base(fam.members[i].size);
                if (p.family == LambdaFamily::F1) {
                    if (epsilon_f1_closed(n, p.k, p.b) != eps)
                        rep.violations.push_back(
                            {n, fam.members[i].size, lambda_pc_str(p), eps,
                             epsilon_f1_closed(n, p.k, p.b),
                             "first-shape closed form disagrees with direct evaluation"});
                } else if (p.family == LambdaFamily::F2) {
                    ++f2a_total;
                    if (epsilon_f2_closed_a(n, p.k, p.b) == eps)
                        ++f2a_match;
                    else if (f2a_first_mismatch.empty())
                        f2a_first_mismatch = "n=" + std::to_string(n) + " " +
                                             lambda_pc_str(p) + ": form a gives " +
                                             epsilon_f2_closed_a(n, p.k, p.b).str() +
                                             ", direct evaluation gives " + eps.str();
                    if (epsilon_f2_closed_b(n, p.k, p.b) != eps)
                        rep.violations.push_back(
                            {n, fam.members[i].size, lambda_pc_str(p), eps,
                             epsilon_f2_closed_b(n, p.k, p.b),
                             "second-shape closed form b disagrees with direct evaluation"});
                }
            }
        }
    }
    rep.notes.push_back("second-shape closed form a matches direct evaluation at " +
                        std::to_string(f2a_match) + " of " + std::to_string(f2a_total) +
                        " member sizes; form b matches at all of them");
    if (!f2a_first_mismatch.empty())
        rep.notes.push_back("first mismatch of form a: " + f2a_first_mismatch);
}

void sweep_bpk_equality(VerificationReport& rep, const SweepLimits& lim) {
    long long skipped = 0;
    for (int n = 4; n <= lim.n_max; ++n) {
        int top = n * n / 4;
        for (int m = n - 1; m <= top; ++m) {
            std::optional<Graph> built;
            try {
                built.emplace(bpk(n, m));
            } catch (const std::invalid_argument&) {
                ++skipped;
                continue;
            }
            const Graph& g = *built;
            ++rep.graphs_scanned;
            Rational sigma(transmission(g, 0));
            Rational expected((n + 4) * (n - 1) / 2 - 2 * m);
            if (sigma != expected)
                rep.violations.push_back(
                    {n, m, encode_graph6(g), sigma, expected,
                     "leftmost transmission differs from the closed form"});
            Rational rho = remoteness(g).value;
            Rational bound = bound_triangle_free(n, m);
            if (rho != bound)
                rep.violations.push_back(
                    {n, m, encode_graph6(g), rho, bound,
                     "construction does not attain the triangle-free bound"});
        }
    }
    rep.notes.push_back(std::to_string(skipped) +
                        " size cells skipped where the construction is undefined");
}

void sweep_family_structure(VerificationReport& rep, const SweepLimits& lim) {
    auto flag = [&](int n, int m, std::string witness, std::string note) {
        rep.violations.push_back(
            {n, m, std::move(witness), Rational(0), Rational(0), std::move(note)});
    };
    for (int kappa = 1; kappa <= lim.kappa_max; ++kappa) {
        for (int n = 2 * kappa + 2; n <= lim.n_max; ++n) {
            KappaPcFamily fam = enumerate_kappa_pc(n, kappa);
            rep.graphs_scanned += fam.members.size();
            std::string label = "kappa=" + std::to_string(kappa) + " n=" + std::to_string(n);
            KappaPcSizeRange range = kappa_pc_size_range(n, kappa);
            if (fam.size_collision) flag(n, -1, label, "two members share a size");
            if (fam.members.front().size != range.min_size ||
                fam.members.back().size != range.max_size)
                flag(n, -1, label, "enumerated size endpoints differ from the closed range");
            if (int(fam.members.size()) !=
                (range.max_size - range.min_size) / kappa + 1)
                flag(n, -1, label, "member count differs from the window length");
            Rational prev_rho;
            for (std::size_t i = 0; i < fam.members.size(); ++i) {
                const KappaPcMember& mem = fam.members[i];
                if (mem.size % kappa != range.residue)
                    flag(n, mem.size, kappa_pc_str(mem.params),
                         "member size escapes the residue class");
                Graph g = kappa_pc_graph(mem.params);
                if (g.order() != n)
                    flag(n, mem.size, kappa_pc_str(mem.params), "realized order is wrong");
                if (g.size() != mem.size)
                    flag(n, mem.size, kappa_pc_str(mem.params), "realized size is wrong");
                Rational rho = remoteness(g).value;
                if (i > 0 && !(rho < prev_rho))
                    flag(n, mem.size, kappa_pc_str(mem.params),
                         "remoteness fails to decrease strictly with size");
                if (i > 0 && fam.members[i].size - fam.members[i - 1].size != kappa)
                    flag(n, mem.size, kappa_pc_str(mem.params),
                         "consecutive sizes do not step by kappa");
                prev_rho = rho;
            }
        }
    }
    for (int lambda : {2, 3}) {
        for (int n = lambda + 2; n <= lim.n_max; ++n) {
            LambdaPcFamily fam = enumerate_lambda_pc(n, lambda);
            rep.graphs_scanned += fam.members.size();
            std::string label = "lambda=" + std::to_string(lambda) + " n=" + std::to_string(n);
            if (fam.size_collision) flag(n, -1, label, "two members share a size");
            if (fam.members.front().size != lambda_pc_min_size_formula(n, lambda))
                flag(n, -1, label, "minimum size differs from the closed form");
            if (fam.members.back().size != n * (n - 1) / 2 - 1)
                flag(n, -1, label, "maximum size is not one below complete");
            Rational prev_rho;
            for (std::size_t i = 0; i < fam.members.size(); ++i) {
                const LambdaPcMember& mem = fam.members[i];
                Graph g = lambda_pc_graph(mem.params);
                if (g.order() != n)
                    flag(n, mem.size, lambda_pc_str(mem.params), "realized order is wrong");
                if (g.size() != mem.size)
                    flag(n, mem.size, lambda_pc_str(mem.params), "realized size is wrong");
                if (!is_lambda_edge_connected(g, lambda))
                    flag(n, mem.size, lambda_pc_str(mem.params),
                         "member misses the edge-connectivity it is named for");
                Rational rho = remoteness(g).value;
                if (i > 0) {
                    int gap = mem.size - fam.members[i - 1].size;
                    if (gap < 1 || gap > lambda)
                        flag(n, mem.size, lambda_pc_str(mem.params),
                             "size gap escapes [1, lambda]");
                    if (rho > prev_rho)
                        flag(n, mem.size, lambda_pc_str(mem.params),
                             "remoteness increases with size");
                }
                prev_rho = rho;
            }
            if (lambda == 3) {
                // The third shape exists to plug gaps; each instance must tie
                // the remoteness of a first-shape member of the same order.
                for (int k = 1; 4 * k + 6 <= n; ++k) {
                    Rational r3 = remoteness(lambda_pc_graph(
                                                 {LambdaFamily::F3, 3, k, n - 4 * k - 3, 1}))
                                      .value;
                    Rational r1 = remoteness(lambda_pc_graph(
                                                 {LambdaFamily::F1, 3, k, 1, n - 4 * k - 1}))
                                      .value;
                    if (r3 != r1)
                        flag(n, -1, "k=" + std::to_string(k) + " " + label,
                             "third-shape member fails to tie its first-shape partner");
                }
            }
        }
    }
    rep.notes.push_back("families checked up to n=" + std::to_string(lim.n_max) +
                        ", kappa up to " + std::to_string(lim.kappa_max) +
                        ", lambda in {2,3}");
}

void check_edge_additions(VerificationReport& rep, const Graph& g, int n,
                          const std::string& label) {
    Rational rho = remoteness(g).value;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            Graph h = g;
            h.add_edge(u, v);
            ++rep.graphs_scanned;
            Rational after = remoteness(h).value;
            if (!(after < rho))
                rep.violations.push_back(
                    {n, g.size(), label, after, rho,
                     "adding edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") fails to lower the remoteness strictly"});
        }
    }
}

void sweep_edge_addition(VerificationReport& rep, const SweepLimits& lim) {
    int n_top = std::min(lim.n_max, 12);
    for (int kappa = 1; kappa <= std::min(lim.kappa_max, 3); ++kappa)
        for (int n = 2 * kappa + 2; n <= n_top; ++n)
            for (const KappaPcMember& mem : enumerate_kappa_pc(n, kappa).members)
                check_edge_additions(rep, kappa_pc_graph(mem.params), n,
                                     kappa_pc_str(mem.params));
    for (int lambda : {2, 3})
        for (int n = lambda + 2; n <= n_top; ++n)
            for (const LambdaPcMember& mem : enumerate_lambda_pc(n, lambda).members)
                check_edge_additions(rep, lambda_pc_graph(mem.params), n,
                                     lambda_pc_str(mem.params));
    rep.notes.push_back("every single-edge completion checked up to n=" +
                        std::to_string(n_top));
}

}  // namespace

VerificationReport sweep_consistency(SweepCheck check, const SweepLimits& limits) {
    if (limits.n_max < 4) throw std::invalid_argument("sweep needs n_max >= 4");
    if (limits.kappa_max < 1) throw std::invalid_argument("sweep needs kappa_max >= 1");
    VerificationReport rep;
    rep.limits = limits;
    rep.claim = sweep_check_str(check);
    switch (check) {
        case SweepCheck::KappaFormula: sweep_kappa_formula(rep, limits); break;
        case SweepCheck::LambdaSharpness: sweep_lambda_sharpness(rep, limits); break;
        case SweepCheck::EpsilonWindow: sweep_epsilon_window(rep, limits); break;
        case SweepCheck::BpkEquality: sweep_bpk_equality(rep, limits); break;
        case SweepCheck::FamilyStructure: sweep_family_structure(rep, limits); break;
        case SweepCheck::EdgeAddition: sweep_edge_addition(rep, limits); break;
    }
    std::sort(rep.violations.begin(), rep.violations.end(),
              [](const Violation& a, const Violation& b) {
                  return std::tie(a.n, a.m, a.witness) < std::tie(b.n, b.m, b.witness);
              });
    return rep;
}

}  // namespace remo
