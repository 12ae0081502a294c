#include "remo/verifier.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "remo/bounds.hpp"
#include "remo/canonical.hpp"
#include "remo/connectivity.hpp"
#include "remo/families.hpp"
#include "remo/graph6.hpp"
#include "remo/invariants.hpp"

namespace remo {

std::string claim_id_str(ClaimId id) {
    switch (id) {
        case ClaimId::PathMax: return "thm1.1";
        case ClaimId::SizeBound: return "thm1.2";
        case ClaimId::SizeBoundUnique: return "cor3.5";
        case ClaimId::KappaBound: return "thm3.3";
        case ClaimId::LambdaBound: return "thm4.3";
        case ClaimId::LambdaOrder: return "cor4.4";
        case ClaimId::LambdaSize: return "cor4.6";
        case ClaimId::TriangleFreeBound: return "thm5.1";
    }
    return "?";
}

std::optional<ClaimId> claim_id_parse(const std::string& s) {
    for (ClaimId id : {ClaimId::PathMax, ClaimId::SizeBound, ClaimId::SizeBoundUnique,
                       ClaimId::KappaBound, ClaimId::LambdaBound, ClaimId::LambdaOrder,
                       ClaimId::LambdaSize, ClaimId::TriangleFreeBound})
        if (claim_id_str(id) == s) return id;
    return std::nullopt;
}

void CorpusSpec::validate() const {
    if (source == Source::Internal) {
        if (n < 2 || n > 7)
            throw std::invalid_argument("internal enumeration supports orders 2..7");
    } else if (path.empty()) {
        throw std::invalid_argument("graph6 corpus needs a path");
    }
    switch (filter) {
        case Filter::Kappa:
            if (filter_param < 1) throw std::invalid_argument("kappa filter needs a threshold >= 1");
            break;
        case Filter::Lambda:
            if (filter_param != 2 && filter_param != 3)
                throw std::invalid_argument("lambda filter supports thresholds 2 and 3");
            break;
        default: break;
    }
    if (size_sel != SizeSel::All && size_m < 0)
        throw std::invalid_argument("size selector needs a nonnegative size");
}

CorpusSpec CorpusSpec::internal(int n, Filter f, int param) {
    CorpusSpec c;
    c.source = Source::Internal;
    c.n = n;
    c.filter = f;
    c.filter_param = param;
    c.validate();
    return c;
}

CorpusSpec CorpusSpec::file(std::string path, Filter f, int param) {
    CorpusSpec c;
    c.source = Source::Graph6File;
    c.path = std::move(path);
    c.filter = f;
    c.filter_param = param;
    c.validate();
    return c;
}

void for_each_connected_labeled(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 2 || n > 7) throw std::invalid_argument("internal enumeration supports orders 2..7");
    std::uint64_t masks = 1ull << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        Graph g = from_edge_mask(n, mask);
        if (is_connected(g)) fn(g);
    }
}

std::vector<Graph> load_graph6_stream(std::istream& in, const std::string& name) {
    std::vector<Graph> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        try {
            out.push_back(decode_graph6(line));
        } catch (const std::exception& e) {
            throw std::runtime_error(name + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::vector<Graph> load_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    return load_graph6_stream(in, path);
}

namespace {

bool passes_filter(const Graph& g, const CorpusSpec& c) {
    if (!is_connected(g)) return false;
    switch (c.size_sel) {
        case CorpusSpec::SizeSel::Exact:
            if (g.size() != c.size_m) return false;
            break;
        case CorpusSpec::SizeSel::AtLeast:
            if (g.size() < c.size_m) return false;
            break;
        case CorpusSpec::SizeSel::All: break;
    }
    switch (c.filter) {
        case CorpusSpec::Filter::Connected: return true;
        case CorpusSpec::Filter::Kappa: return is_kappa_connected(g, c.filter_param);
        case CorpusSpec::Filter::Lambda: return is_lambda_edge_connected(g, c.filter_param);
        case CorpusSpec::Filter::TriangleFree: return is_triangle_free(g);
    }
    return false;
}

std::string dedup_key(const Graph& g) {
    return g.order() <= kMaxCanonicalOrder ? canonical_form(g) : encode_graph6(g);
}

// Everything the per-graph claim check needs for one order. Step claims
// (KappaBound, LambdaBound) carry the family member list; member i's bound
// covers sizes in (msizes[i-1], msizes[i]].
struct OrderContext {
    ClaimId claim;
    int n = 0;
    int param = 0;
    int max_size = 0;       // C(n,2)
    bool vacuous = false;   // step claim with no family members at this order

    std::vector<int> msizes;
    std::vector<Rational> mrhos;
    std::vector<std::string> mcanon;
    int lo = 0, hi = 0;             // step-claim cell range
    std::vector<int> member_for_m;  // index by m - lo

    std::vector<Rational> bound_by_size;  // exact-size claims, index by size

    Rational order_bound;     // PathMax, LambdaOrder
    std::string order_canon;  // construction the order-level witnesses should match

    int window_hi = -1;              // SizeBound*: uniqueness applies for m <= window_hi
    std::set<int> uniqueness_cells;  // KappaBound congruence window
};

OrderContext build_order_context(ClaimId claim, int param, int n) {
    OrderContext cx;
    cx.claim = claim;
    cx.n = n;
    cx.param = param;
    cx.max_size = n * (n - 1) / 2;
    switch (claim) {
        case ClaimId::PathMax:
            cx.order_bound = Rational(n, 2);
            if (n <= kMaxCanonicalOrder) cx.order_canon = canonical_form(Graph::path(n));
            break;
        case ClaimId::SizeBound:
        case ClaimId::SizeBoundUnique: {
            cx.bound_by_size.resize(cx.max_size + 1, Rational(0));
            for (int s = n - 1; s <= cx.max_size; ++s)
                cx.bound_by_size[s] = *bound_size(n, s).value;
            cx.window_hi = (n - 1) * (n - 2) / 2;
            break;
        }
        case ClaimId::KappaBound:
        case ClaimId::LambdaBound: {
            cx.lo = n - 1;
            bool kappa = claim == ClaimId::KappaBound;
            cx.hi = kappa ? (n - 1) * (n - 2) / 2 : cx.max_size - 1;
            try {
                if (kappa) {
                    for (const KappaPcMember& mem : enumerate_kappa_pc(n, param).members) {
                        Graph g = kappa_pc_graph(mem.params);
                        cx.msizes.push_back(mem.size);
                        cx.mrhos.push_back(remoteness(g).value);
                        cx.mcanon.push_back(n <= kMaxCanonicalOrder ? canonical_form(g)
                                                                    : encode_graph6(g));
                    }
                } else {
                    for (const LambdaPcMember& mem : enumerate_lambda_pc(n, param).members) {
                        Graph g = lambda_pc_graph(mem.params);
                        cx.msizes.push_back(mem.size);
                        cx.mrhos.push_back(remoteness(g).value);
                        cx.mcanon.push_back(n <= kMaxCanonicalOrder ? canonical_form(g)
                                                                    : encode_graph6(g));
                    }
                }
            } catch (const std::invalid_argument&) {
                cx.vacuous = true;
                return cx;
            }
            cx.member_for_m.resize(cx.hi - cx.lo + 1, -1);
            for (int m = cx.lo; m <= cx.hi; ++m) {
                auto it = std::lower_bound(cx.msizes.begin(), cx.msizes.end(), m);
                cx.member_for_m[m - cx.lo] =
                    it == cx.msizes.end() ? -1 : int(it - cx.msizes.begin());
            }
            if (kappa) {
                KappaPcSizeRange range = kappa_pc_size_range(n, param);
                for (int m = range.min_size; m <= range.max_size; ++m)
                    if (m % param == range.residue) cx.uniqueness_cells.insert(m);
            }
            break;
        }
        case ClaimId::LambdaOrder: {
            cx.order_bound = bound_lambda_order(n, param);
            try {
                LambdaPcFamily fam = enumerate_lambda_pc(n, param);
                Graph g = lambda_pc_graph(fam.members.front().params);
                cx.order_canon = n <= kMaxCanonicalOrder ? canonical_form(g) : encode_graph6(g);
            } catch (const std::invalid_argument&) {
            }
            break;
        }
        case ClaimId::LambdaSize: {
            cx.bound_by_size.resize(cx.max_size + 1, Rational(0));
            for (int s = n - 1; s <= cx.max_size; ++s)
                cx.bound_by_size[s] = *bound_lambda_size(n, s, param).value;
            break;
        }
        case ClaimId::TriangleFreeBound: {
            int cap = n * n / 4;
            cx.bound_by_size.resize(cap + 1, Rational(0));
            for (int s = n - 1; s <= cap; ++s) cx.bound_by_size[s] = bound_triangle_free(n, s);
            break;
        }
    }
    return cx;
}

struct OrderPartial {
    std::vector<long long> size_count;
    std::vector<std::optional<Rational>> size_max;
    std::map<int, std::set<std::string>> witnesses;  // cell m (or -1) -> dedup keys
};

struct Partial {
    long long scanned = 0;
    std::map<int, OrderPartial> orders;
    std::vector<Violation> violations;

    OrderPartial& order(int n, int max_size) {
        OrderPartial& op = orders[n];
        if (op.size_count.empty()) {
            op.size_count.resize(max_size + 1, 0);
            op.size_max.resize(max_size + 1);
        }
        return op;
    }
};

void process_graph(const Graph& g, const OrderContext& cx, Partial& p) {
    int s = g.size();
    if (cx.claim == ClaimId::LambdaBound && s == cx.max_size) return;  // complete excluded
    ++p.scanned;
    OrderPartial& op = p.order(cx.n, cx.max_size);
    ++op.size_count[s];
    Rational rho = remoteness(g).value;
    if (!op.size_max[s] || *op.size_max[s] < rho) op.size_max[s] = rho;

    switch (cx.claim) {
        case ClaimId::PathMax:
        case ClaimId::LambdaOrder:
            if (cx.order_bound < rho)
                p.violations.push_back({cx.n, -1, encode_graph6(g), rho, cx.order_bound, ""});
            else if (rho == cx.order_bound)
                op.witnesses[-1].insert(dedup_key(g));
            break;
        case ClaimId::SizeBound:
        case ClaimId::SizeBoundUnique:
        case ClaimId::LambdaSize:
        case ClaimId::TriangleFreeBound: {
            const Rational& b = cx.bound_by_size[s];
            if (b < rho)
                p.violations.push_back({cx.n, s, encode_graph6(g), rho, b, ""});
            else if (rho == b)
                op.witnesses[s].insert(dedup_key(g));
            break;
        }
        case ClaimId::KappaBound:
        case ClaimId::LambdaBound: {
            if (cx.vacuous) break;
            int mt = std::min(s, cx.hi);
            if (mt >= cx.lo) {
                int idx = cx.member_for_m[mt - cx.lo];
                if (idx >= 0 && cx.mrhos[idx] < rho)
                    p.violations.push_back(
                        {cx.n, mt, encode_graph6(g), rho, cx.mrhos[idx], ""});
            }
            // rho values are sorted descending; each matching member's step
            // yields witness cells, clipped to sizes this graph dominates.
            auto [first, last] = std::equal_range(cx.mrhos.begin(), cx.mrhos.end(), rho,
                                                  std::greater<Rational>());
            if (first != last) {
                std::string key = dedup_key(g);
                for (auto it = first; it != last; ++it) {
                    int i = int(it - cx.mrhos.begin());
                    int step_lo = i == 0 ? cx.lo : cx.msizes[i - 1] + 1;
                    int step_hi = std::min({cx.msizes[i], cx.hi, s});
                    for (int m = std::max(step_lo, cx.lo); m <= step_hi; ++m)
                        op.witnesses[m].insert(key);
                }
            }
            break;
        }
    }
}

void merge_into(Partial& dst, Partial&& src) {
    dst.scanned += src.scanned;
    for (auto& [n, sp] : src.orders) {
        OrderPartial& dp = dst.orders[n];
        if (dp.size_count.empty()) {
            dp = std::move(sp);
            continue;
        }
        for (std::size_t s = 0; s < sp.size_count.size(); ++s) {
            dp.size_count[s] += sp.size_count[s];
            if (sp.size_max[s] && (!dp.size_max[s] || *dp.size_max[s] < *sp.size_max[s]))
                dp.size_max[s] = sp.size_max[s];
        }
        for (auto& [m, keys] : sp.witnesses)
            dp.witnesses[m].insert(keys.begin(), keys.end());
    }
    dst.violations.insert(dst.violations.end(), src.violations.begin(), src.violations.end());
}

CellStats make_cell(long long graphs, std::optional<Rational> max_rho,
                    std::optional<Rational> bound, const std::set<std::string>* wit) {
    CellStats cell;
    cell.graphs = graphs;
    cell.max_rho = std::move(max_rho);
    cell.bound_value = std::move(bound);
    if (wit) cell.witnesses.assign(wit->begin(), wit->end());
    cell.equality_holds = cell.max_rho && cell.bound_value && *cell.max_rho == *cell.bound_value;
    return cell;
}

void apply_uniqueness(VerificationReport& rep, CellStats& cell, int n, int m,
                      const std::string& wanted) {
    cell.uniqueness_claimed = true;
    if (!wanted.empty())
        cell.extremal_matches_construction =
            cell.witnesses.size() == 1 && cell.witnesses.front() == wanted;
    if (!cell.witnesses.empty() && cell.extremal_matches_construction == false) {
        std::string got;
        for (const std::string& w : cell.witnesses) got += (got.empty() ? "" : " ") + w;
        rep.uniqueness_failures.push_back(
            {n, m, got, cell.max_rho.value_or(Rational(0)),
             cell.bound_value.value_or(Rational(0)),
             "equality witnesses differ from the constructed extremal graph " + wanted});
    }
}

void finalize_order(VerificationReport& rep, const OrderContext& cx, const OrderPartial& op) {
    int n = cx.n;
    long long order_total = 0;
    for (long long c : op.size_count) order_total += c;

    auto cell_witnesses = [&](int m) -> const std::set<std::string>* {
        auto it = op.witnesses.find(m);
        return it == op.witnesses.end() ? nullptr : &it->second;
    };

    switch (cx.claim) {
        case ClaimId::PathMax:
        case ClaimId::LambdaOrder: {
            std::optional<Rational> mx;
            for (const auto& v : op.size_max)
                if (v && (!mx || *mx < *v)) mx = v;
            CellStats cell = make_cell(order_total, mx, cx.order_bound, cell_witnesses(-1));
            if (cx.claim == ClaimId::PathMax)
                apply_uniqueness(rep, cell, n, -1, cx.order_canon);
            else if (!cx.order_canon.empty())
                cell.extremal_matches_construction =
                    cell.witnesses.size() == 1 && cell.witnesses.front() == cx.order_canon;
            rep.per_cell[{n, -1}] = std::move(cell);
            break;
        }
        case ClaimId::SizeBound:
        case ClaimId::SizeBoundUnique:
        case ClaimId::LambdaSize:
        case ClaimId::TriangleFreeBound: {
            for (int s = 0; s < int(op.size_count.size()); ++s) {
                if (op.size_count[s] == 0) continue;
                CellStats cell = make_cell(op.size_count[s], op.size_max[s],
                                           cx.bound_by_size[s], cell_witnesses(s));
                if (cx.claim == ClaimId::SizeBoundUnique && s <= cx.window_hi)
                    apply_uniqueness(rep, cell, n, s,
                                     canonical_form(pk_kappa(n, s, 1)));
                else if (cx.claim == ClaimId::SizeBound && s <= cx.window_hi &&
                         n <= kMaxCanonicalOrder)
                    cell.extremal_matches_construction =
                        cell.witnesses.size() == 1 &&
                        cell.witnesses.front() == canonical_form(pk_kappa(n, s, 1));
                else if (cx.claim == ClaimId::TriangleFreeBound && n <= kMaxCanonicalOrder) {
                    try {
                        cell.extremal_matches_construction =
                            cell.witnesses.size() == 1 &&
                            cell.witnesses.front() == canonical_form(bpk(n, s));
                    } catch (const std::invalid_argument&) {
                    }
                } else if (cx.claim == ClaimId::LambdaSize && n <= kMaxCanonicalOrder) {
                    try {
                        cell.extremal_matches_construction =
                            cell.witnesses.size() == 1 &&
                            cell.witnesses.front() ==
                                canonical_form(pk_lambda(n, s, cx.param));
                    } catch (const std::invalid_argument&) {
                    }
                }
                rep.per_cell[{n, s}] = std::move(cell);
            }
            break;
        }
        case ClaimId::KappaBound:
        case ClaimId::LambdaBound: {
            if (cx.vacuous) {
                rep.notes.push_back("order " + std::to_string(n) +
                                    ": no family members exist, claim is vacuous (" +
                                    std::to_string(order_total) + " graphs unchecked)");
                break;
            }
            // Cells quantify over graphs of size >= m, so counts and maxima
            // accumulate from the large-size end.
            long long suffix_count = 0;
            std::optional<Rational> suffix_max;
            int top = int(op.size_count.size()) - 1;
            for (int m = top; m >= cx.lo; --m) {
                suffix_count += op.size_count[m];
                if (op.size_max[m] && (!suffix_max || *suffix_max < *op.size_max[m]))
                    suffix_max = op.size_max[m];
                if (m > cx.hi) continue;
                int idx = cx.member_for_m[m - cx.lo];
                std::optional<Rational> bound;
                if (idx >= 0) bound = cx.mrhos[idx];
                CellStats cell = make_cell(suffix_count, suffix_max, bound, cell_witnesses(m));
                if (cx.claim == ClaimId::KappaBound && cx.uniqueness_cells.count(m))
                    apply_uniqueness(rep, cell, n, m, idx >= 0 ? cx.mcanon[idx] : "");
                else if (idx >= 0 && n <= kMaxCanonicalOrder)
                    cell.extremal_matches_construction =
                        cell.witnesses.size() == 1 && cell.witnesses.front() == cx.mcanon[idx];
                rep.per_cell[{n, m}] = std::move(cell);
            }
            break;
        }
    }
    if (n > kMaxCanonicalOrder && !op.witnesses.empty())
        rep.notes.push_back("order " + std::to_string(n) +
                            ": witnesses above the canonical-form cap are labeled, "
                            "not isomorphism-reduced");
}

nlohmann::ordered_json corpus_json(const CorpusSpec& c) {
    nlohmann::ordered_json j;
    if (c.source == CorpusSpec::Source::Internal) {
        j["source"] = "internal";
        j["n"] = c.n;
    } else {
        j["source"] = "graph6File";
        j["path"] = c.path;
    }
    switch (c.filter) {
        case CorpusSpec::Filter::Connected: j["filter"] = "connected"; break;
        case CorpusSpec::Filter::Kappa:
            j["filter"] = "kappa";
            j["filterParam"] = c.filter_param;
            break;
        case CorpusSpec::Filter::Lambda:
            j["filter"] = "lambda";
            j["filterParam"] = c.filter_param;
            break;
        case CorpusSpec::Filter::TriangleFree: j["filter"] = "triangleFree"; break;
    }
    if (c.size_sel != CorpusSpec::SizeSel::All) {
        j["sizeSelector"] =
            c.size_sel == CorpusSpec::SizeSel::Exact ? "exact" : "atLeast";
        j["sizeM"] = c.size_m;
    }
    return j;
}

void check_hypothesis(ClaimId claim, const CorpusSpec& corpus) {
    CorpusSpec::Filter need = CorpusSpec::Filter::Connected;
    switch (claim) {
        case ClaimId::PathMax:
        case ClaimId::SizeBound:
        case ClaimId::SizeBoundUnique: need = CorpusSpec::Filter::Connected; break;
        case ClaimId::KappaBound: need = CorpusSpec::Filter::Kappa; break;
        case ClaimId::LambdaBound:
        case ClaimId::LambdaOrder:
        case ClaimId::LambdaSize: need = CorpusSpec::Filter::Lambda; break;
        case ClaimId::TriangleFreeBound: need = CorpusSpec::Filter::TriangleFree; break;
    }
    if (corpus.filter != need)
        throw std::invalid_argument("corpus filter does not match the hypothesis of claim " +
                                    claim_id_str(claim));
}

}  // namespace

VerificationReport verify_theorem(ClaimId claim, const CorpusSpec& corpus,
                                  const ScanOptions& opts) {
    corpus.validate();
    check_hypothesis(claim, corpus);
    int jobs = std::max(1, opts.jobs);

    std::map<int, OrderContext> contexts;
    std::vector<Partial> parts(jobs);

    if (corpus.source == CorpusSpec::Source::Internal) {
        contexts.emplace(corpus.n, build_order_context(claim, corpus.filter_param, corpus.n));
        const OrderContext& cx = contexts.at(corpus.n);
        std::uint64_t masks = 1ull << (corpus.n * (corpus.n - 1) / 2);
        auto worker = [&](int w) {
            std::uint64_t begin = masks * w / jobs;
            std::uint64_t end = masks * (w + 1) / jobs;
            for (std::uint64_t mask = begin; mask < end; ++mask) {
                Graph g = from_edge_mask(corpus.n, mask);
                if (passes_filter(g, corpus)) process_graph(g, cx, parts[w]);
            }
        };
        if (jobs == 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
            for (std::thread& t : pool) t.join();
        }
    } else {
        std::vector<Graph> graphs = load_graph6_file(corpus.path);
        for (const Graph& g : graphs)
            if (!contexts.count(g.order()))
                contexts.emplace(g.order(),
                                 build_order_context(claim, corpus.filter_param, g.order()));
        auto worker = [&](int w) {
            std::size_t begin = graphs.size() * w / jobs;
            std::size_t end = graphs.size() * (w + 1) / jobs;
            for (std::size_t i = begin; i < end; ++i)
                if (passes_filter(graphs[i], corpus))
                    process_graph(graphs[i], contexts.at(graphs[i].order()), parts[w]);
        };
        if (jobs == 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
            for (std::thread& t : pool) t.join();
        }
    }

    Partial merged;
    for (Partial& p : parts) merge_into(merged, std::move(p));

    VerificationReport rep;
    rep.corpus = corpus;
    rep.claim = claim_id_str(claim);
    rep.graphs_scanned = merged.scanned;
    rep.violations = std::move(merged.violations);
    std::sort(rep.violations.begin(), rep.violations.end(),
              [](const Violation& a, const Violation& b) {
                  return std::tie(a.n, a.m, a.witness) < std::tie(b.n, b.m, b.witness);
              });
    for (const auto& [n, cx] : contexts) {
        auto it = merged.orders.find(n);
        if (it != merged.orders.end())
            finalize_order(rep, cx, it->second);
        else if (cx.vacuous)  // no graph passed the filter, still report vacuity
            finalize_order(rep, cx, OrderPartial{});
    }
    std::sort(rep.uniqueness_failures.begin(), rep.uniqueness_failures.end(),
              [](const Violation& a, const Violation& b) {
                  return std::tie(a.n, a.m, a.witness) < std::tie(b.n, b.m, b.witness);
              });
    return rep;
}

VerificationReport check_uniqueness_window(int n, int kappa, const ScanOptions& opts) {
    CorpusSpec corpus = CorpusSpec::internal(n, CorpusSpec::Filter::Kappa, kappa);
    VerificationReport rep = verify_theorem(ClaimId::KappaBound, corpus, opts);
    for (auto it = rep.per_cell.begin(); it != rep.per_cell.end();)
        it = it->second.uniqueness_claimed ? std::next(it) : rep.per_cell.erase(it);
    rep.notes.push_back("restricted to the congruent size window of the order-" +
                        std::to_string(n) + " family");
    return rep;
}

std::string report_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    if (r.corpus)
        j["corpus"] = corpus_json(*r.corpus);
    else
        j["corpus"] = {{"source", "constructive"},
                       {"nMax", r.limits ? r.limits->n_max : 0},
                       {"kappaMax", r.limits ? r.limits->kappa_max : 0}};
    j["theoremId"] = r.claim;
    j["graphsScanned"] = r.graphs_scanned;
    j["perCell"] = nlohmann::ordered_json::array();
    for (const auto& [key, cell] : r.per_cell) {
        nlohmann::ordered_json c;
        c["n"] = key.first;
        if (key.second >= 0) c["m"] = key.second;
        c["graphs"] = cell.graphs;
        c["maxRho"] = cell.max_rho ? nlohmann::ordered_json(cell.max_rho->str())
                                   : nlohmann::ordered_json(nullptr);
        c["boundValue"] = cell.bound_value ? nlohmann::ordered_json(cell.bound_value->str())
                                           : nlohmann::ordered_json(nullptr);
        c["witnesses"] = cell.witnesses;
        c["equalityHolds"] = cell.equality_holds;
        c["extremalIsomorphicToPK"] =
            cell.extremal_matches_construction
                ? nlohmann::ordered_json(*cell.extremal_matches_construction)
                : nlohmann::ordered_json(nullptr);
        c["uniquenessClaimed"] = cell.uniqueness_claimed;
        j["perCell"].push_back(std::move(c));
    }
    auto violation_json = [](const Violation& v) {
        nlohmann::ordered_json o;
        o["n"] = v.n;
        if (v.m >= 0) o["m"] = v.m;
        o["witness"] = v.witness;
        o["rho"] = v.rho.str();
        o["bound"] = v.bound.str();
        if (!v.note.empty()) o["note"] = v.note;
        return o;
    };
    j["violations"] = nlohmann::ordered_json::array();
    for (const Violation& v : r.violations) j["violations"].push_back(violation_json(v));
    j["uniquenessFailures"] = nlohmann::ordered_json::array();
    for (const Violation& v : r.uniqueness_failures)
        j["uniquenessFailures"].push_back(violation_json(v));
    j["notes"] = r.notes;
    return j.dump(2) + "\n";
}

std::string report_csv(const VerificationReport& r) {
    std::ostringstream out;
    out << "n,m,maxRho,boundValue,equal,witnessCount\n";
    for (const auto& [key, cell] : r.per_cell) {
        out << key.first << ',';
        if (key.second >= 0) out << key.second;
        out << ',' << (cell.max_rho ? cell.max_rho->str() : "") << ','
            << (cell.bound_value ? cell.bound_value->str() : "") << ','
            << (cell.equality_holds ? "true" : "false") << ',' << cell.witnesses.size() << '\n';
    }
    return out.str();
}

}  // namespace remo
