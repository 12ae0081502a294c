#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "remo/graph.hpp"
#include "remo/rational.hpp"

namespace remo {

// Empirically checkable claims. Command-line ids in claim_id_str.
enum class ClaimId {
    PathMax,           // connected: rho <= n/2, equality only for the path
    SizeBound,         // connected with size >= m: rho <= (n+2)/2 - m/(n-1)
    SizeBoundUnique,   // size bound plus: equality iff pk_kappa(n,m,1), for m <= C(n-1,2)
    KappaBound,        // kappa-connected, size >= m, m <= C(n-1,2): rho <= rho(pk_kappa);
                       // on the congruent size window equality forces pk_kappa itself
    LambdaBound,       // lambda-edge-connected, not complete, size >= m: rho <= rho(pk_lambda)
    LambdaOrder,       // lambda-edge-connected: rho <= residue formula in n
    LambdaSize,        // lambda-edge-connected of size m: rho <= thresholded size formula
    TriangleFreeBound  // connected triangle-free of size m: rho <= n/2 + 2 - 2m/(n-1)
};

std::string claim_id_str(ClaimId id);
std::optional<ClaimId> claim_id_parse(const std::string& s);

struct CorpusSpec {
    enum class Source { Internal, Graph6File };
    enum class Filter { Connected, Kappa, Lambda, TriangleFree };
    enum class SizeSel { All, Exact, AtLeast };

    Source source = Source::Internal;
    int n = 0;               // Internal order, 2..7
    std::string path;        // Graph6File path, "-" for standard input
    Filter filter = Filter::Connected;
    int filter_param = 0;    // kappa or lambda threshold
    SizeSel size_sel = SizeSel::All;
    int size_m = 0;

    void validate() const;   // throws std::invalid_argument

    static CorpusSpec internal(int n, Filter f = Filter::Connected, int param = 0);
    static CorpusSpec file(std::string path, Filter f = Filter::Connected, int param = 0);
};

struct CellStats {
    long long graphs = 0;                    // graphs the cell's claim quantifies over
    std::optional<Rational> max_rho;         // absent when no graph qualifies
    std::optional<Rational> bound_value;     // absent when the bound is undefined here
    std::vector<std::string> witnesses;      // canonical graph6 of equality witnesses, ascending
    bool equality_holds = false;             // max_rho == bound_value
    std::optional<bool> extremal_matches_construction;  // witnesses == {constructed graph}
    bool uniqueness_claimed = false;         // cell lies in a window where equality forces the construction
};

struct Violation {
    int n = 0;
    int m = -1;              // -1 for order-only claims
    std::string witness;     // graph6 of the offending graph, or a parameter description
    Rational rho{0};
    Rational bound{0};
    std::string note;
};

struct SweepLimits {
    int n_max = 60;
    int kappa_max = 5;
};

struct VerificationReport {
    std::optional<CorpusSpec> corpus;        // absent for constructive sweeps
    std::optional<SweepLimits> limits;       // present for constructive sweeps
    std::string claim;                       // claim or sweep-check id
    long long graphs_scanned = 0;
    std::map<std::pair<int, int>, CellStats> per_cell;  // key (n, m); m = -1 collapses the size axis
    std::vector<Violation> violations;                  // bound failures only
    std::vector<Violation> uniqueness_failures;         // equality witness not the constructed graph
    std::vector<std::string> notes;

    bool clean() const { return violations.empty() && uniqueness_failures.empty(); }
};

struct ScanOptions {
    int jobs = 1;
};

// Streams every connected labeled graph on n vertices (all 2^C(n,2) edge
// masks, connectivity-filtered). Guarded at n <= 7.
void for_each_connected_labeled(int n, const std::function<void(const Graph&)>& fn);

// Newline-separated graph6 records; errors carry "name:line:".
std::vector<Graph> load_graph6_file(const std::string& path);
std::vector<Graph> load_graph6_stream(std::istream& in, const std::string& name);

VerificationReport verify_theorem(ClaimId claim, const CorpusSpec& corpus,
                                  const ScanOptions& opts = {});

// Theorem-3.3(b)-shaped check: for every m in the congruent size window of
// the kappa family, the only equality witness is pk_kappa(n, m, kappa).
VerificationReport check_uniqueness_window(int n, int kappa, const ScanOptions& opts = {});

enum class SweepCheck {
    KappaFormula,     // bound_kappa == rho(pk_kappa) across the window
    LambdaSharpness,  // bound_lambda_order == rho of the minimum-size member
    EpsilonWindow,    // epsilon inside its open interval; closed forms cross-checked
    BpkEquality,      // sigma(leftmost) == (n+4)(n-1)/2 - 2m and rho == triangle-free bound
    FamilyStructure,  // endpoints, residues, distinct sizes, gap caps, rho monotonicity
    EdgeAddition      // adding any single edge to a family member strictly lowers rho
};

std::string sweep_check_str(SweepCheck c);
std::optional<SweepCheck> sweep_check_parse(const std::string& s);

VerificationReport sweep_consistency(SweepCheck check, const SweepLimits& limits = {});

std::string report_json(const VerificationReport& r);
std::string report_csv(const VerificationReport& r);

}  // namespace remo
