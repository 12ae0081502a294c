#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "remo/canonical.hpp"
#include "remo/bounds.hpp"
#include "remo/connectivity.hpp"
#include "remo/families.hpp"
#include "remo/graph6.hpp"
#include "remo/invariants.hpp"
#include "remo/verifier.hpp"

using namespace remo;

namespace {

long long count_connected(int n) {
    long long c = 0;
    for_each_connected_labeled(n, [&](const Graph&) { ++c; });
    return c;
}

// Reference canonical form: minimum graph6 encoding over every relabeling.
std::string brute_canonical(const Graph& g) {
    int n = g.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        Graph h(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (g.adjacent(u, v)) h.add_edge(perm[u], perm[v]);
        std::string enc = encode_graph6(h);
        if (best.empty() || enc < best) best = enc;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<std::string> iso_classes(int n) {
    std::set<std::string> classes;
    for_each_connected_labeled(
        n, [&](const Graph& g) { classes.insert(canonical_form(g)); });
    return {classes.begin(), classes.end()};
}

}  // namespace

TEST_CASE("internal enumeration counts connected labeled graphs") {
    CHECK(count_connected(2) == 1);
    CHECK(count_connected(3) == 4);
    CHECK(count_connected(4) == 38);
    CHECK(count_connected(5) == 728);
    CHECK(count_connected(6) == 26704);
    CHECK_THROWS_AS(for_each_connected_labeled(1, [](const Graph&) {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(for_each_connected_labeled(8, [](const Graph&) {}),
                    std::invalid_argument);
}

// canonical_form need not equal the oracle string, but the equivalence they
// induce must be identical: equal canon iff equal brute, over every pair.
TEST_CASE("canonical form partitions exactly like the permutation oracle") {
    for (int n = 2; n <= 5; ++n) {
        std::map<std::string, std::string> canon_to_brute, brute_to_canon;
        long long disagreements = 0;
        for_each_connected_labeled(n, [&](const Graph& g) {
            std::string c = canonical_form(g), b = brute_canonical(g);
            auto [it1, fresh1] = canon_to_brute.emplace(c, b);
            if (!fresh1 && it1->second != b) ++disagreements;
            auto [it2, fresh2] = brute_to_canon.emplace(b, c);
            if (!fresh2 && it2->second != c) ++disagreements;
        });
        CHECK(disagreements == 0);
        CHECK(canon_to_brute.size() == brute_to_canon.size());
    }
}

TEST_CASE("isomorphism checks") {
    Graph c5 = Graph::cycle(5);
    Graph c5bar(5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            if (!c5.adjacent(u, v)) c5bar.add_edge(u, v);
    CHECK(is_isomorphic(c5, c5bar));

    Graph p4 = Graph::path(4);
    Graph shuffled(4);  // 2-0-3-1 in path order
    shuffled.add_edge(2, 0);
    shuffled.add_edge(0, 3);
    shuffled.add_edge(3, 1);
    CHECK(is_isomorphic(p4, shuffled));

    Graph paw(4);  // triangle with a pendant, same order and size as C4
    paw.add_edge(0, 1);
    paw.add_edge(1, 2);
    paw.add_edge(2, 0);
    paw.add_edge(2, 3);
    CHECK_FALSE(is_isomorphic(Graph::cycle(4), paw));
    CHECK_FALSE(is_isomorphic(Graph::path(4), Graph::path(5)));
}

TEST_CASE("graph6 stream loading") {
    std::istringstream one("@\n");
    std::vector<Graph> k1 = load_graph6_stream(one, "mem");
    REQUIRE(k1.size() == 1);
    CHECK(k1[0].order() == 1);

    std::istringstream bad("DQc\n*nope*\n");
    try {
        load_graph6_stream(bad, "mem");
        FAIL("expected a decode error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("mem:2:") == 0);
    }

    std::ostringstream all;
    std::vector<std::string> expected;
    for_each_connected_labeled(5, [&](const Graph& g) {
        std::string enc = encode_graph6(g);
        all << enc << "\n";
        expected.push_back(enc);
    });
    std::istringstream back(all.str());
    std::vector<Graph> reloaded = load_graph6_stream(back, "mem");
    REQUIRE(reloaded.size() == expected.size());
    for (std::size_t i = 0; i < reloaded.size(); ++i)
        CHECK(encode_graph6(reloaded[i]) == expected[i]);
}

TEST_CASE("fixture corpora hold the sorted isomorphism classes") {
    for (int n : {5, 6}) {
        std::vector<std::string> classes = iso_classes(n);
        CHECK(classes.size() == (n == 5 ? 21u : 112u));
        std::ifstream in(std::string(FIXTURES_DIR) + "/connected" +
                         std::to_string(n) + ".g6");
        REQUIRE(in.good());
        std::vector<std::string> lines;
        for (std::string line; std::getline(in, line);) lines.push_back(line);
        CHECK(lines == classes);
    }
}

TEST_CASE("path bound scan at order 5") {
    VerificationReport rep =
        verify_theorem(ClaimId::PathMax, CorpusSpec::internal(5));
    CHECK(rep.graphs_scanned == 728);
    CHECK(rep.clean());
    REQUIRE(rep.per_cell.count({5, -1}) == 1);
    const CellStats& cell = rep.per_cell.at({5, -1});
    CHECK(*cell.max_rho == Rational(5, 2));
    CHECK(*cell.bound_value == Rational(5, 2));
    CHECK(cell.equality_holds);
    CHECK(cell.uniqueness_claimed);
    CHECK(cell.extremal_matches_construction == true);
    REQUIRE(cell.witnesses.size() == 1);
    CHECK(cell.witnesses[0] == canonical_form(Graph::path(5)));
}

TEST_CASE("size bound scan at order 6 attains equality in every cell") {
    VerificationReport rep =
        verify_theorem(ClaimId::SizeBound, CorpusSpec::internal(6));
    CHECK(rep.clean());
    CHECK(rep.graphs_scanned == 26704);
    for (int m = 5; m <= 15; ++m) {
        REQUIRE(rep.per_cell.count({6, m}) == 1);
        const CellStats& cell = rep.per_cell.at({6, m});
        CHECK(*cell.bound_value == Rational(4) - Rational(m, 5));
        CHECK(cell.equality_holds);
        if (m <= 10) CHECK(cell.extremal_matches_construction == true);
    }
}

TEST_CASE("size uniqueness applies only inside the family window") {
    VerificationReport rep =
        verify_theorem(ClaimId::SizeBoundUnique, CorpusSpec::internal(4));
    CHECK(rep.clean());
    const CellStats& claimed = rep.per_cell.at({4, 3});
    CHECK(claimed.uniqueness_claimed);
    REQUIRE(claimed.witnesses.size() == 1);
    CHECK(claimed.witnesses[0] == canonical_form(Graph::path(4)));
    // Above the window several graphs tie the bound, so no claim is made.
    const CellStats& open = rep.per_cell.at({4, 4});
    CHECK_FALSE(open.uniqueness_claimed);
    CHECK(open.equality_holds);
}

TEST_CASE("kappa bound scan at order 6") {
    VerificationReport rep = verify_theorem(
        ClaimId::KappaBound, CorpusSpec::internal(6, CorpusSpec::Filter::Kappa, 2));
    CHECK(rep.clean());
    REQUIRE(rep.per_cell.count({6, 10}) == 1);
    const CellStats& cell = rep.per_cell.at({6, 10});
    CHECK(cell.uniqueness_claimed);
    REQUIRE(cell.witnesses.size() == 1);
    CHECK(cell.witnesses[0] ==
          canonical_form(from_block_sequence(parse_blocks("C1,C2,C2,C1"))));
    CHECK(*cell.bound_value == Rational(9, 5));
    for (int m = 5; m <= 10; ++m) CHECK(rep.per_cell.count({6, m}) == 1);
}

TEST_CASE("kappa bound scan is vacuous when the family needs more vertices") {
    VerificationReport rep = verify_theorem(
        ClaimId::KappaBound, CorpusSpec::internal(6, CorpusSpec::Filter::Kappa, 3));
    CHECK(rep.clean());
    CHECK(rep.per_cell.empty());
    REQUIRE(rep.notes.size() >= 1);
    CHECK(rep.notes[0].find("vacuous") != std::string::npos);
    CHECK(rep.graphs_scanned > 0);
}

TEST_CASE("lambda bound scan at order 6 skips the complete graph") {
    VerificationReport rep = verify_theorem(
        ClaimId::LambdaBound, CorpusSpec::internal(6, CorpusSpec::Filter::Lambda, 2));
    CHECK(rep.clean());
    long long two_edge_connected = 0;
    for_each_connected_labeled(6, [&](const Graph& g) {
        if (is_lambda_edge_connected(g, 2) && g.size() < 15) ++two_edge_connected;
    });
    CHECK(rep.graphs_scanned == two_edge_connected);
}

TEST_CASE("lambda order scan matches the residue formula") {
    VerificationReport rep = verify_theorem(
        ClaimId::LambdaOrder, CorpusSpec::internal(6, CorpusSpec::Filter::Lambda, 2));
    CHECK(rep.clean());
    const CellStats& cell = rep.per_cell.at({6, -1});
    CHECK(*cell.max_rho == Rational(2));
    CHECK(*cell.bound_value == bound_lambda_order(6, 2));
    CHECK(cell.equality_holds);
}

TEST_CASE("triangle-free scan at order 6") {
    VerificationReport rep = verify_theorem(
        ClaimId::TriangleFreeBound,
        CorpusSpec::internal(6, CorpusSpec::Filter::TriangleFree));
    CHECK(rep.clean());
    const CellStats& sparse = rep.per_cell.at({6, 5});
    CHECK(*sparse.bound_value == Rational(3));
    CHECK(sparse.equality_holds);
}

TEST_CASE("hypothesis and filter must agree") {
    CHECK_THROWS_AS(
        verify_theorem(ClaimId::KappaBound, CorpusSpec::internal(6)),
        std::invalid_argument);
    CHECK_THROWS_AS(
        verify_theorem(ClaimId::PathMax,
                       CorpusSpec::internal(6, CorpusSpec::Filter::Lambda, 2)),
        std::invalid_argument);
}

TEST_CASE("file corpus reproduces the internal per-cell maxima") {
    VerificationReport internal =
        verify_theorem(ClaimId::SizeBound, CorpusSpec::internal(6));
    VerificationReport file = verify_theorem(
        ClaimId::SizeBound,
        CorpusSpec::file(std::string(FIXTURES_DIR) + "/connected6.g6"));
    CHECK(file.clean());
    CHECK(file.graphs_scanned == 112);
    for (const auto& [key, cell] : file.per_cell) {
        CHECK(*cell.max_rho == *internal.per_cell.at(key).max_rho);
        CHECK(cell.witnesses == internal.per_cell.at(key).witnesses);
    }
}

TEST_CASE("reports are byte-identical across worker counts") {
    for (ClaimId id : {ClaimId::SizeBound, ClaimId::SizeBoundUnique}) {
        ScanOptions one, four;
        four.jobs = 4;
        VerificationReport a = verify_theorem(id, CorpusSpec::internal(6), one);
        VerificationReport b = verify_theorem(id, CorpusSpec::internal(6), four);
        CHECK(report_json(a) == report_json(b));
        CHECK(report_csv(a) == report_csv(b));
    }
}

TEST_CASE("uniqueness window report") {
    VerificationReport rep = check_uniqueness_window(6, 2);
    CHECK(rep.clean());
    REQUIRE(rep.per_cell.size() == 1);
    CHECK(rep.per_cell.begin()->first == std::pair<int, int>(6, 10));

    VerificationReport full = check_uniqueness_window(6, 1);
    CHECK(full.clean());
    CHECK(full.per_cell.size() == 6);
    for (const auto& [key, cell] : full.per_cell) {
        CHECK(cell.uniqueness_claimed);
        CHECK(cell.witnesses.size() == 1);
    }
}

TEST_CASE("report serialization shape") {
    VerificationReport rep =
        verify_theorem(ClaimId::PathMax, CorpusSpec::internal(4));
    std::string json = report_json(rep);
    CHECK(json.find("\"theoremId\": \"thm1.1\"") != std::string::npos);
    CHECK(json.find("\"graphsScanned\": 38") != std::string::npos);
    CHECK(json.find("\"maxRho\": \"2\"") != std::string::npos);
    CHECK(json.find("\"uniquenessClaimed\": true") != std::string::npos);
    std::string csv = report_csv(rep);
    CHECK(csv.rfind("n,m,maxRho,boundValue,equal,witnessCount\n", 0) == 0);
    CHECK(csv.find("4,,2,2,true,1") != std::string::npos);
}

TEST_CASE("claim and sweep id registries round-trip") {
    for (ClaimId id : {ClaimId::PathMax, ClaimId::SizeBound, ClaimId::SizeBoundUnique,
                       ClaimId::KappaBound, ClaimId::LambdaBound, ClaimId::LambdaOrder,
                       ClaimId::LambdaSize, ClaimId::TriangleFreeBound})
        CHECK(claim_id_parse(claim_id_str(id)) == id);
    CHECK_FALSE(claim_id_parse("thm9.9").has_value());
    for (SweepCheck c : {SweepCheck::KappaFormula, SweepCheck::LambdaSharpness,
                         SweepCheck::EpsilonWindow, SweepCheck::BpkEquality,
                         SweepCheck::FamilyStructure, SweepCheck::EdgeAddition})
        CHECK(sweep_check_parse(sweep_check_str(c)) == c);
    CHECK_FALSE(sweep_check_parse("nonsense").has_value());
}

TEST_CASE("constructive sweeps at reduced limits") {
    SweepLimits lim;
    lim.n_max = 16;
    lim.kappa_max = 3;
    for (SweepCheck c : {SweepCheck::KappaFormula, SweepCheck::LambdaSharpness,
                         SweepCheck::BpkEquality, SweepCheck::FamilyStructure,
                         SweepCheck::EdgeAddition}) {
        VerificationReport rep = sweep_consistency(c, lim);
        CHECK(rep.clean());
        CHECK(rep.graphs_scanned > 0);
    }
}

TEST_CASE("epsilon window sweep pinpoints the two boundary cells") {
    SweepLimits lim;
    lim.n_max = 12;
    VerificationReport rep = sweep_consistency(SweepCheck::EpsilonWindow, lim);
    REQUIRE(rep.violations.size() == 2);
    CHECK(rep.violations[0].n == 8);
    CHECK(rep.violations[0].m == 16);
    CHECK(rep.violations[1].n == 9);
    CHECK(rep.violations[1].m == 20);
    for (const Violation& v : rep.violations)
        CHECK(v.note.find("lower") != std::string::npos);
}
