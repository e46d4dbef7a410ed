#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "alphacen/datasets.hpp"
#include "alphacen/evaluation.hpp"
#include "test_support.hpp"

using namespace alphacen;
using testsupport::data_dir;
using testsupport::make_graph;
using testsupport::random_connected_graph;

namespace {

LoadedDataset karate_ds() { return load_dataset("karate", data_dir()); }

Partition as_partition(const std::vector<int>& assignment) {
    Partition p;
    p.assignment = assignment;
    return p;
}

}  // namespace

TEST_CASE("ground truth loading: labels, classes, exclusions, errors") {
    GroundTruth t = load_ground_truth("# hdr\na\tred\nb\tblue\nc\tred\n", "b\n");
    CHECK(t.labels.at("a") == "red");
    CHECK(t.classes == std::vector<std::string>{"red", "blue"});
    CHECK(t.excluded.count("b") == 1);
    CHECK_THROWS_AS(load_ground_truth("a red\n"), ParseError);     // no tab
    CHECK_THROWS_AS(load_ground_truth("a\tred\na\tblue\n"), ParseError);
}

TEST_CASE("ground truth from GML metadata") {
    Graph g = load_gml(read_text_file(data_dir() + "/polbooks.gml"));
    GroundTruth t = ground_truth_from_metadata(g);
    CHECK(t.labels.size() == 105);
    CHECK(t.classes.size() == 3);
}

TEST_CASE("purity: basic identities") {
    Graph g = make_graph(4, {{0, 1, 1.0}, {2, 3, 1.0}}, false);
    GroundTruth t = load_ground_truth("n0\tx\nn1\tx\nn2\ty\nn3\ty\n");

    CHECK(purity(g, as_partition({0, 0, 0, 0}), t) == 1.0);  // all together
    CHECK(purity(g, as_partition({0, 0, 1, 1}), t) == 1.0);  // truth itself
    CHECK(purity(g, as_partition({0, 1, 0, 1}), t) == 0.0);
    CHECK(purity(g, as_partition({0, 0, 1, 2}), t) == doctest::Approx(0.5));

    GroundTruth all_diff = load_ground_truth("n0\ta\nn1\tb\nn2\tc\nn3\td\n");
    CHECK_THROWS_AS(purity(g, as_partition({0, 0, 0, 0}), all_diff), DataError);

    GroundTruth partial = load_ground_truth("n0\tx\nn1\tx\n");
    CHECK_THROWS_AS(purity(g, as_partition({0, 0, 0, 0}), partial), DataError);
    GroundTruth excl = load_ground_truth("n0\tx\nn1\tx\n", "n2\nn3\n");
    CHECK(purity(g, as_partition({0, 0, 1, 2}), excl) == 1.0);
}

TEST_CASE("purity: invariant under community relabeling; merging never hurts") {
    std::mt19937 rng(31);
    Graph g = random_connected_graph(rng, 12, 0.25, false, false);
    std::string labels_text;
    for (int i = 0; i < 12; ++i)
        labels_text += "n" + std::to_string(i) + (i % 3 == 0 ? "\ta\n" : "\tb\n");
    GroundTruth t = load_ground_truth(labels_text);

    std::uniform_int_distribution<int> comm(0, 3);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<int> assign(12);
        for (int& c : assign) c = comm(rng);
        double base = purity(g, as_partition(assign), t);

        std::vector<int> relabeled(12);
        for (int i = 0; i < 12; ++i) relabeled[i] = 7 - assign[i];
        CHECK(purity(g, as_partition(relabeled), t) == doctest::Approx(base));

        std::vector<int> merged = assign;  // merge communities 0 and 1
        for (int& c : merged) c = (c == 1) ? 0 : c;
        CHECK(purity(g, as_partition(merged), t) >= base - 1e-12);
    }
}

TEST_CASE("karate purity: exact factions at 0.14, published value at 0") {
    LoadedDataset ds = karate_ds();
    REQUIRE(ds.truth.has_value());
    Partition p14 = detect_communities(ds.graph, 0.14);
    CHECK(purity(ds.graph, p14, *ds.truth) == 1.0);
    Partition p0 = detect_communities(ds.graph, 0.0);
    CHECK(std::abs(purity(ds.graph, p0, *ds.truth) - 0.505) <= 0.02);
}

TEST_CASE("sweep: karate shape (4, 3, 2) with rising purity") {
    LoadedDataset ds = karate_ds();
    auto records = sweep(ds.graph, *ds.truth, {0.14, 0.0, 0.05});
    REQUIRE(records.size() == 3);
    CHECK(records[0].alpha == 0.0);  // sorted ascending regardless of input
    CHECK(records[0].group_count == 4);
    CHECK(records[1].group_count == 3);
    CHECK(records[2].group_count == 2);
    CHECK(records[0].purity == doctest::Approx(0.5055).epsilon(1e-3));
    CHECK(records[1].purity == doctest::Approx(0.7363).epsilon(1e-3));
    CHECK(records[2].purity == 1.0);
    CHECK(records[2].node_scores.size() == 34);

    CHECK(sweep(ds.graph, *ds.truth, {}).empty());
}

TEST_CASE("sweep: polbooks rows reproduce the published table") {
    LoadedDataset ds = load_dataset("polbooks", data_dir());
    auto records = sweep(ds.graph, *ds.truth, {0.0, 0.04, 0.08});
    REQUIRE(records.size() == 3);
    CHECK(records[0].group_count == 4);
    CHECK(records[1].group_count == 3);
    CHECK(records[2].group_count == 2);
    CHECK(std::abs(records[0].purity - 0.633) <= 0.03);
    CHECK(std::abs(records[1].purity - 0.805) <= 0.03);
    CHECK(std::abs(records[2].purity - 0.917) <= 0.02);
}

TEST_CASE("rank_nodes: karate converged top three, ties, NaN") {
    LoadedDataset ds = karate_ds();
    SpectralInfo s = dominant_eigenpair(ds.graph);
    double alpha = std::min(1.0, 1.05 / s.lambda1);
    Eigen::VectorXd scores = alpha_centrality_scores(ds.graph, alpha, 1.0,
                                                     1e-12, 30000);
    auto ranked = rank_nodes(scores, ds.graph.labels);
    CHECK(ranked[0].first == "34");
    CHECK(ranked[1].first == "1");
    CHECK(ranked[2].first == "3");

    Eigen::VectorXd flat = Eigen::VectorXd::Ones(3);
    auto tied = rank_nodes(flat, {"b", "a", "c"});
    CHECK(tied[0].first == "a");
    CHECK(tied[1].first == "b");

    // label order is lexicographic: "10" sorts before "2"
    auto lex = rank_nodes(Eigen::VectorXd::Ones(2), {"2", "10"});
    CHECK(lex[0].first == "10");

    Eigen::VectorXd bad(2);
    bad << 1.0, std::nan("");
    CHECK_THROWS_AS(rank_nodes(bad, {"a", "b"}), std::invalid_argument);
}

TEST_CASE("rank_nodes: alpha = 0 ordering equals the degree ordering") {
    LoadedDataset ds = karate_ds();
    Eigen::VectorXd s0 = alpha_centrality_scores(ds.graph, 0.0);
    Eigen::VectorXd deg = degree_centrality(ds.graph);
    CHECK(ordering_equal(s0, deg, 1e-12));
}

TEST_CASE("ordering_equal: examples and symmetry") {
    Eigen::VectorXd a(3), b(3);
    a << 1, 2, 3;
    b << 10, 20, 30;
    CHECK(ordering_equal(a, b, 1e-12));
    CHECK(ordering_equal(b, a, 1e-12));
    CHECK(ordering_equal(a, a, 1e-12));

    Eigen::VectorXd c(2), d(2);
    c << 1, 2;
    d << 2, 1;
    CHECK_FALSE(ordering_equal(c, d, 1e-12));
    CHECK_THROWS_AS(ordering_equal(a, c, 1e-12), std::invalid_argument);
}

TEST_CASE("ordering_equal: karate converged scores vs eigenvector centrality") {
    LoadedDataset ds = karate_ds();
    SpectralInfo s = dominant_eigenpair(ds.graph);
    Eigen::VectorXd conv = alpha_centrality_scores(
        ds.graph, std::min(1.0, 1.05 / s.lambda1), 1.0, 1e-12, 30000);
    Eigen::VectorXd eig = eigenvector_centrality(ds.graph, 1e-12);
    CHECK(ordering_equal(conv / conv.lpNorm<1>(), eig / eig.lpNorm<1>(), 1e-8));
}

TEST_CASE("roles: karate factions make exactly 34 and 1 hubs") {
    LoadedDataset ds = karate_ds();
    Partition p = detect_communities(ds.graph, 0.14);  // equals the factions
    RoleCoordinates rc = role_coordinates(ds.graph, p);
    for (int i = 0; i < ds.graph.node_count(); ++i) {
        bool is_hub = rc.z[i] >= 2.5;
        bool expect_hub = ds.graph.labels[i] == "34" || ds.graph.labels[i] == "1";
        CHECK(is_hub == expect_hub);
    }
    CHECK(rc.roles[ds.graph.index_of("34")] == NodeRole::provincial_hub);
    CHECK(rc.roles[ds.graph.index_of("17")] == NodeRole::ultra_peripheral);
}

TEST_CASE("roles: participation coefficient textbook cases") {
    // node 0 entirely inside its community
    Graph g = make_graph(5, {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0},
                             {3, 4, 1.0}, {1, 3, 1.0}}, false);
    Partition p = as_partition({0, 0, 0, 1, 1});
    RoleCoordinates rc = role_coordinates(g, p);
    CHECK(rc.p[0] == 0.0);
    // node 1 splits 2 links inside / 1 outside: P = 1 - (2/3)^2 - (1/3)^2
    CHECK(rc.p[1] == doctest::Approx(1.0 - 4.0 / 9.0 - 1.0 / 9.0));

    // an even two-way split of two links gives P = 0.5
    Graph h = make_graph(5, {{0, 1, 1.0}, {0, 3, 1.0}, {1, 2, 1.0},
                             {3, 4, 1.0}}, false);
    RoleCoordinates rch = role_coordinates(h, as_partition({0, 0, 0, 1, 1}));
    CHECK(rch.p[0] == doctest::Approx(0.5));
}

TEST_CASE("roles: z statistics and singleton handling") {
    std::mt19937 rng(57);
    Graph g = random_connected_graph(rng, 15, 0.3, false, false);
    Partition p = detect_communities(g, 0.05);
    RoleCoordinates rc = role_coordinates(g, p);
    int k = p.group_count();
    for (int c = 0; c < k; ++c) {
        std::vector<int> members;
        for (int i = 0; i < 15; ++i)
            if (p.assignment[i] == c) members.push_back(i);
        if (members.size() < 2) {
            CHECK(rc.z[members[0]] == 0.0);
            continue;
        }
        double mean = 0.0, var = 0.0;
        for (int i : members) mean += rc.z[i];
        mean /= members.size();
        for (int i : members) var += (rc.z[i] - mean) * (rc.z[i] - mean);
        var /= members.size();
        CHECK(std::abs(mean) < 1e-9);
        if (var > 0.0) CHECK(var == doctest::Approx(1.0).epsilon(1e-6));
    }
    for (int i = 0; i < 15; ++i) {
        CHECK(rc.p[i] >= 0.0);
        CHECK(rc.p[i] <= 1.0 - 1.0 / k + 1e-12);
    }
}

TEST_CASE("datasets: registry contents and provenance") {
    auto names = dataset_names();
    CHECK(names == std::vector<std::string>{"karate", "florentine", "football",
                                            "polbooks"});
    auto infos = list_datasets(data_dir());
    REQUIRE(infos.size() == 4);
    CHECK(infos[0].nodes == 34);
    CHECK(infos[1].nodes == 33);  // the florentine family roster
    CHECK(infos[2].nodes == 115);
    CHECK(infos[3].nodes == 105);
    for (const auto& info : infos) {
        CHECK(info.has_labels);
        CHECK_FALSE(info.provenance.empty());
    }
    CHECK_THROWS_AS(load_dataset("flickr", data_dir()), DataError);
}

TEST_CASE("datasets: florentine ships directed with exclusions") {
    LoadedDataset ds = load_dataset("florentine", data_dir());
    CHECK(ds.graph.directed);
    REQUIRE(ds.truth.has_value());
    CHECK(ds.truth->excluded.count("Guasconi") == 1);
    CHECK(ds.truth->labels.at("Medici") == "medicean");
    Graph sym = symmetrize(ds.graph);
    CHECK((sym.adjacency - sym.adjacency.transpose()).cwiseAbs().maxCoeff() ==
          0.0);
}

TEST_CASE("bridge/leader signature on karate") {
    LoadedDataset ds = karate_ds();
    int i34 = ds.graph.index_of("34");
    int i3 = ds.graph.index_of("3");
    double prev34 = 2.0, prev3rel = -1.0;
    for (double alpha = 0.0; alpha <= 0.1401; alpha += 0.02) {
        Eigen::VectorXd s = alpha_centrality_scores(ds.graph, alpha, 1.0,
                                                    1e-12, 30000);
        CHECK(s[i34] < prev34);  // the local leader loses share
        double rel3 = s[i3] / s.maxCoeff();
        CHECK(rel3 > prev3rel);  // the bridge gains on the leader
        prev34 = s[i34];
        prev3rel = rel3;
    }
}
