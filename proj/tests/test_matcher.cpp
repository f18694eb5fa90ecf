#include "doctest.h"

#include "domains/ecus.h"
#include "gts/derivation.h"
#include "gts/plan.h"
#include "matcher/matcher.h"
#include "oracles.h"
#include "test_util.h"

using namespace gtplan;
using namespace gtplan::testing;

namespace {

ElementId node_by_name(const TypedGraph &g, const std::string &name) {
    for (const Node &n : g.nodes())
        if (n.name == Symbol(name))
            return n.id;
    REQUIRE(false);
    return 0;
}

std::vector<std::string> encodings(const std::vector<Morphism> &matches) {
    std::vector<std::string> out;
    for (const Morphism &m : matches) {
        std::string s;
        for (ElementId id : m.encode())
            s += std::to_string(id) + " ";
        out.push_back(s);
    }
    return out;
}

} // namespace

TEST_CASE("single ECU-node pattern has two matches in the 2-ECU instance") {
    PlanningProblem p = gen_ecus({2, false});
    GraphBuilder b;
    b.add_node(sym("ECU"));
    auto matches = enumerate_matches(b.build(), p.initial);
    CHECK(matches.size() == 2);
}

TEST_CASE("identity pattern yields at least the identity morphism") {
    std::mt19937 rng(3);
    TypedGraph g = random_graph(rng, 5, 6);
    auto matches = enumerate_matches(g, g);
    bool has_identity = false;
    for (const Morphism &m : matches) {
        bool identity = true;
        for (int i = 0; i < g.num_nodes() && identity; ++i)
            identity = m.node_image[i] == g.node(i).id;
        for (int i = 0; i < g.num_edges() && identity; ++i)
            identity = m.edge_image[i] == g.edge(i).id;
        has_identity |= identity;
    }
    CHECK(has_identity);
}

TEST_CASE("empty pattern with no NACs has exactly one empty match") {
    PlanningProblem p = gen_ecus({2, false});
    Pattern empty;
    auto matches = match_pattern(empty, p.initial);
    REQUIRE(matches.size() == 1);
    CHECK(matches[0].node_image.empty());
    CHECK(matches[0].edge_image.empty());
}

TEST_CASE("shutdownNode NAC blocks ECUs with running instances") {
    PlanningProblem p = gen_ecus({2, false});
    const Rule *shutdown = p.rule_by_name(sym("shutdownNode"));
    REQUIRE(shutdown != nullptr);
    // Both ECUs host a running instance initially, so no match satisfies
    // the NACs, in particular not n1.
    auto blocked = match_pattern(shutdown->lhs, shutdown->nacs, p.initial);
    CHECK(blocked.empty());
    Morphism on_n1;
    on_n1.node_image.push_back(node_by_name(p.initial, "n1"));
    for (const Nac &nac : shutdown->nacs) {
        if (nac.graph.num_nodes() > 1) // the running-instance NAC
            CHECK_FALSE(nac_satisfied(on_n1, nac, p.initial));
    }
}

TEST_CASE("NAC requiring an absent type never blocks") {
    GraphBuilder host;
    host.add_node(sym("A"));
    TypedGraph h = host.build();

    GraphBuilder lhs_b;
    ElementId a = lhs_b.add_node(sym("A"));
    TypedGraph lhs = lhs_b.build();

    GraphBuilder nac_b;
    nac_b.add_node_with_id(a, sym("A"));
    nac_b.add_node(sym("B"));
    Nac nac{nac_b.build(), {0}, {}};

    Morphism m;
    m.node_image.push_back(h.node(0).id);
    CHECK(nac_satisfied(m, nac, h));
}

TEST_CASE("target pattern: no match initially, a match after the sample plan") {
    PlanningProblem p = gen_ecus({2, false});
    CHECK(match_pattern(p.target, p.initial).empty());

    // deploy c1@n2; destroy i1; shutdown n1; create instance of c1@n2
    TypedGraph state = p.initial;
    auto apply_first = [&](const std::string &rule_name,
                           const std::function<bool(const Morphism &)> &pick) {
        const Rule *rule = p.rule_by_name(Symbol(rule_name));
        REQUIRE(rule != nullptr);
        std::vector<Rule> one{*rule};
        for (const auto &[r, m] : applicable_transformations(one, state)) {
            if (pick(m)) {
                state = apply_rule(*r, m, state);
                return;
            }
        }
        REQUIRE(false);
    };
    ElementId n1 = node_by_name(p.initial, "n1");
    ElementId n2 = node_by_name(p.initial, "n2");
    ElementId c1 = node_by_name(p.initial, "c1");
    apply_first("deployComponent", [&](const Morphism &m) {
        return m.node_image[0] == c1 && m.node_image[1] == n2;
    });
    apply_first("destroyInstance", [&](const Morphism &m) {
        // the instance running on n1 (i1)
        return std::find(m.node_image.begin(), m.node_image.end(), n1) !=
               m.node_image.end();
    });
    apply_first("shutdownNode",
                [&](const Morphism &m) { return m.node_image[0] == n1; });
    apply_first("createInstance", [&](const Morphism &m) {
        return m.node_image[0] == c1;
    });
    CHECK_FALSE(match_pattern(p.target, state).empty());
}

TEST_CASE("match enumeration equals brute force on random cases") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        TypedGraph host = random_graph(rng, 4 + static_cast<int>(rng() % 6),
                                       static_cast<int>(rng() % 12));
        TypedGraph pattern = random_graph(
            rng, 1 + static_cast<int>(rng() % 3),
            static_cast<int>(rng() % 4), 0.0);
        auto got = enumerate_matches(pattern, host);
        auto expected = oracles::brute_force_matches(pattern, host);
        CHECK(encodings(got) == encodings(expected));
    }
}

TEST_CASE("NAC evaluation equals brute force on random cases") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        TypedGraph host = random_graph(rng, 4 + static_cast<int>(rng() % 4),
                                       static_cast<int>(rng() % 10));
        TypedGraph lhs = random_graph(rng, 1 + static_cast<int>(rng() % 2),
                                      static_cast<int>(rng() % 2), 0.0);
        // NAC: the LHS extended by one node and one edge.
        GraphBuilder nb(lhs);
        ElementId extra = nb.add_node(sym("B"));
        if (lhs.num_nodes() > 0)
            nb.add_edge(lhs.node(0).id, sym("e"), extra);
        Nac nac;
        nac.graph = nb.build();
        for (int i = 0; i < lhs.num_nodes(); ++i)
            nac.lhs_node_to_nac.push_back(
                nac.graph.node_index(lhs.node(i).id));
        for (int i = 0; i < lhs.num_edges(); ++i)
            nac.lhs_edge_to_nac.push_back(
                nac.graph.edge_index(lhs.edge(i).id));
        Pattern pattern{lhs, {nac}};
        auto got = match_pattern(pattern, host);
        auto expected = oracles::brute_force_pattern_matches(pattern, host);
        CHECK(encodings(got) == encodings(expected));
    }
}
