#include "doctest.h"

#include "domains/ecus.h"
#include "graph/isomorphism.h"
#include "gts/derivation.h"
#include "gts/plan.h"
#include "oracles.h"
#include "test_util.h"

#include <set>

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

bool no_dangling(const TypedGraph &g) {
    for (const Edge &e : g.edges())
        if (!g.has_node(e.src) || !g.has_node(e.tgt))
            return false;
    return true;
}

bool is_supergraph(const TypedGraph &sub, const TypedGraph &super) {
    for (const Node &n : sub.nodes()) {
        int j = super.node_index(n.id);
        if (j < 0 || super.node(j).type != n.type ||
            super.node(j).name != n.name)
            return false;
    }
    for (const Edge &e : sub.edges()) {
        int j = super.edge_index(e.id);
        if (j < 0 || super.edge(j).src != e.src ||
            super.edge(j).tgt != e.tgt || super.edge(j).type != e.type)
            return false;
    }
    return true;
}

// The §-style sample plan: deploy c1@n2, destroy i1, shutdown n1, create
// a fresh instance of c1. Returns the decoded steps against the initial
// state's ids.
Plan sample_plan(const PlanningProblem &p) {
    ElementId n1 = node_by_name(p.initial, "n1");
    ElementId n2 = node_by_name(p.initial, "n2");
    ElementId c1 = node_by_name(p.initial, "c1");
    // i1 = the instance running on n1, with its runs/instance-of edges.
    ElementId i1 = 0, runs1 = 0, iof1 = 0;
    for (const Edge &e : p.initial.edges()) {
        if (e.type == Symbol("runs") && e.tgt == n1) {
            i1 = e.src;
            runs1 = e.id;
        }
    }
    for (const Edge &e : p.initial.edges())
        if (e.type == Symbol("instance-of") && e.src == i1)
            iof1 = e.id;
    REQUIRE(i1 != 0);

    Plan plan;
    plan.steps.push_back({"deployComponent", {c1, n2}});
    plan.steps.push_back({"destroyInstance", {i1, n1, c1, runs1, iof1}});
    plan.steps.push_back({"shutdownNode", {n1}});
    // createInstance needs the deployed edge created in step 1; it gets
    // id max_id+1 in the state after step 1.
    ElementId deployed = p.initial.max_id() + 1;
    plan.steps.push_back({"createInstance", {c1, n2, deployed}});
    return plan;
}

} // namespace

TEST_CASE("destroyInstance removes the instance and its edges") {
    PlanningProblem p = gen_ecus({2, false});
    const Rule *destroy = p.rule_by_name(sym("destroyInstance"));
    REQUIRE(destroy != nullptr);
    auto apps = applicable_transformations({*destroy}, p.initial);
    REQUIRE(!apps.empty());
    const Morphism &m = apps.front().second;
    TypedGraph result = apply_rule(*destroy, m, p.initial);
    CHECK(result.num_nodes() == p.initial.num_nodes() - 1);
    CHECK(result.num_edges() == p.initial.num_edges() - 2);
    CHECK_FALSE(result.has_node(m.node_image[0]));
    CHECK(no_dangling(result));
}

TEST_CASE("identity rule application is isomorphic to the host") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        TypedGraph host = random_graph(rng, 5, 6);
        GraphBuilder lhs;
        lhs.add_node(host.node(0).type);
        Rule rule = identity_rule(lhs.build());
        auto apps = applicable_transformations({rule}, host);
        REQUIRE(!apps.empty());
        TypedGraph result = apply_rule(rule, apps.front().second, host);
        CHECK(is_isomorphic(result, host));
    }
}

TEST_CASE("deleting a node drops exactly its incident edges") {
    GraphBuilder b;
    ElementId center = b.add_node(sym("A"), sym("center"));
    ElementId o1 = b.add_node(sym("B"));
    ElementId o2 = b.add_node(sym("B"));
    b.add_edge(center, sym("e"), o1);
    b.add_edge(o2, sym("e"), center);
    b.add_edge(center, sym("f"), center);
    ElementId other = b.add_edge(o1, sym("f"), o2);
    TypedGraph host = b.build();

    GraphBuilder lhs;
    lhs.add_node(sym("A"), sym("center"));
    Rule rule;
    rule.name = sym("deleteCenter");
    rule.lhs = lhs.build();
    rule.node_rhs_index = {-1};
    Morphism m;
    m.node_image.push_back(center);
    TypedGraph result = apply_rule(rule, m, host);
    CHECK(result.num_nodes() == 2);
    CHECK(result.num_edges() == 1);
    CHECK(result.has_edge_id(other));
}

TEST_CASE("invalid matches are rejected, host unchanged") {
    PlanningProblem p = gen_ecus({2, false});
    const Rule *shutdown = p.rule_by_name(sym("shutdownNode"));
    Morphism bad;
    bad.node_image.push_back(node_by_name(p.initial, "n1")); // NAC violated
    CHECK_FALSE(is_valid_match(*shutdown, bad, p.initial));
    CHECK_THROWS_AS(apply_rule(*shutdown, bad, p.initial),
                    std::invalid_argument);
}

TEST_CASE("applicable transformations on the initial ECUs state") {
    PlanningProblem p = gen_ecus({2, false});
    auto apps = applicable_transformations(p.rules, p.initial);
    bool shutdown_present = false;
    bool deploy_c1_n2 = false;
    ElementId c1 = node_by_name(p.initial, "c1");
    ElementId n2 = node_by_name(p.initial, "n2");
    for (const auto &[rule, m] : apps) {
        if (rule->name == sym("shutdownNode"))
            shutdown_present = true;
        if (rule->name == sym("deployComponent") && m.node_image[0] == c1 &&
            m.node_image[1] == n2)
            deploy_c1_n2 = true;
    }
    CHECK_FALSE(shutdown_present);
    CHECK(deploy_c1_n2);
    CHECK(applicable_transformations({}, p.initial).empty());
}

TEST_CASE("sample plan validates; permutation fails at the shutdown step") {
    PlanningProblem p = gen_ecus({2, false});
    Plan plan = sample_plan(p);
    PlanValidation v = validate_plan(p, plan);
    CHECK(v.valid);

    Plan swapped = plan;
    std::swap(swapped.steps[1], swapped.steps[2]);
    PlanValidation bad = validate_plan(p, swapped);
    CHECK_FALSE(bad.valid);
    CHECK(bad.failed_step == 1); // shutdown while i1 still runs

    Plan truncated = plan;
    truncated.steps.pop_back();
    PlanValidation incomplete = validate_plan(p, truncated);
    CHECK_FALSE(incomplete.valid);
    CHECK(incomplete.failed_step == truncated.steps.size());
}

TEST_CASE("empty plan is valid iff the initial state is a goal") {
    PlanningProblem p = gen_ecus({2, false});
    CHECK_FALSE(validate_plan(p, Plan{}).valid);
    PlanningProblem trivial = p;
    trivial.target = Pattern{}; // empty pattern matches anything
    CHECK(validate_plan(trivial, Plan{}).valid);
}

TEST_CASE("random derivations: no dangling, supergraph and identity laws") {
    std::mt19937 rng(41);
    int derivations = 0;
    while (derivations < 200) {
        TypedGraph host = random_graph(rng, 4 + static_cast<int>(rng() % 5),
                                       static_cast<int>(rng() % 10));
        Rule rule = random_rule(rng);
        auto apps = applicable_transformations({rule}, host);
        if (apps.empty())
            continue;
        const Morphism &m = apps[rng() % apps.size()].second;
        TypedGraph result = apply_rule(rule, m, host);
        ++derivations;
        CHECK(no_dangling(result));
        if (rule.is_pure_creation())
            CHECK(is_supergraph(host, result));
    }
}
