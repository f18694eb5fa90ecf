#include "ecus.h"

#include <stdexcept>
#include <string>

namespace gtplan {

namespace {

const Symbol kEcu("ECU");
const Symbol kComponent("Component");
const Symbol kInstance("Instance");
const Symbol kDeployed("deployed");
const Symbol kRuns("runs");
const Symbol kInstanceOf("instance-of");
const Symbol kDown("down");

// NAC graphs repeat the whole LHS (same ids) plus the forbidden extension.

Rule make_deploy_component() {
    Rule rule;
    rule.name = Symbol("deployComponent");

    GraphBuilder lhs;
    lhs.add_node_with_id(1, kComponent);
    lhs.add_node_with_id(2, kEcu);
    rule.lhs = lhs.build();

    GraphBuilder rhs;
    rhs.add_node_with_id(1, kComponent);
    rhs.add_node_with_id(2, kEcu);
    rhs.add_edge_with_id(3, 1, kDeployed, 2);
    rule.rhs = rhs.build();

    rule.node_rhs_index = {0, 1};

    // Component already deployed on this ECU.
    GraphBuilder nac1;
    nac1.add_node_with_id(1, kComponent);
    nac1.add_node_with_id(2, kEcu);
    nac1.add_edge_with_id(3, 1, kDeployed, 2);
    rule.nacs.push_back({nac1.build(), {0, 1}, {}});

    // ECU is down.
    GraphBuilder nac2;
    nac2.add_node_with_id(1, kComponent);
    nac2.add_node_with_id(2, kEcu);
    nac2.add_edge_with_id(3, 2, kDown, 2);
    rule.nacs.push_back({nac2.build(), {0, 1}, {}});
    return rule;
}

Rule make_create_instance() {
    Rule rule;
    rule.name = Symbol("createInstance");

    GraphBuilder lhs;
    lhs.add_node_with_id(1, kComponent);
    lhs.add_node_with_id(2, kEcu);
    lhs.add_edge_with_id(3, 1, kDeployed, 2);
    rule.lhs = lhs.build();

    GraphBuilder rhs;
    rhs.add_node_with_id(1, kComponent);
    rhs.add_node_with_id(2, kEcu);
    rhs.add_edge_with_id(3, 1, kDeployed, 2);
    rhs.add_node_with_id(4, kInstance);
    rhs.add_edge_with_id(5, 4, kRuns, 2);
    rhs.add_edge_with_id(6, 4, kInstanceOf, 1);
    rule.rhs = rhs.build();

    rule.node_rhs_index = {0, 1};
    rule.edge_rhs_index = {0};

    // Some instance of this component already exists (anywhere).
    GraphBuilder nac1;
    nac1.add_node_with_id(1, kComponent);
    nac1.add_node_with_id(2, kEcu);
    nac1.add_edge_with_id(3, 1, kDeployed, 2);
    nac1.add_node_with_id(4, kInstance);
    nac1.add_edge_with_id(5, 4, kInstanceOf, 1);
    rule.nacs.push_back({nac1.build(), {0, 1}, {0}});

    // ECU is down.
    GraphBuilder nac2;
    nac2.add_node_with_id(1, kComponent);
    nac2.add_node_with_id(2, kEcu);
    nac2.add_edge_with_id(3, 1, kDeployed, 2);
    nac2.add_edge_with_id(4, 2, kDown, 2);
    rule.nacs.push_back({nac2.build(), {0, 1}, {0}});
    return rule;
}

Rule make_destroy_instance() {
    Rule rule;
    rule.name = Symbol("destroyInstance");

    GraphBuilder lhs;
    lhs.add_node_with_id(1, kInstance);
    lhs.add_node_with_id(2, kEcu);
    lhs.add_node_with_id(3, kComponent);
    lhs.add_edge_with_id(4, 1, kRuns, 2);
    lhs.add_edge_with_id(5, 1, kInstanceOf, 3);
    rule.lhs = lhs.build();

    GraphBuilder rhs;
    rhs.add_node_with_id(2, kEcu);
    rhs.add_node_with_id(3, kComponent);
    rule.rhs = rhs.build();

    rule.node_rhs_index = {-1, 0, 1};
    rule.edge_rhs_index = {-1, -1};
    return rule;
}

Rule make_shutdown_node() {
    Rule rule;
    rule.name = Symbol("shutdownNode");

    GraphBuilder lhs;
    lhs.add_node_with_id(1, kEcu);
    rule.lhs = lhs.build();

    GraphBuilder rhs;
    rhs.add_node_with_id(1, kEcu);
    rhs.add_edge_with_id(2, 1, kDown, 1);
    rule.rhs = rhs.build();

    rule.node_rhs_index = {0};

    // Some instance still runs on the ECU.
    GraphBuilder nac1;
    nac1.add_node_with_id(1, kEcu);
    nac1.add_node_with_id(2, kInstance);
    nac1.add_edge_with_id(3, 2, kRuns, 1);
    rule.nacs.push_back({nac1.build(), {0}, {}});

    // ECU is already down.
    GraphBuilder nac2;
    nac2.add_node_with_id(1, kEcu);
    nac2.add_edge_with_id(2, 1, kDown, 1);
    rule.nacs.push_back({nac2.build(), {0}, {}});
    return rule;
}

} // namespace

PlanningProblem gen_ecus(const EcusSpec &spec) {
    if (spec.n_ecus < 1)
        throw std::invalid_argument("n_ecus must be at least 1");
    int n = spec.n_ecus;

    PlanningProblem problem;
    problem.name = "ecus-" + std::to_string(n) +
                   (spec.extra_instance ? "x" : "");
    problem.alphabet = {kEcu,  kComponent, kInstance, kDeployed,
                        kRuns, kInstanceOf, kDown};
    problem.rules = {make_deploy_component(), make_create_instance(),
                     make_destroy_instance(), make_shutdown_node()};

    // One ECU / component / running instance per column, as in the 2-ECU
    // base topology.
    GraphBuilder init;
    std::vector<ElementId> ecu(n), comp(n);
    for (int j = 0; j < n; ++j) {
        ecu[j] = init.add_node(kEcu, Symbol("n" + std::to_string(j + 1)));
        comp[j] = init.add_node(kComponent,
                                Symbol("c" + std::to_string(j + 1)));
    }
    for (int j = 0; j < n; ++j) {
        ElementId inst = init.add_node(kInstance);
        init.add_edge(comp[j], kDeployed, ecu[j]);
        init.add_edge(inst, kRuns, ecu[j]);
        init.add_edge(inst, kInstanceOf, comp[j]);
    }
    if (spec.extra_instance) {
        ElementId inst = init.add_node(kInstance);
        init.add_edge(inst, kRuns, ecu[0]);
        init.add_edge(inst, kInstanceOf, comp[0]);
    }
    problem.initial = init.build();

    // Target: every second ECU down (n1, n3, ...), every component still
    // instantiated. One NAC per down ECU forbids an instance of its
    // displaced component from running on it.
    GraphBuilder target;
    std::vector<ElementId> t_ecu;
    std::vector<ElementId> t_comp(n);
    std::vector<int> down_cols;
    for (int j = 0; j < n; j += 2)
        if (static_cast<int>(down_cols.size()) < n / 2)
            down_cols.push_back(j);
    for (int j : down_cols) {
        ElementId e = target.add_node(kEcu, Symbol("n" + std::to_string(j + 1)));
        target.add_edge(e, kDown, e);
        t_ecu.push_back(e);
    }
    for (int j = 0; j < n; ++j) {
        t_comp[j] = target.add_node(kComponent,
                                    Symbol("c" + std::to_string(j + 1)));
        ElementId inst = target.add_node(kInstance);
        target.add_edge(inst, kInstanceOf, t_comp[j]);
    }
    problem.target.lhs = target.build();

    for (size_t k = 0; k < down_cols.size(); ++k) {
        int j = down_cols[k];
        GraphBuilder nac(problem.target.lhs);
        ElementId inst = nac.add_node(kInstance);
        nac.add_edge(inst, kInstanceOf, t_comp[j]);
        nac.add_edge(inst, kRuns, t_ecu[k]);
        Nac forbidden;
        forbidden.graph = nac.build();
        for (int i = 0; i < problem.target.lhs.num_nodes(); ++i)
            forbidden.lhs_node_to_nac.push_back(
                forbidden.graph.node_index(problem.target.lhs.node(i).id));
        for (int i = 0; i < problem.target.lhs.num_edges(); ++i)
            forbidden.lhs_edge_to_nac.push_back(
                forbidden.graph.edge_index(problem.target.lhs.edge(i).id));
        problem.target.nacs.push_back(std::move(forbidden));
    }
    return problem;
}

} // namespace gtplan
