#include "problem_io.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace gtplan {

namespace {

struct LineReader {
    std::istream &in;
    int line_no = 0;
    std::vector<std::string> tokens;

    explicit LineReader(std::istream &in) : in(in) {}

    // Advances to the next non-empty line; returns false on end of input.
    bool next() {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            size_t hash = line.find('#');
            if (hash != std::string::npos)
                line.erase(hash);
            tokens.clear();
            std::istringstream split(line);
            std::string tok;
            while (split >> tok)
                tokens.push_back(tok);
            if (!tokens.empty())
                return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string &message) const {
        throw ParseError(line_no, message);
    }

    void expect_arity(size_t n) const {
        if (tokens.size() != n)
            fail("expected " + std::to_string(n) + " tokens, got " +
                 std::to_string(tokens.size()));
    }
};

ElementId parse_id(LineReader &r, const std::string &tok) {
    unsigned long value = 0;
    try {
        size_t pos = 0;
        value = std::stoul(tok, &pos);
        if (pos != tok.size())
            throw std::invalid_argument(tok);
    } catch (const std::exception &) {
        r.fail("invalid element id: " + tok);
    }
    if (value == 0 || value > 0xffffffffUL)
        r.fail("element id out of range: " + tok);
    return static_cast<ElementId>(value);
}

class ProblemParser {
public:
    explicit ProblemParser(std::istream &in) : r(in) {}

    PlanningProblem parse() {
        PlanningProblem problem;
        if (!r.next() || r.tokens[0] != "problem")
            r.fail("expected 'problem <name>'");
        r.expect_arity(2);
        problem.name = r.tokens[1];

        if (!r.next() || r.tokens[0] != "alphabet")
            r.fail("expected 'alphabet <Type> ...'");
        if (r.tokens.size() < 2)
            r.fail("alphabet must list at least one type");
        for (size_t i = 1; i < r.tokens.size(); ++i) {
            Symbol type(r.tokens[i]);
            if (alphabet.count(type))
                r.fail("duplicate alphabet type: " + r.tokens[i]);
            alphabet.insert(type);
            problem.alphabet.push_back(type);
        }

        bool saw_init = false;
        bool saw_target = false;
        while (r.next()) {
            if (r.tokens[0] == "init") {
                if (saw_init)
                    r.fail("duplicate init section");
                r.expect_arity(1);
                problem.initial = parse_graph_block();
                saw_init = true;
            } else if (r.tokens[0] == "rule") {
                r.expect_arity(2);
                problem.rules.push_back(parse_rule(r.tokens[1]));
            } else if (r.tokens[0] == "target") {
                if (saw_target)
                    r.fail("duplicate target section");
                r.expect_arity(1);
                problem.target = parse_pattern_block("target");
                saw_target = true;
            } else {
                r.fail("unexpected token: " + r.tokens[0]);
            }
        }
        if (!saw_init)
            r.fail("missing init section");
        if (!saw_target)
            r.fail("missing target section");
        std::unordered_set<Symbol> rule_names;
        for (const Rule &rule : problem.rules)
            if (!rule_names.insert(rule.name).second)
                r.fail("duplicate rule name: " + rule.name.str());
        return problem;
    }

private:
    LineReader r;
    std::unordered_set<Symbol> alphabet;

    Symbol parse_type(const std::string &tok) {
        Symbol type(tok);
        if (!alphabet.count(type))
            r.fail("type not in alphabet: " + tok);
        return type;
    }

    // Reads node/edge lines until 'end'.
    TypedGraph parse_graph_block() {
        GraphBuilder builder;
        while (true) {
            if (!r.next())
                r.fail("unexpected end of input inside graph block");
            if (r.tokens[0] == "end") {
                r.expect_arity(1);
                break;
            }
            if (r.tokens[0] == "node") {
                if (r.tokens.size() != 3 &&
                    !(r.tokens.size() == 5 && r.tokens[3] == "name"))
                    r.fail("expected 'node <id> <Type> [name <name>]'");
                Symbol name =
                    r.tokens.size() == 5 ? Symbol(r.tokens[4]) : Symbol();
                builder.add_node_with_id(parse_id(r, r.tokens[1]),
                                         parse_type(r.tokens[2]), name);
            } else if (r.tokens[0] == "edge") {
                r.expect_arity(5);
                builder.add_edge_with_id(
                    parse_id(r, r.tokens[1]), parse_id(r, r.tokens[2]),
                    parse_type(r.tokens[3]), parse_id(r, r.tokens[4]));
            } else {
                r.fail("expected 'node', 'edge' or 'end'");
            }
        }
        try {
            return builder.build();
        } catch (const std::logic_error &err) {
            r.fail(err.what());
        }
    }

    // The embedding of base into the block's graph, given by shared ids.
    // Every base element must occur in the block with identical attributes.
    Nac parse_nac_block(const TypedGraph &base) {
        Nac nac;
        nac.graph = parse_graph_block();
        for (int i = 0; i < base.num_nodes(); ++i) {
            const Node &b = base.node(i);
            int j = nac.graph.node_index(b.id);
            if (j < 0)
                r.fail("nac is missing node " + std::to_string(b.id));
            const Node &n = nac.graph.node(j);
            if (n.type != b.type || n.name != b.name)
                r.fail("nac node " + std::to_string(b.id) +
                       " disagrees with the pattern");
            nac.lhs_node_to_nac.push_back(j);
        }
        for (int i = 0; i < base.num_edges(); ++i) {
            const Edge &b = base.edge(i);
            int j = nac.graph.edge_index(b.id);
            if (j < 0)
                r.fail("nac is missing edge " + std::to_string(b.id));
            const Edge &e = nac.graph.edge(j);
            if (e.type != b.type || e.src != b.src || e.tgt != b.tgt)
                r.fail("nac edge " + std::to_string(b.id) +
                       " disagrees with the pattern");
            nac.lhs_edge_to_nac.push_back(j);
        }
        return nac;
    }

    Pattern parse_pattern_block(const std::string &what) {
        Pattern pattern;
        if (!r.next() || r.tokens[0] != "lhs")
            r.fail("expected 'lhs' inside " + what);
        r.expect_arity(1);
        pattern.lhs = parse_graph_block();
        while (true) {
            if (!r.next())
                r.fail("unexpected end of input inside " + what);
            if (r.tokens[0] == "end") {
                r.expect_arity(1);
                return pattern;
            }
            if (r.tokens[0] != "nac")
                r.fail("expected 'nac' or 'end'");
            r.expect_arity(1);
            pattern.nacs.push_back(parse_nac_block(pattern.lhs));
        }
    }

    Rule parse_rule(const std::string &name) {
        Rule rule;
        rule.name = Symbol(name);
        if (!r.next() || r.tokens[0] != "lhs")
            r.fail("expected 'lhs' inside rule " + name);
        r.expect_arity(1);
        rule.lhs = parse_graph_block();
        if (!r.next() || r.tokens[0] != "rhs")
            r.fail("expected 'rhs' inside rule " + name);
        r.expect_arity(1);
        rule.rhs = parse_graph_block();
        link_rule_morphism(rule);
        while (true) {
            if (!r.next())
                r.fail("unexpected end of input inside rule " + name);
            if (r.tokens[0] == "end") {
                r.expect_arity(1);
                return rule;
            }
            if (r.tokens[0] != "nac")
                r.fail("expected 'nac' or 'end'");
            r.expect_arity(1);
            rule.nacs.push_back(parse_nac_block(rule.lhs));
        }
    }

    // Shared ids between LHS and RHS define the rule morphism.
    void link_rule_morphism(Rule &rule) {
        for (int i = 0; i < rule.lhs.num_nodes(); ++i) {
            const Node &l = rule.lhs.node(i);
            int j = rule.rhs.node_index(l.id);
            if (j >= 0) {
                const Node &rnode = rule.rhs.node(j);
                if (rnode.type != l.type || rnode.name != l.name)
                    r.fail("rule " + rule.name.str() + ": preserved node " +
                           std::to_string(l.id) + " changes attributes");
            }
            rule.node_rhs_index.push_back(j);
        }
        for (int i = 0; i < rule.lhs.num_edges(); ++i) {
            const Edge &l = rule.lhs.edge(i);
            int j = rule.rhs.edge_index(l.id);
            if (j >= 0) {
                const Edge &e = rule.rhs.edge(j);
                if (e.type != l.type || e.src != l.src || e.tgt != l.tgt)
                    r.fail("rule " + rule.name.str() + ": preserved edge " +
                           std::to_string(l.id) + " changes attributes");
                if (!rule.lhs.has_node(l.src) || !rule.lhs.has_node(l.tgt))
                    r.fail("rule " + rule.name.str() + ": preserved edge " +
                           std::to_string(l.id) + " has inconsistent ends");
                int src_idx = rule.lhs.node_index(l.src);
                int tgt_idx = rule.lhs.node_index(l.tgt);
                if (rule.node_rhs_index[src_idx] < 0 ||
                    rule.node_rhs_index[tgt_idx] < 0)
                    r.fail("rule " + rule.name.str() + ": preserved edge " +
                           std::to_string(l.id) + " loses an endpoint");
            } else {
                // Deleted edges are fine even if their endpoints survive.
            }
            rule.edge_rhs_index.push_back(j);
        }
        // Created RHS edges may only touch preserved or created nodes, which
        // GraphBuilder already guarantees (no dangling edges in rhs).
    }
};

void write_graph_block(std::ostream &out, const TypedGraph &g,
                       const std::string &indent) {
    for (const Node &n : g.nodes()) {
        out << indent << "node " << n.id << ' ' << n.type.str();
        if (!n.name.empty())
            out << " name " << n.name.str();
        out << '\n';
    }
    for (const Edge &e : g.edges())
        out << indent << "edge " << e.id << ' ' << e.src << ' '
            << e.type.str() << ' ' << e.tgt << '\n';
}

void write_pattern(std::ostream &out, const Pattern &p) {
    out << "    lhs\n";
    write_graph_block(out, p.lhs, "        ");
    out << "    end\n";
    for (const Nac &nac : p.nacs) {
        out << "    nac\n";
        write_graph_block(out, nac.graph, "        ");
        out << "    end\n";
    }
}

} // namespace

PlanningProblem parse_problem(std::istream &in) {
    return ProblemParser(in).parse();
}

PlanningProblem load_problem(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open problem file: " + path);
    return parse_problem(in);
}

void write_problem(std::ostream &out, const PlanningProblem &problem) {
    out << "problem " << problem.name << '\n';
    out << "alphabet";
    for (Symbol type : problem.alphabet)
        out << ' ' << type.str();
    out << '\n';
    out << "init\n";
    write_graph_block(out, problem.initial, "    ");
    out << "end\n";
    for (const Rule &rule : problem.rules) {
        out << "rule " << rule.name.str() << '\n';
        out << "    lhs\n";
        write_graph_block(out, rule.lhs, "        ");
        out << "    end\n";
        out << "    rhs\n";
        write_graph_block(out, rule.rhs, "        ");
        out << "    end\n";
        for (const Nac &nac : rule.nacs) {
            out << "    nac\n";
            write_graph_block(out, nac.graph, "        ");
            out << "    end\n";
        }
        out << "end\n";
    }
    out << "target\n";
    write_pattern(out, problem.target);
    out << "end\n";
}

void save_problem(const std::string &path, const PlanningProblem &problem) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    write_problem(out, problem);
}

Plan parse_plan(std::istream &in) {
    Plan plan;
    LineReader r(in);
    while (r.next()) {
        PlanStep step;
        step.rule_name = r.tokens[0];
        for (size_t i = 1; i < r.tokens.size(); ++i)
            step.match_encoding.push_back(parse_id(r, r.tokens[i]));
        plan.steps.push_back(std::move(step));
    }
    return plan;
}

Plan load_plan(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open plan file: " + path);
    return parse_plan(in);
}

void write_plan(std::ostream &out, const Plan &plan) {
    for (const PlanStep &step : plan.steps) {
        out << step.rule_name;
        for (ElementId id : step.match_encoding)
            out << ' ' << id;
        out << '\n';
    }
}

void save_plan(const std::string &path, const Plan &plan) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    write_plan(out, plan);
}

} // namespace gtplan
