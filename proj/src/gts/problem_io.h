#ifndef GTS_PROBLEM_IO_H
#define GTS_PROBLEM_IO_H

#include "plan.h"
#include "planning_problem.h"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace gtplan {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string &message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line(line) {}
    int line;
};

/*
  Line-oriented problem format:

    problem <name>
    alphabet <Type> <Type> ...
    init
        node <id> <Type> [name <name>]
        edge <id> <src-id> <Type> <tgt-id>
    end
    rule <name>
        lhs
            node ... / edge ...
        end
        rhs
            node ... / edge ...
        end
        nac              # zero or more per rule
            node ... / edge ...
        end
    end
    target
        lhs ... end
        nac ... end      # zero or more
    end

  The rule morphism is given by shared ids: an LHS element whose id also
  occurs in the RHS is preserved, otherwise deleted; RHS elements with fresh
  ids are created. NAC elements sharing an id with an LHS element denote the
  NAC inclusion. '#' starts a comment.
*/
PlanningProblem parse_problem(std::istream &in);
PlanningProblem load_problem(const std::string &path);

void write_problem(std::ostream &out, const PlanningProblem &problem);
void save_problem(const std::string &path, const PlanningProblem &problem);

/*
  Plan format: one step per line,

    <rule-name> <id> <id> ...

  where the ids are the host images of the rule's LHS nodes in index order,
  then its LHS edges in index order.
*/
Plan parse_plan(std::istream &in);
Plan load_plan(const std::string &path);
void write_plan(std::ostream &out, const Plan &plan);
void save_plan(const std::string &path, const Plan &plan);

} // namespace gtplan

#endif
