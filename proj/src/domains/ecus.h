#ifndef DOMAINS_ECUS_H
#define DOMAINS_ECUS_H

#include "../gts/planning_problem.h"

namespace gtplan {

/*
  ECU deployment domain: components deployed on ECUs, instances running on
  them, ECUs that can be shut down. The generated instance has n_ecus ECUs
  n1..nk, one component per ECU and one running instance per component;
  extra_instance adds a second instance of c1 on n1. The target requires
  every second ECU (n1, n3, ...) to be down and every component to remain
  instantiated, with NACs forbidding instances of the displaced components
  from still running on their down ECU.
*/
struct EcusSpec {
    int n_ecus = 2;
    bool extra_instance = false;
};

// Throws std::invalid_argument if spec.n_ecus < 1.
PlanningProblem gen_ecus(const EcusSpec &spec);

} // namespace gtplan

#endif
