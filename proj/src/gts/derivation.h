#ifndef GTS_DERIVATION_H
#define GTS_DERIVATION_H

#include "rule.h"

#include <utility>
#include <vector>

namespace gtplan {

// True iff m is a structure/type-valid match of r.lhs into host that
// satisfies all of r's NACs.
bool is_valid_match(const Rule &r, const Morphism &m, const TypedGraph &host);

/*
  SPO direct derivation: removes the images of deleted LHS elements (plus
  dangling edges), adds fresh copies of created RHS elements wired per the
  RHS structure. Preserved elements keep their identity; fresh ids come from
  a per-derivation counter starting above host.max_id(). Parallel edges of
  identical type between identical endpoints are collapsed on creation.
  Throws std::invalid_argument if m is not a valid match.
*/
TypedGraph apply_rule(const Rule &r, const Morphism &m,
                      const TypedGraph &host);

// All (rule, match) pairs applicable to host (NACs satisfied), in
// deterministic order: rule order, then match image encoding.
std::vector<std::pair<const Rule *, Morphism>>
applicable_transformations(const std::vector<Rule> &rules,
                           const TypedGraph &host);

} // namespace gtplan

#endif
