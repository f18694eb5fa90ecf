#ifndef SEARCH_STATE_REGISTRY_H
#define SEARCH_STATE_REGISTRY_H

#include "../graph/canonical.h"

#include <unordered_map>
#include <vector>

namespace gtplan {

/*
  Duplicate detection up to isomorphism: states are bucketed by canonical
  key and disambiguated with the exact isomorphism test, so two registered
  states are never isomorphic even across hash collisions.
*/
class StateRegistry {
public:
    // Returns (state id, true) for a fresh state, (existing id, false) for
    // a duplicate.
    std::pair<int, bool> insert(const TypedGraph &state);

    const TypedGraph &state(int id) const { return states_[id]; }
    int size() const { return static_cast<int>(states_.size()); }

private:
    std::vector<TypedGraph> states_;
    std::unordered_map<CanonicalKey, std::vector<int>> buckets_;
};

} // namespace gtplan

#endif
