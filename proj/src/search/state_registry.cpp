#include "state_registry.h"

#include "../graph/isomorphism.h"

namespace gtplan {

std::pair<int, bool> StateRegistry::insert(const TypedGraph &state) {
    CanonicalKey key = canonical_key(state);
    std::vector<int> &bucket = buckets_[key];
    for (int id : bucket)
        if (is_isomorphic(states_[id], state))
            return {id, false};
    int id = static_cast<int>(states_.size());
    states_.push_back(state);
    bucket.push_back(id);
    return {id, true};
}

} // namespace gtplan
