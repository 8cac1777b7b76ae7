#ifndef CUT600_INDEPENDENCE_HPP
#define CUT600_INDEPENDENCE_HPP

#include <vector>

#include "cut600/group.hpp"
#include "cut600/model.hpp"

namespace cut600 {

/// Every independent set of exactly `size` vertices containing vertex 0,
/// by branch and bound. The bound covers the remaining candidates greedily
/// with cliques taken from the tetrahedral cells; an independent set meets
/// each clique at most once. Since the group is vertex-transitive, an empty
/// result means no independent set of that size exists at all.
std::vector<Cut> independent_sets_through_zero(const Model& model, int size);

/// Largest independent set size: searches downwards from the clique-cover
/// bound until some set through vertex 0 exists.
int independence_number(const Model& model);

}  // namespace cut600

#endif  // CUT600_INDEPENDENCE_HPP
