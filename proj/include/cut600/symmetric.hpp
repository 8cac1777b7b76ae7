#ifndef CUT600_SYMMETRIC_HPP
#define CUT600_SYMMETRIC_HPP

#include <vector>

#include "cut600/group.hpp"
#include "cut600/model.hpp"

namespace cut600 {

/// Conjugacy classes of the symmetry group as sorted element lists,
/// ordered by smallest element (the identity class first).
std::vector<std::vector<int>> conjugacy_classes(const Model& model);

/// Lex-min representatives of every orbit of independent sets with the
/// given size and stabilizer order, sorted.
///
/// Such a stabilizer contains an element of order p for the largest prime
/// p dividing stab_order, and a conjugate of every such element. So the
/// sets are found among the independent unions of <g>-orbits, for one g
/// per conjugacy class of order-p elements. stab_order must be > 1.
std::vector<Cut> find_cuts_with_symmetry(const Model& model, int size, int stab_order);

}  // namespace cut600

#endif  // CUT600_SYMMETRIC_HPP
