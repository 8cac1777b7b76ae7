#ifndef CUT600_TABLES_HPP
#define CUT600_TABLES_HPP

#include <string>
#include <vector>

#include "cut600/classify.hpp"
#include "cut600/fixtures.hpp"
#include "cut600/model.hpp"

namespace cut600 {

/// The fixture form of a report, orbits sorted by (size, type, group).
Table3Row table3_row(const CutReport& report);

/// "24,576,yes,no,(96 V C3v)" with orbits in the row's own order.
std::string format_table3_row(const Table3Row& row);

struct Table3Regeneration {
  std::vector<CutReport> reports;  // one per fixture row, fixture order
  std::vector<std::string> notes;  // problems found while regenerating
};

/// For each fixture row, finds all orbits of independent sets with that
/// size and stabilizer order (there must be exactly one) and classifies it.
/// Rows realised by a named cut must agree with it up to symmetry.
Table3Regeneration regenerate_table3(const Model& model);

/// Differences between the fixture and regenerated rows; orbit order
/// within a row does not matter.
std::vector<std::string> diff_table3(const std::vector<Table3Row>& expected,
                                     const std::vector<Table3Row>& actual);

}  // namespace cut600

#endif  // CUT600_TABLES_HPP
