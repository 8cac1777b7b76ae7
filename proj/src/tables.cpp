#include "cut600/tables.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "cut600/symmetric.hpp"

namespace cut600 {

namespace {

void sort_orbits(std::vector<Table3Orbit>& orbits) {
  std::sort(orbits.begin(), orbits.end(), [](const Table3Orbit& a, const Table3Orbit& b) {
    return std::tie(a.size, a.type, a.point_group) < std::tie(b.size, b.type, b.point_group);
  });
}

std::string canonical(Table3Row row) {
  sort_orbits(row.orbits);
  return format_table3_row(row);
}

}  // namespace

Table3Row table3_row(const CutReport& report) {
  Table3Row row;
  row.size = report.size;
  row.stab_order = report.stabilizer_order;
  row.maximal = report.maximal;
  row.connected = report.simplex_graph_connected;
  for (const auto& o : report.vertex_orbits) row.orbits.push_back({o.size, o.type.label(), o.point_group});
  sort_orbits(row.orbits);
  return row;
}

std::string format_table3_row(const Table3Row& row) {
  std::ostringstream os;
  os << row.size << ',' << row.stab_order << ',' << (row.maximal ? "yes" : "no") << ','
     << (row.connected ? "yes" : "no") << ',';
  for (std::size_t i = 0; i < row.orbits.size(); ++i) {
    const auto& o = row.orbits[i];
    os << (i ? ";" : "") << '(' << o.size << ' ' << o.type << ' ' << o.point_group << ')';
  }
  return os.str();
}

Table3Regeneration regenerate_table3(const Model& model) {
  Table3Regeneration out;
  std::vector<std::pair<int, Cut>> named;
  for (const auto& name : named_cut_names()) {
    const Cut cut = named_cut(model, name);
    named.emplace_back(static_cast<int>(stabilizer(model, cut).size()), min_image(model, cut));
  }

  for (const auto& row : table3_fixture()) {
    const auto found = find_cuts_with_symmetry(model, row.size, row.stab_order);
    if (found.size() != 1) {
      out.notes.push_back("size " + std::to_string(row.size) + " stabilizer " + std::to_string(row.stab_order) +
                          ": " + std::to_string(found.size()) + " orbits, expected 1");
      continue;
    }
    for (const auto& [stab, cut] : named)
      if (cut.size() == row.size && stab == row.stab_order && cut != found.front())
        out.notes.push_back("named cut " + cut.str() + " differs from search result " + found.front().str());
    out.reports.push_back(classify_cut(model, found.front()));
  }
  return out;
}

std::vector<std::string> diff_table3(const std::vector<Table3Row>& expected, const std::vector<Table3Row>& actual) {
  std::vector<std::string> diff;
  std::vector<std::string> e, a;
  for (const auto& r : expected) e.push_back(canonical(r));
  for (const auto& r : actual) a.push_back(canonical(r));
  std::sort(e.begin(), e.end());
  std::sort(a.begin(), a.end());
  std::vector<std::string> missing, extra;
  std::set_difference(e.begin(), e.end(), a.begin(), a.end(), std::back_inserter(missing));
  std::set_difference(a.begin(), a.end(), e.begin(), e.end(), std::back_inserter(extra));
  for (const auto& m : missing) diff.push_back("missing: " + m);
  for (const auto& x : extra) diff.push_back("unexpected: " + x);
  return diff;
}

}  // namespace cut600
