#ifndef CUT600_CLASSIFY_HPP
#define CUT600_CLASSIFY_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cut600/group.hpp"
#include "cut600/model.hpp"

namespace cut600 {

/// How a surviving vertex v meets the icosahedral facets: k = |C n N(v)|,
/// and for k = 2 whether the two removed neighbours are antipodal in the
/// vertex figure of v.
struct LocalType {
  int k = 0;
  bool antipodal = false;

  /// Case label: I (k=0), II (k=1), III (k=2, antipodal),
  /// IV (k=2, not antipodal), V (k=3).
  std::string label() const;
  friend bool operator==(const LocalType&, const LocalType&) = default;
};

/// Precondition: v is not in the cut (std::invalid_argument otherwise).
LocalType local_type(const Model& model, int v, const Cut& cut);

/// True iff every vertex outside the cut is adjacent to a member.
bool is_maximal(const Model& model, const Cut& cut);

/// Cells avoiding the cut, adjacent when they share a triangle.
struct SimplexGraph {
  std::vector<int> cells;                   // indices into Model::cells()
  std::vector<std::vector<int>> neighbors;  // positions into `cells`
  int components = 0;
};
SimplexGraph simplex_graph(const Model& model, const Cut& cut);
bool simplex_graph_connected(const Model& model, const Cut& cut);

/// Orbits of the surviving cells under the stabilizer of the cut, as lists
/// of indices into Model::cells(), ordered by smallest member.
std::vector<std::vector<int>> cell_orbits(const Model& model, const Cut& cut);

/// Schoenflies symbol of a group of symmetries fixing a common vertex,
/// acting on that vertex's figure. `elements` are group indices. Known
/// families get their symbol (C1, Cs, Ci, Cn, Cnv, Cnh, S2n, Dn, Dnh, Dnd,
/// T, Td, Th, O, Oh, I, Ih); anything else gets "order-n (chiral|achiral)".
std::string point_group_label(const Model& model, std::span<const int> elements);

struct VertexOrbit {
  int size = 0;
  int representative = 0;  // smallest vertex of the orbit
  LocalType type;
  int stabilizer_order = 0;  // order of the stabilizer of a vertex within stab(C)
  std::string point_group;
};

/// Orbits of the 120 - |C| surviving vertices under stab(C), ordered by
/// representative. Throws std::logic_error if the local type is not
/// constant on an orbit.
std::vector<VertexOrbit> vertex_orbit_profile(const Model& model, const Cut& cut);

/// Named special cuts: "snub24" (24-cell), "cross8" (unit-coordinate
/// cross-polytope), "cross16" (half-coordinate vertices) and "antiprism10"
/// (alternate vertices of two orthogonal decagons).
Cut named_cut(const Model& model, std::string_view name);
std::vector<std::string> named_cut_names();

struct CutReport {
  Cut cut;
  int size = 0;
  int stabilizer_order = 0;
  bool maximal = false;
  bool simplex_graph_connected = false;
  int simplex_components = 0;
  int surviving_cells = 0;
  std::vector<VertexOrbit> vertex_orbits;

  /// Single-line JSON record:
  /// {"cut":[...],"size":n,"stab_order":n,"maximal":b,"connected":b,
  ///  "simplex_components":n,"surviving_cells":n,
  ///  "vertex_orbits":[{"size":n,"type":"II","k":1,"antipodal":b,
  ///                    "vertex_stab_order":n,"point_group":"Cs"},...]}
  std::string to_json() const;
  /// "size,stab_order,maximal,connected,vertex_orbits" with orbits written
  /// as "(96 V C3v);(...)" and yes/no flags, the layout of the table fixture.
  static std::string csv_header();
  std::string csv_row() const;
  /// Multi-line human-readable form.
  std::string table() const;
};

/// Throws std::invalid_argument if the cut is not independent.
CutReport classify_cut(const Model& model, const Cut& cut);

}  // namespace cut600

#endif  // CUT600_CLASSIFY_HPP
