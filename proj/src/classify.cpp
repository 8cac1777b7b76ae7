#include "cut600/classify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cut600 {

namespace {

// Two neighbours w1, w2 of v are antipodal in the vertex figure iff
// w1 + w2 = phi v, which for unit vectors means <w1, w2> = (phi - 1)/2,
// i.e. 2(phi - 1) at the stored 2x scale.
constexpr GoldenInt kFigureAntipodeInner{-2, 2};

// Element traces of the 2x-scaled matrices: a reflection of the vertex
// figure has 4D trace 2, the central inversion has 4D trace -2.
constexpr GoldenInt kReflectionTrace{4, 0};
constexpr GoldenInt kInversionTrace{-4, 0};

std::string roman(const LocalType& t) {
  switch (t.k) {
    case 0: return "I";
    case 1: return "II";
    case 2: return t.antipodal ? "III" : "IV";
    case 3: return "V";
    default: return "k" + std::to_string(t.k);
  }
}

}  // namespace

std::string LocalType::label() const { return roman(*this); }

LocalType local_type(const Model& model, int v, const Cut& cut) {
  if (cut.contains(v)) throw std::invalid_argument("local_type: vertex " + std::to_string(v) + " is in the cut");
  const auto removed = (model.neighbors(v) & cut.bits()).members();
  LocalType t;
  t.k = static_cast<int>(removed.size());
  if (t.k == 2) t.antipodal = inner4(model.vertex(removed[0]), model.vertex(removed[1])) == kFigureAntipodeInner;
  return t;
}

bool is_maximal(const Model& model, const Cut& cut) {
  VertexSet covered = cut.bits();
  for (int c : cut) covered |= model.neighbors(c);
  return covered == VertexSet::all();
}

SimplexGraph simplex_graph(const Model& model, const Cut& cut) {
  SimplexGraph g;
  const VertexSet removed = cut.bits();
  const auto& cells = model.cells();
  std::vector<int> position(cells.size(), -1);
  for (int c = 0; c < static_cast<int>(cells.size()); ++c) {
    bool keep = true;
    for (Vertex v : cells[c]) keep = keep && !removed.test(v);
    if (keep) {
      position[c] = static_cast<int>(g.cells.size());
      g.cells.push_back(c);
    }
  }

  std::map<std::array<Vertex, 3>, std::vector<int>> by_face;
  for (int i = 0; i < static_cast<int>(g.cells.size()); ++i) {
    const Cell& cell = cells[g.cells[i]];
    for (int skip = 0; skip < 4; ++skip) {
      std::array<Vertex, 3> face{};
      for (int j = 0, n = 0; j < 4; ++j)
        if (j != skip) face[n++] = cell[j];
      by_face[face].push_back(i);
    }
  }
  g.neighbors.assign(g.cells.size(), {});
  for (const auto& [face, owners] : by_face) {
    if (owners.size() == 2) {
      g.neighbors[owners[0]].push_back(owners[1]);
      g.neighbors[owners[1]].push_back(owners[0]);
    }
  }
  for (auto& n : g.neighbors) std::sort(n.begin(), n.end());

  std::vector<char> seen(g.cells.size(), 0);
  for (int s = 0; s < static_cast<int>(g.cells.size()); ++s) {
    if (seen[s]) continue;
    ++g.components;
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int y : g.neighbors[x])
        if (!seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
    }
  }
  return g;
}

bool simplex_graph_connected(const Model& model, const Cut& cut) {
  return simplex_graph(model, cut).components <= 1;
}

std::vector<std::vector<int>> cell_orbits(const Model& model, const Cut& cut) {
  const auto stab = stabilizer(model, cut);
  const auto& cells = model.cells();
  std::map<Cell, int> index;
  for (int c = 0; c < static_cast<int>(cells.size()); ++c) index.emplace(cells[c], c);

  const VertexSet removed = cut.bits();
  std::vector<int> orbit_of(cells.size(), -1);
  std::vector<std::vector<int>> orbits;
  for (int c = 0; c < static_cast<int>(cells.size()); ++c) {
    bool keep = true;
    for (Vertex v : cells[c]) keep = keep && !removed.test(v);
    if (!keep || orbit_of[c] >= 0) continue;
    std::vector<int> orbit;
    for (int g : stab) {
      Cell img;
      for (int i = 0; i < 4; ++i) img[i] = model.perm(g)[cells[c][i]];
      std::sort(img.begin(), img.end());
      const int d = index.at(img);
      if (orbit_of[d] < 0) {
        orbit_of[d] = static_cast<int>(orbits.size());
        orbit.push_back(d);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

std::string point_group_label(const Model& model, std::span<const int> elements) {
  const int n = static_cast<int>(elements.size());
  std::vector<int> rotation_orders;
  int reflections = 0;
  bool inversion = false;
  for (int g : elements) {
    const int order = model.element_order(g);
    if (!model.group()[g].conjugating) {
      rotation_orders.push_back(order);
      continue;
    }
    const GoldenInt tr = trace(model.element_matrix(g));
    if (order == 2 && tr == kReflectionTrace) ++reflections;
    if (tr == kInversionTrace) inversion = true;
  }
  const int m = static_cast<int>(rotation_orders.size());
  const bool chiral = m == n;
  const int top = rotation_orders.empty() ? 0 : *std::max_element(rotation_orders.begin(), rotation_orders.end());
  const std::string fallback = "order-" + std::to_string(n) + (chiral ? " (chiral)" : " (achiral)");
  if (m == 0 || (!chiral && 2 * m != n)) return fallback;

  enum class Kind { Cyclic, Dihedral, T, O, I, Unknown } kind;
  if (top == m) {
    kind = Kind::Cyclic;
  } else if (m % 2 == 0 && top == m / 2) {
    kind = Kind::Dihedral;
  } else if (m == 12) {
    kind = Kind::T;
  } else if (m == 24) {
    kind = Kind::O;
  } else if (m == 60) {
    kind = Kind::I;
  } else {
    kind = Kind::Unknown;
  }

  const std::string ms = std::to_string(m), ks = std::to_string(m / 2);
  if (chiral) {
    switch (kind) {
      case Kind::Cyclic: return "C" + ms;
      case Kind::Dihedral: return "D" + ks;
      case Kind::T: return "T";
      case Kind::O: return "O";
      case Kind::I: return "I";
      default: return fallback;
    }
  }
  switch (kind) {
    case Kind::Cyclic:
      if (m == 1) return reflections == 1 ? "Cs" : inversion ? "Ci" : fallback;
      if (reflections == m) return "C" + ms + "v";
      if (reflections == 1) return "C" + ms + "h";
      if (reflections == 0) return "S" + std::to_string(2 * m);
      return fallback;
    case Kind::Dihedral:
      if (reflections == m / 2 + 1) return "D" + ks + "h";
      if (reflections == m / 2) return "D" + ks + "d";
      return fallback;
    case Kind::T: return inversion ? "Th" : "Td";
    case Kind::O: return "Oh";
    case Kind::I: return "Ih";
    default: return fallback;
  }
}

std::vector<VertexOrbit> vertex_orbit_profile(const Model& model, const Cut& cut) {
  const auto stab = stabilizer(model, cut);
  const VertexSet removed = cut.bits();
  std::vector<char> seen(kNumVertices, 0);
  std::vector<VertexOrbit> out;
  for (int v = 0; v < kNumVertices; ++v) {
    if (removed.test(v) || seen[v]) continue;
    VertexOrbit orbit;
    orbit.representative = v;
    orbit.type = local_type(model, v, cut);
    std::vector<int> fixing;
    for (int g : stab) {
      const int w = model.perm(g)[v];
      if (w == v) fixing.push_back(g);
      if (!seen[w]) {
        seen[w] = 1;
        ++orbit.size;
        if (!(local_type(model, w, cut) == orbit.type))
          throw std::logic_error("local type is not constant on a vertex orbit");
      }
    }
    orbit.stabilizer_order = static_cast<int>(fixing.size());
    orbit.point_group = point_group_label(model, fixing);
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<std::string> named_cut_names() { return {"snub24", "cross8", "cross16", "antiprism10"}; }

Cut named_cut(const Model& model, std::string_view name) {
  auto select = [&](auto pred) {
    std::vector<int> out;
    for (int v = 0; v < kNumVertices; ++v)
      if (pred(model.vertex(v))) out.push_back(v);
    return Cut(std::move(out));
  };
  auto rational = [](const Quat& q) {
    for (int i = 0; i < 4; ++i)
      if (q[i].b != 0) return false;
    return true;
  };
  auto unit_axis = [&](const Quat& q) {
    int nonzero = 0;
    for (int i = 0; i < 4; ++i) nonzero += q[i].is_zero() ? 0 : 1;
    return rational(q) && nonzero == 1;
  };

  if (name == "snub24") return select(rational);
  if (name == "cross8") return select(unit_axis);
  if (name == "cross16") return select([&](const Quat& q) { return rational(q) && !unit_axis(q); });
  if (name == "antiprism10") {
    // A decagon through the identity is the cyclic subgroup generated by an
    // icosian of order 10 (real part phi/2); the second ring is the set of
    // vertices orthogonal to its plane.
    const int one = model.index_of(Quat{{2, 0}, {}, {}, {}});
    int gen = -1;
    for (int v = 0; v < kNumVertices && gen < 0; ++v)
      if (model.vertex(v).w == GoldenInt{0, 1}) gen = v;
    std::vector<int> ring1{one};
    for (int p = model.multiply(one, gen); p != one; p = model.multiply(p, gen)) ring1.push_back(p);
    if (ring1.size() != 10) throw std::logic_error("decagon generator does not have order 10");

    std::vector<int> ring2_set;
    for (int v = 0; v < kNumVertices; ++v) {
      bool orthogonal = true;
      for (int r : ring1) orthogonal = orthogonal && inner4(model.vertex(v), model.vertex(r)).is_zero();
      if (orthogonal) ring2_set.push_back(v);
    }
    if (ring2_set.size() != 10) throw std::logic_error("orthogonal ring does not have 10 vertices");
    // Walk the second ring along its edges.
    const VertexSet ring2_bits = VertexSet::of(ring2_set);
    std::vector<int> ring2{ring2_set.front()};
    int prev = -1;
    while (ring2.size() < 10) {
      const VertexSet next = (model.neighbors(ring2.back()) & ring2_bits);
      int pick = -1;
      for (int w : next.members())
        if (w != prev && (ring2.size() < 2 || w != ring2[ring2.size() - 2])) {
          pick = w;
          break;
        }
      if (pick < 0) throw std::logic_error("orthogonal ring is not a cycle");
      prev = ring2.back();
      ring2.push_back(pick);
    }
    std::vector<int> members;
    for (int i = 0; i < 10; i += 2) {
      members.push_back(ring1[i]);
      members.push_back(ring2[i]);
    }
    return Cut::from_unsorted(std::move(members));
  }
  throw std::invalid_argument("unknown named cut '" + std::string(name) + "'");
}

CutReport classify_cut(const Model& model, const Cut& cut) {
  validate_cut(model, cut);
  CutReport r;
  r.cut = cut;
  r.size = cut.size();
  r.stabilizer_order = static_cast<int>(stabilizer(model, cut).size());
  r.maximal = is_maximal(model, cut);
  const SimplexGraph g = simplex_graph(model, cut);
  r.simplex_components = g.components;
  r.simplex_graph_connected = g.components <= 1;
  r.surviving_cells = static_cast<int>(g.cells.size());
  r.vertex_orbits = vertex_orbit_profile(model, cut);
  return r;
}

std::string CutReport::to_json() const {
  nlohmann::ordered_json j;
  j["cut"] = cut.members();
  j["size"] = size;
  j["stab_order"] = stabilizer_order;
  j["maximal"] = maximal;
  j["connected"] = simplex_graph_connected;
  j["simplex_components"] = simplex_components;
  j["surviving_cells"] = surviving_cells;
  j["vertex_orbits"] = nlohmann::ordered_json::array();
  for (const auto& o : vertex_orbits) {
    nlohmann::ordered_json oj;
    oj["size"] = o.size;
    oj["type"] = o.type.label();
    oj["k"] = o.type.k;
    oj["antipodal"] = o.type.antipodal;
    oj["vertex_stab_order"] = o.stabilizer_order;
    oj["point_group"] = o.point_group;
    j["vertex_orbits"].push_back(std::move(oj));
  }
  return j.dump();
}

std::string CutReport::csv_header() { return "size,stab_order,maximal,connected,vertex_orbits"; }

std::string CutReport::csv_row() const {
  std::ostringstream os;
  os << size << ',' << stabilizer_order << ',' << (maximal ? "yes" : "no") << ','
     << (simplex_graph_connected ? "yes" : "no") << ',';
  for (std::size_t i = 0; i < vertex_orbits.size(); ++i) {
    const auto& o = vertex_orbits[i];
    os << (i ? ";" : "") << '(' << o.size << ' ' << o.type.label() << ' ' << o.point_group << ')';
  }
  return os.str();
}

std::string CutReport::table() const {
  std::ostringstream os;
  os << "cut               " << cut.str() << '\n'
     << "|V|               " << size << '\n'
     << "|G|               " << stabilizer_order << '\n'
     << "maximal           " << (maximal ? "yes" : "no") << '\n'
     << "conn.             " << (simplex_graph_connected ? "yes" : "no") << " (" << simplex_components
     << " component" << (simplex_components == 1 ? "" : "s") << ", " << surviving_cells << " cells)\n"
     << "vertex orbits\n"
     << "  size  type  k  antipodal  |stab|  group\n";
  for (const auto& o : vertex_orbits) {
    char line[96];
    std::snprintf(line, sizeof line, "  %4d  %-4s  %d  %-9s  %6d  %s\n", o.size, o.type.label().c_str(), o.type.k,
                  o.type.k == 2 ? (o.type.antipodal ? "yes" : "no") : "-", o.stabilizer_order,
                  o.point_group.c_str());
    os << line;
  }
  return os.str();
}

}  // namespace cut600
