#include "cut600/model.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace cut600 {

namespace {

constexpr GoldenInt kZero{0, 0};
constexpr GoldenInt kOne{1, 0};   // 1/2 at true scale
constexpr GoldenInt kTwo{2, 0};   // 1
constexpr GoldenInt kPhi{0, 1};   // phi/2
constexpr GoldenInt kPhiInv{-1, 1};  // (phi - 1)/2
constexpr GoldenInt kEdgeInner{0, 2};  // phi/2 at true scale

bool is_even_permutation(const std::array<int, 4>& p) {
  int inversions = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

class Fnv1a {
 public:
  void add(const void* data, std::size_t n) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      h_ ^= bytes[i];
      h_ *= 0x100000001b3ULL;
    }
  }
  void add_i64(std::int64_t v) { add(&v, sizeof v); }
  std::uint64_t value() const { return h_; }

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

std::string perm_key(const Perm& p) {
  return std::string(reinterpret_cast<const char*>(p.data()), p.size());
}

}  // namespace

GoldenInt determinant(const GoldenMatrix4& m) {
  GoldenInt det;
  std::array<int, 4> p{0, 1, 2, 3};
  do {
    GoldenInt term = m[0][p[0]] * m[1][p[1]] * m[2][p[2]] * m[3][p[3]];
    if (is_even_permutation(p))
      det += term;
    else
      det -= term;
  } while (std::next_permutation(p.begin(), p.end()));
  return det;
}

GoldenInt trace(const GoldenMatrix4& m) { return m[0][0] + m[1][1] + m[2][2] + m[3][3]; }

std::vector<Quat> build_vertices() {
  std::vector<Quat> out;
  out.reserve(kNumVertices);

  // 8 permutations of (+-1, 0, 0, 0)
  for (int i = 0; i < 4; ++i) {
    for (int s : {1, -1}) {
      Quat q{kZero, kZero, kZero, kZero};
      q[i] = GoldenInt{2 * s, 0};
      out.push_back(q);
    }
  }
  // 16 points (+-1/2, +-1/2, +-1/2, +-1/2)
  for (int signs = 0; signs < 16; ++signs) {
    Quat q;
    for (int i = 0; i < 4; ++i) q[i] = (signs >> i & 1) ? -kOne : kOne;
    out.push_back(q);
  }
  // 96 even permutations of (+-phi/2, +-1/2, +-(phi-1)/2, 0)
  const std::array<GoldenInt, 4> base{kPhi, kOne, kPhiInv, kZero};
  std::array<int, 4> p{0, 1, 2, 3};
  do {
    if (!is_even_permutation(p)) continue;
    for (int signs = 0; signs < 8; ++signs) {
      Quat q;
      for (int i = 0; i < 4; ++i) {
        GoldenInt c = base[p[i]];
        if (p[i] < 3 && (signs >> p[i] & 1)) c = -c;
        q[i] = c;
      }
      out.push_back(q);
    }
  } while (std::next_permutation(p.begin(), p.end()));

  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> build_adjacency(std::span<const Quat> vertices) {
  const int n = static_cast<int>(vertices.size());
  std::vector<VertexSet> adj(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (inner4(vertices[u], vertices[v]) == kEdgeInner) {
        adj[u].set(v);
        adj[v].set(u);
      }
    }
  }
  return adj;
}

std::vector<Cell> build_cells(std::span<const VertexSet> adjacency) {
  const int n = static_cast<int>(adjacency.size());
  std::vector<Cell> cells;
  for (int a = 0; a < n; ++a) {
    VertexSet after_a = adjacency[a] & VertexSet::above(a);
    for (VertexSet sb = after_a; !sb.empty();) {
      const int b = sb.pop_lowest();
      VertexSet after_b = after_a & adjacency[b] & VertexSet::above(b);
      for (VertexSet sc = after_b; !sc.empty();) {
        const int c = sc.pop_lowest();
        VertexSet after_c = after_b & adjacency[c] & VertexSet::above(c);
        for (VertexSet sd = after_c; !sd.empty();) {
          const int d = sd.pop_lowest();
          if (!(after_c & adjacency[d]).empty())
            throw std::logic_error("skeleton contains a 5-clique; cells are not its 4-cliques");
          cells.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b), static_cast<Vertex>(c),
                           static_cast<Vertex>(d)});
        }
      }
    }
  }
  return cells;
}

std::vector<GroupElement> build_group(std::span<const Quat> vertices,
                                      std::span<const VertexSet> adjacency) {
  const int n = static_cast<int>(vertices.size());
  std::map<Quat, int> index;
  for (int i = 0; i < n; ++i) index.emplace(vertices[i], i);
  auto lookup = [&](const Quat& q) {
    auto it = index.find(q);
    if (it == index.end()) throw std::logic_error("icosian product left the vertex set: " + q.str());
    return it->second;
  };

  std::vector<int> mul(n * n), conj_of(n);
  for (int i = 0; i < n; ++i) {
    conj_of[i] = lookup(conj(vertices[i]));
    for (int j = 0; j < n; ++j) mul[i * n + j] = lookup(quat_mul(vertices[i], vertices[j]));
  }

  std::vector<GroupElement> all;
  all.reserve(2 * n * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (bool conjugating : {false, true}) {
        GroupElement e;
        e.left = a;
        e.right = b;
        e.conjugating = conjugating;
        for (int q = 0; q < n; ++q) {
          const int src = conjugating ? conj_of[q] : q;
          e.perm[q] = static_cast<Vertex>(mul[mul[a * n + src] * n + b]);
        }
        all.push_back(e);
      }
    }
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const GroupElement& x, const GroupElement& y) { return x.perm < y.perm; });
  all.erase(std::unique(all.begin(), all.end(),
                        [](const GroupElement& x, const GroupElement& y) { return x.perm == y.perm; }),
            all.end());

  if (static_cast<int>(all.size()) != kGroupOrder)
    throw std::logic_error("symmetry group has " + std::to_string(all.size()) +
                           " elements, expected 14400");
  for (const auto& e : all) {
    for (int u = 0; u < n; ++u) {
      for (VertexSet s = adjacency[u]; !s.empty();) {
        const int v = s.pop_lowest();
        if (!adjacency[e.perm[u]].test(e.perm[v]))
          throw std::logic_error("group element does not preserve adjacency");
      }
    }
  }
  return all;
}

Model Model::build() {
  Model m;
  m.vertices_ = build_vertices();
  m.adjacency_ = build_adjacency(m.vertices_);
  m.cells_ = build_cells(m.adjacency_);
  m.group_ = build_group(m.vertices_, m.adjacency_);
  m.finish();
  return m;
}

Model Model::relabeled(std::span<const int> new_to_old) const {
  const int n = static_cast<int>(vertices_.size());
  if (static_cast<int>(new_to_old.size()) != n) throw std::invalid_argument("relabeling has wrong length");
  std::vector<int> old_to_new(n, -1);
  for (int i = 0; i < n; ++i) {
    if (new_to_old[i] < 0 || new_to_old[i] >= n || old_to_new[new_to_old[i]] != -1)
      throw std::invalid_argument("relabeling is not a permutation");
    old_to_new[new_to_old[i]] = i;
  }

  Model m;
  for (int i = 0; i < n; ++i) m.vertices_.push_back(vertices_[new_to_old[i]]);
  m.adjacency_ = build_adjacency(m.vertices_);
  m.cells_ = build_cells(m.adjacency_);
  for (const auto& e : group_) {
    GroupElement r;
    r.left = old_to_new[e.left];
    r.right = old_to_new[e.right];
    r.conjugating = e.conjugating;
    for (int i = 0; i < n; ++i) r.perm[i] = static_cast<Vertex>(old_to_new[e.perm[new_to_old[i]]]);
    m.group_.push_back(r);
  }
  std::sort(m.group_.begin(), m.group_.end(),
            [](const GroupElement& x, const GroupElement& y) { return x.perm < y.perm; });
  m.finish();
  return m;
}

void Model::finish() {
  const int n = static_cast<int>(vertices_.size());
  index_.clear();
  for (int i = 0; i < n; ++i) index_.emplace(vertices_[i], i);

  vertex_cells_.assign(n, {});
  for (int c = 0; c < static_cast<int>(cells_.size()); ++c)
    for (Vertex v : cells_[c]) vertex_cells_[v].push_back(c);

  perm_index_.clear();
  perm_index_.reserve(group_.size());
  for (int g = 0; g < static_cast<int>(group_.size()); ++g) perm_index_.emplace(perm_key(group_[g].perm), g);

  Perm id;
  std::iota(id.begin(), id.end(), Vertex{0});
  identity_ = find(id);

  inverse_.assign(group_.size(), -1);
  for (int g = 0; g < static_cast<int>(group_.size()); ++g) {
    Perm inv;
    for (int i = 0; i < n; ++i) inv[group_[g].perm[i]] = static_cast<Vertex>(i);
    inverse_[g] = find(inv);
  }

  zero_preimage_.assign(group_.size(), 0);
  for (int g = 0; g < static_cast<int>(group_.size()); ++g)
    zero_preimage_[g] = static_cast<Vertex>(std::find(group_[g].perm.begin(), group_[g].perm.end(), Vertex{0}) -
                                            group_[g].perm.begin());

  antipode_.assign(n, -1);
  for (int v = 0; v < n; ++v) antipode_[v] = index_of(-vertices_[v]);

  Fnv1a h;
  for (const auto& q : vertices_) {
    for (int i = 0; i < 4; ++i) {
      h.add_i64(q[i].a);
      h.add_i64(q[i].b);
    }
  }
  for (const auto& e : group_) h.add(e.perm.data(), e.perm.size());
  fingerprint_ = h.value();
}

int Model::index_of(const Quat& q) const {
  auto it = index_.find(q);
  return it == index_.end() ? -1 : it->second;
}

std::vector<Edge> Model::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < static_cast<int>(vertices_.size()); ++u) {
    for (VertexSet s = adjacency_[u] & VertexSet::above(u); !s.empty();)
      out.push_back({static_cast<Vertex>(u), static_cast<Vertex>(s.pop_lowest())});
  }
  return out;
}

int Model::find(const Perm& p) const {
  auto it = perm_index_.find(perm_key(p));
  return it == perm_index_.end() ? -1 : it->second;
}

int Model::compose(int g, int h) const {
  Perm r;
  const Perm& pg = group_[g].perm;
  const Perm& ph = group_[h].perm;
  for (int i = 0; i < kNumVertices; ++i) r[i] = pg[ph[i]];
  return find(r);
}

int Model::element_order(int g) const {
  const Perm& p = group_[g].perm;
  Perm cur = p;
  int order = 1;
  Perm id;
  std::iota(id.begin(), id.end(), Vertex{0});
  while (cur != id) {
    Perm next;
    for (int i = 0; i < kNumVertices; ++i) next[i] = p[cur[i]];
    cur = next;
    ++order;
  }
  return order;
}

GoldenMatrix4 Model::element_matrix(int g) const {
  const GroupElement& e = group_[g];
  const Quat& a = vertices_[e.left];
  const Quat& b = vertices_[e.right];
  GoldenMatrix4 m;
  for (int col = 0; col < 4; ++col) {
    Quat basis{};
    basis[col] = kTwo;
    const Quat image = quat_mul(quat_mul(a, e.conjugating ? conj(basis) : basis), b);
    for (int row = 0; row < 4; ++row) m[row][col] = image[row];
  }
  return m;
}

int Model::multiply(int u, int v) const { return index_of(quat_mul(vertices_[u], vertices_[v])); }

void Model::export_text(std::ostream& os) const {
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fingerprint_));
  os << "# cut600 model v1\n"
     << "# vertex <index> <w.a> <w.b> <x.a> <x.b> <y.a> <y.b> <z.a> <z.b>"
        "  (true coordinate = (a + b*phi)/2)\n"
     << "# edge <u> <v>\n"
     << "# cell <a> <b> <c> <d>\n"
     << "# element <index> <left> <right> <conjugating> <image of 0> ... <image of 119>\n"
     << "fingerprint " << hex << '\n';
  for (int v = 0; v < static_cast<int>(vertices_.size()); ++v) {
    os << "vertex " << v;
    for (int i = 0; i < 4; ++i) os << ' ' << vertices_[v][i].a << ' ' << vertices_[v][i].b;
    os << '\n';
  }
  for (const auto& e : edges()) os << "edge " << int(e[0]) << ' ' << int(e[1]) << '\n';
  for (const auto& c : cells_)
    os << "cell " << int(c[0]) << ' ' << int(c[1]) << ' ' << int(c[2]) << ' ' << int(c[3]) << '\n';
  for (int g = 0; g < static_cast<int>(group_.size()); ++g) {
    const auto& e = group_[g];
    os << "element " << g << ' ' << e.left << ' ' << e.right << ' ' << (e.conjugating ? 1 : 0);
    for (Vertex x : e.perm) os << ' ' << int(x);
    os << '\n';
  }
}

void Model::corrupt_remove_edge(int u, int v) {
  adjacency_[u].reset(v);
  adjacency_[v].reset(u);
}

int count_triangles(const Model& model) {
  int count = 0;
  for (int u = 0; u < kNumVertices; ++u) {
    const VertexSet up = model.neighbors(u) & VertexSet::above(u);
    for (VertexSet s = up; !s.empty();) {
      const int v = s.pop_lowest();
      count += (up & model.neighbors(v) & VertexSet::above(v)).count();
    }
  }
  return count;
}

std::vector<std::string> verify_model(const Model& model) {
  std::vector<std::string> bad;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  };

  const auto& verts = model.vertices();
  expect(verts.size() == kNumVertices, "vertex count is " + std::to_string(verts.size()));
  for (int v = 0; v < static_cast<int>(verts.size()); ++v) {
    if (inner4(verts[v], verts[v]) != GoldenInt{4, 0}) {
      bad.push_back("vertex " + std::to_string(v) + " is not on the unit sphere");
      break;
    }
  }
  {
    auto sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    expect(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), "duplicate vertices");
  }

  // Adjacency must agree with the coordinates, be symmetric and irreflexive.
  bool adjacency_ok = true;
  for (int u = 0; u < kNumVertices && adjacency_ok; ++u) {
    if (model.adjacent(u, u)) adjacency_ok = false;
    for (int v = 0; v < kNumVertices; ++v) {
      const bool want = u != v && inner4(verts[u], verts[v]) == kEdgeInner;
      if (model.adjacent(u, v) != want || model.adjacent(u, v) != model.adjacent(v, u)) {
        adjacency_ok = false;
        break;
      }
    }
  }
  expect(adjacency_ok, "adjacency disagrees with inner products or is not symmetric");

  const auto edges = model.edges();
  expect(edges.size() == 720, "edge count is " + std::to_string(edges.size()));
  for (int v = 0; v < kNumVertices; ++v) {
    if (model.neighbors(v).count() != 12) {
      bad.push_back("vertex " + std::to_string(v) + " has degree " +
                    std::to_string(model.neighbors(v).count()));
      break;
    }
  }
  const int triangles = count_triangles(model);
  expect(triangles == 1200, "triangle count is " + std::to_string(triangles));
  expect(model.cells().size() == 600, "cell count is " + std::to_string(model.cells().size()));
  for (const auto& c : model.cells()) {
    bool clique = true;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) clique = clique && model.adjacent(c[i], c[j]);
    if (!clique) {
      bad.push_back("a cell is not a 4-clique of the current adjacency");
      break;
    }
  }
  for (int v = 0; v < kNumVertices; ++v) {
    if (model.cells_of(v).size() != 20) {
      bad.push_back("vertex " + std::to_string(v) + " lies in " +
                    std::to_string(model.cells_of(v).size()) + " cells");
      break;
    }
  }

  expect(model.group_size() == kGroupOrder, "group order is " + std::to_string(model.group_size()));
  expect(model.identity() >= 0, "identity permutation missing from the group");

  bool preserves = true;
  for (int g = 0; g < model.group_size() && preserves; ++g) {
    const Perm& p = model.perm(g);
    for (const auto& e : edges) {
      if (!model.adjacent(p[e[0]], p[e[1]])) {
        preserves = false;
        break;
      }
    }
  }
  expect(preserves, "a group element does not preserve adjacency");

  bool det_ok = true;
  for (int g = 0; g < model.group_size() && det_ok; ++g) {
    const GoldenInt det = determinant(model.element_matrix(g));
    det_ok = det == GoldenInt{model.group()[g].conjugating ? -16 : 16, 0};
  }
  expect(det_ok, "an element's determinant disagrees with its orientation");

  // Closure: breadth-first products by a few generators stay inside the
  // element list and reach all of it.
  if (model.group_size() == kGroupOrder && model.identity() >= 0) {
    const std::array<int, 6> generators{1, 2, 3, 5, 7, 8000};
    std::vector<char> seen(model.group_size(), 0);
    std::deque<int> queue{model.identity()};
    seen[model.identity()] = 1;
    int reached = 1;
    bool closed = true;
    while (!queue.empty() && closed) {
      const int g = queue.front();
      queue.pop_front();
      for (int s : generators) {
        const int h = model.compose(g, s);
        if (h < 0) {
          closed = false;
          break;
        }
        if (!seen[h]) {
          seen[h] = 1;
          ++reached;
          queue.push_back(h);
        }
      }
    }
    expect(closed, "group is not closed under composition");
    expect(!closed || reached == kGroupOrder,
           "generators reach only " + std::to_string(reached) + " elements");
  }
  return bad;
}

}  // namespace cut600
