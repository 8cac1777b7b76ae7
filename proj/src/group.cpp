#include "cut600/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>
#include <unordered_set>

namespace cut600 {

Cut::Cut(std::vector<int> members) : members_(std::move(members)) {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] < 0 || members_[i] >= kNumVertices)
      throw std::invalid_argument("vertex index " + std::to_string(members_[i]) + " out of range");
    if (i > 0 && members_[i - 1] >= members_[i])
      throw std::invalid_argument("cut members must be strictly increasing");
  }
}

Cut Cut::from_unsorted(std::vector<int> members) {
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw std::invalid_argument("cut has a repeated vertex");
  return Cut(std::move(members));
}

Cut Cut::parse(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    if (tok.empty()) {
      if (comma != text.size() || !out.empty())
        throw std::invalid_argument("empty entry in cut list");
    } else {
      int v = 0;
      auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || end != tok.data() + tok.size())
        throw std::invalid_argument("bad vertex index '" + std::string(tok) + "'");
      out.push_back(v);
    }
    pos = comma + 1;
  }
  return from_unsorted(std::move(out));
}

std::string Cut::str() const {
  std::string s;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(members_[i]);
  }
  return s;
}

std::optional<std::pair<int, int>> find_adjacent_pair(const Model& model, const Cut& cut) {
  for (int i = 0; i < cut.size(); ++i)
    for (int j = i + 1; j < cut.size(); ++j)
      if (model.adjacent(cut[i], cut[j])) return std::pair{cut[i], cut[j]};
  return std::nullopt;
}

bool is_independent(const Model& model, const Cut& cut) { return !find_adjacent_pair(model, cut); }

void validate_cut(const Model& model, const Cut& cut) {
  if (auto pair = find_adjacent_pair(model, cut))
    throw std::invalid_argument("vertices " + std::to_string(pair->first) + " and " +
                                std::to_string(pair->second) + " are adjacent");
}

Cut image(const Model& model, int g, const Cut& cut) {
  return Cut::from_set(image(model.perm(g), cut.bits()));
}

std::int64_t orbit_size(const Model& model, const Cut& cut) {
  struct Hash {
    std::size_t operator()(const VertexSet& s) const {
      return std::hash<std::uint64_t>()(s.word(0) * 0x9e3779b97f4a7c15ULL ^ s.word(1));
    }
  };
  std::unordered_set<VertexSet, Hash> images;
  const VertexSet bits = cut.bits();
  for (int g = 0; g < model.group_size(); ++g) images.insert(image(model.perm(g), bits));
  return static_cast<std::int64_t>(images.size());
}

std::vector<int> stabilizer(const Model& model, const Cut& cut) {
  std::vector<int> out;
  const VertexSet bits = cut.bits();
  for (int g = 0; g < model.group_size(); ++g)
    if (image(model.perm(g), bits) == bits) out.push_back(g);
  return out;
}

bool is_lex_min(const Model& model, const Cut& cut) {
  if (cut.empty()) return true;
  if (cut[0] != 0) return false;
  const VertexSet bits = cut.bits();
  const auto& zero = model.zero_preimages();
  for (int g = 0; g < model.group_size(); ++g) {
    if (!bits.test(zero[g])) continue;
    if (image(model.perm(g), bits).lex_less_same_size(bits)) return false;
  }
  return true;
}

Cut min_image(const Model& model, const Cut& cut) {
  if (cut.empty()) return cut;
  const VertexSet bits = cut.bits();
  const auto& zero = model.zero_preimages();
  std::optional<VertexSet> best;
  for (int g = 0; g < model.group_size(); ++g) {
    if (!bits.test(zero[g])) continue;
    const VertexSet img = image(model.perm(g), bits);
    if (!best || img.lex_less_same_size(*best)) best = img;
  }
  return Cut::from_set(*best);
}

LexMinTester::LexMinTester(const Model& model) {
  const int n = kNumVertices;
  perms_.resize(static_cast<std::size_t>(model.group_size()) * n);
  for (int g = 0; g < model.group_size(); ++g)
    std::copy(model.perm(g).begin(), model.perm(g).end(), perms_.begin() + static_cast<std::size_t>(g) * n);

  // where_zero[g] = the vertex g sends to 0
  std::vector<int> where_zero(model.group_size());
  for (int g = 0; g < model.group_size(); ++g) {
    const Vertex* p = perm(g);
    where_zero[g] = static_cast<int>(std::find(p, p + n, Vertex{0}) - p);
    if (where_zero[g] == 0) ++point_stabilizer_order_;
  }

  pair_min_.assign(static_cast<std::size_t>(n) * n, static_cast<Vertex>(n));
  for (int g = 0; g < model.group_size(); ++g) {
    const int c = where_zero[g];
    const Vertex* p = perm(g);
    for (int d = 0; d < n; ++d)
      if (d != c) pair_min_[c * n + d] = std::min(pair_min_[c * n + d], p[d]);
  }

  std::vector<std::vector<std::uint16_t>> lists(static_cast<std::size_t>(n) * n);
  for (int g = 0; g < model.group_size(); ++g) {
    const int c = where_zero[g];
    const Vertex* p = perm(g);
    for (int d = 0; d < n; ++d)
      if (d != c && p[d] == pair_min_[c * n + d]) lists[c * n + d].push_back(static_cast<std::uint16_t>(g));
  }
  pair_off_.resize(lists.size() + 1);
  for (std::size_t i = 0; i < lists.size(); ++i) {
    pair_off_[i] = static_cast<std::uint32_t>(pair_elems_.size());
    pair_elems_.insert(pair_elems_.end(), lists[i].begin(), lists[i].end());
  }
  pair_off_[lists.size()] = static_cast<std::uint32_t>(pair_elems_.size());
}

LexMinTester::Result LexMinTester::test(std::span<const Vertex> members, const VertexSet& bits) const {
  const int n = kNumVertices;
  if (members.empty()) return {true, kGroupOrder};
  if (members[0] != 0) return {false, 0};
  if (members.size() == 1) return {true, point_stabilizer_order_};

  const Vertex second = members[1];
  for (Vertex c : members) {
    const Vertex* row = pair_min_.data() + c * n;
    for (Vertex d : members)
      if (d != c && row[d] < second) return {false, 0};
  }

  int stab = 0;
  for (Vertex c : members) {
    for (Vertex d : members) {
      const int pair = c * n + d;
      if (d == c || pair_min_[pair] != second) continue;
      for (std::uint32_t i = pair_off_[pair]; i < pair_off_[pair + 1]; ++i) {
        const Vertex* p = perm(pair_elems_[i]);
        VertexSet img;
        for (Vertex x : members) img.set(p[x]);
        const VertexSet diff = img ^ bits;
        if (diff.empty()) {
          ++stab;
        } else if (img.test(diff.lowest())) {
          return {false, 0};
        }
      }
    }
  }
  return {true, stab};
}

}  // namespace cut600
