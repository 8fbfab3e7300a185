#include "hyperkey/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hyperkey/error.hpp"
#include "hyperkey/partition.hpp"

namespace hyperkey {

Hypergraph::Hypergraph(VertexSet vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (i > 0 && edges_[i - 1].id == e.id) throw Error(ErrorKind::DuplicateEdgeId, "edge '" + e.id + "'");
    if (e.members.empty()) throw Error(ErrorKind::InvalidHypergraph, "edge '" + e.id + "' has no members");
    if (e.weight <= 0) throw Error(ErrorKind::NonpositiveWeight, "edge '" + e.id + "'");
    for (const auto& v : e.members)
      if (!vertices_.count(v))
        throw Error(ErrorKind::UnknownVertex, "edge '" + e.id + "' member '" + v + "' is not a vertex");
  }
}

const Edge& Hypergraph::edge(const EdgeId& id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, const EdgeId& key) { return e.id < key; });
  if (it == edges_.end() || it->id != id) throw Error(ErrorKind::InvalidHypergraph, "no edge '" + id + "'");
  return *it;
}

Hypergraph Hypergraph::with_unit_weights() const {
  auto edges = edges_;
  for (auto& e : edges) e.weight = 1;
  return Hypergraph(vertices_, std::move(edges));
}

Hypergraph Hypergraph::without_edge(const EdgeId& id) const {
  edge(id);
  std::vector<Edge> edges;
  for (const auto& e : edges_)
    if (e.id != id) edges.push_back(e);
  return Hypergraph(vertices_, std::move(edges));
}

std::string to_string(const VertexSet& s) {
  std::string out = "{";
  for (auto it = s.begin(); it != s.end(); ++it) {
    if (it != s.begin()) out += ',';
    out += *it;
  }
  return out + "}";
}

void require_subset(const Hypergraph& h, const VertexSet& s) {
  for (const auto& v : s)
    if (!h.contains(v)) throw Error(ErrorKind::UnknownVertex, "'" + v + "'");
}

namespace {

bool meets(const VertexSet& a, const VertexSet& b) {
  const VertexSet& small = a.size() <= b.size() ? a : b;
  const VertexSet& large = a.size() <= b.size() ? b : a;
  return std::any_of(small.begin(), small.end(), [&](const VertexId& v) { return large.count(v) != 0; });
}

// Union-find over vertex positions in canonical order.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::size_t degree(const Hypergraph& h, const VertexSet& c) {
  require_subset(h, c);
  return static_cast<std::size_t>(
      std::count_if(h.edges().begin(), h.edges().end(), [&](const Edge& e) { return meets(e.members, c); }));
}

std::size_t degree(const Hypergraph& h, const VertexId& v) { return degree(h, VertexSet{v}); }

Hypergraph remove_vertices(const Hypergraph& h, const VertexSet& c) {
  require_subset(h, c);
  if (c.size() == h.num_vertices()) throw Error(ErrorKind::EmptyResult, "removing every vertex");
  VertexSet rest;
  std::set_difference(h.vertices().begin(), h.vertices().end(), c.begin(), c.end(),
                      std::inserter(rest, rest.end()));
  std::vector<Edge> edges;
  for (const auto& e : h.edges()) {
    VertexSet kept;
    std::set_difference(e.members.begin(), e.members.end(), c.begin(), c.end(),
                        std::inserter(kept, kept.end()));
    if (!kept.empty()) edges.push_back(Edge{e.id, std::move(kept), e.weight});
  }
  return Hypergraph(std::move(rest), std::move(edges));
}

Hypergraph induced(const Hypergraph& h, const VertexSet& c) {
  if (c.empty()) throw Error(ErrorKind::EmptyVertexSet, "induced subhypergraph of the empty set");
  require_subset(h, c);
  VertexSet complement;
  std::set_difference(h.vertices().begin(), h.vertices().end(), c.begin(), c.end(),
                      std::inserter(complement, complement.end()));
  return remove_vertices(h, complement);
}

Hypergraph merge(const Hypergraph& h, const Partition& p) {
  require_partition_of(p, h.vertices());
  std::map<VertexId, VertexId> label;
  VertexSet vertices;
  for (const auto& block : p.blocks()) {
    const auto name = to_string(block);
    vertices.insert(name);
    for (const auto& v : block) label[v] = name;
  }
  std::vector<Edge> edges;
  for (const auto& e : h.edges()) {
    VertexSet members;
    for (const auto& v : e.members) members.insert(label.at(v));
    edges.push_back(Edge{e.id, std::move(members), e.weight});
  }
  return Hypergraph(std::move(vertices), std::move(edges));
}

Hypergraph incident_restriction(const Hypergraph& h, const VertexSet& c) {
  if (c.empty()) throw Error(ErrorKind::EmptyVertexSet, "incident restriction of the empty set");
  require_subset(h, c);
  VertexSet vertices;
  std::vector<Edge> edges;
  for (const auto& e : h.edges()) {
    if (!meets(e.members, c)) continue;
    vertices.insert(e.members.begin(), e.members.end());
    edges.push_back(e);
  }
  return Hypergraph(std::move(vertices), std::move(edges));
}

std::vector<VertexSet> components(const Hypergraph& h) {
  const std::vector<VertexId> ids(h.vertices().begin(), h.vertices().end());
  auto pos = [&](const VertexId& v) {
    return static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
  };
  DisjointSets sets(ids.size());
  for (const auto& e : h.edges()) {
    const std::size_t first = pos(*e.members.begin());
    for (const auto& v : e.members) sets.unite(first, pos(v));
  }
  // Roots are the least index of each class, so classes come out ordered by
  // their smallest member.
  std::map<std::size_t, VertexSet> classes;
  for (std::size_t i = 0; i < ids.size(); ++i) classes[sets.find(i)].insert(ids[i]);
  std::vector<VertexSet> out;
  out.reserve(classes.size());
  for (auto& [root, members] : classes) out.push_back(std::move(members));
  return out;
}

std::size_t count_components(const Hypergraph& h) { return components(h).size(); }

bool is_connected(const Hypergraph& h) { return count_components(h) == 1; }

std::optional<BergeCycle> find_berge_cycle(const Hypergraph& h) {
  // Depth-first search on the bipartite incidence graph. Nodes [0, n) are
  // vertices, nodes [n, n + m) are edges; a Berge cycle is exactly a cycle of
  // this graph, and loops cannot produce one.
  const std::vector<VertexId> ids(h.vertices().begin(), h.vertices().end());
  const std::size_t n = ids.size();
  const std::size_t m = h.num_edges();
  std::vector<std::vector<std::size_t>> adj(n + m);
  for (std::size_t j = 0; j < m; ++j) {
    for (const auto& v : h.edges()[j].members) {
      const auto i = static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
      adj[i].push_back(n + j);
      adj[n + j].push_back(i);
    }
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(n + m, kNone);
  std::vector<bool> visited(n + m, false);
  std::vector<std::size_t> stack_path;

  struct Frame {
    std::size_t node;
    std::size_t next;
  };

  for (std::size_t root = 0; root < n; ++root) {
    if (visited[root]) continue;
    std::vector<Frame> frames{{root, 0}};
    visited[root] = true;
    stack_path = {root};
    while (!frames.empty()) {
      Frame& top = frames.back();
      if (top.next == adj[top.node].size()) {
        frames.pop_back();
        stack_path.pop_back();
        continue;
      }
      const std::size_t w = adj[top.node][top.next++];
      if (w == parent[top.node]) continue;
      if (visited[w]) {
        // Back edge to an ancestor on the current path.
        auto from = std::find(stack_path.begin(), stack_path.end(), w);
        std::vector<std::size_t> cyc(from, stack_path.end());
        if (cyc.front() >= n) std::rotate(cyc.begin(), cyc.begin() + 1, cyc.end());
        cyc.push_back(cyc.front());
        BergeCycle out;
        for (std::size_t k = 0; k < cyc.size(); ++k) {
          if (k % 2 == 0)
            out.vertices.push_back(ids[cyc[k]]);
          else
            out.edges.push_back(h.edges()[cyc[k] - n].id);
        }
        return out;
      }
      visited[w] = true;
      parent[w] = top.node;
      stack_path.push_back(w);
      frames.push_back({w, 0});
    }
  }
  return std::nullopt;
}

bool is_valid_berge_cycle(const Hypergraph& h, const BergeCycle& cycle) {
  const auto& vs = cycle.vertices;
  const auto& es = cycle.edges;
  if (vs.size() < 3 || vs.size() != es.size() + 1 || vs.front() != vs.back()) return false;
  std::set<VertexId> seen_vertices(vs.begin(), vs.end() - 1);
  std::set<EdgeId> seen_edges(es.begin(), es.end());
  if (seen_vertices.size() != vs.size() - 1 || seen_edges.size() != es.size()) return false;
  for (std::size_t j = 0; j < es.size(); ++j) {
    const auto it = std::find_if(h.edges().begin(), h.edges().end(), [&](const Edge& e) { return e.id == es[j]; });
    if (it == h.edges().end()) return false;
    if (!it->members.count(vs[j]) || !it->members.count(vs[j + 1])) return false;
  }
  return true;
}

bool has_loop(const Hypergraph& h) {
  return std::any_of(h.edges().begin(), h.edges().end(), [](const Edge& e) { return e.members.size() == 1; });
}

bool is_cycle_free(const Hypergraph& h) { return !find_berge_cycle(h).has_value(); }

bool is_connected_and_cycle_free(const Hypergraph& h) { return is_connected(h) && is_cycle_free(h); }

bool is_hypertree(const Hypergraph& h) { return is_connected(h) && !has_loop(h) && is_cycle_free(h); }

bool is_mch(const Hypergraph& h) {
  if (h.num_vertices() < 2 || !is_connected(h)) return false;
  return std::all_of(h.edges().begin(), h.edges().end(),
                     [&](const Edge& e) { return !is_connected(h.without_edge(e.id)); });
}

}  // namespace hyperkey
