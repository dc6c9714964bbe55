#include "wordlab/stallings.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "wordlab/error.hpp"

namespace wordlab::stallings {

namespace {

std::size_t slot(Letter l) { return 2 * static_cast<std::size_t>(l.gen) + (l.inverse ? 1 : 0); }

// Graph under construction. Each representative vertex maps a letter to at most one
// neighbour; a second edge with the same letter queues an identification instead.
class Folder {
 public:
  explicit Folder(FoldOrder order) : order_(order) {}

  Vertex add_vertex() {
    parent_.push_back(static_cast<Vertex>(parent_.size()));
    adj_.emplace_back();
    return parent_.back();
  }

  Vertex find(Vertex v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void add_edge(Vertex u, GenIndex g, Vertex v) {
    insert_half(find(u), Letter{g, false}, find(v));
    insert_half(find(v), Letter{g, true}, find(u));
    drain();
  }

  // Representative adjacency after folding: rep -> letter -> rep.
  std::map<Vertex, std::map<Letter, Vertex>> resolved() {
    std::map<Vertex, std::map<Letter, Vertex>> out;
    for (Vertex v = 0; v < parent_.size(); ++v) {
      if (find(v) != v) continue;
      auto& row = out[v];
      for (const auto& [l, t] : adj_[v]) row[l] = find(t);
    }
    return out;
  }

 private:
  void insert_half(Vertex u, Letter l, Vertex v) {
    auto [it, inserted] = adj_[u].try_emplace(l, v);
    if (!inserted && find(it->second) != v) pending_.emplace_back(it->second, v);
  }

  void drain() {
    while (!pending_.empty()) {
      std::pair<Vertex, Vertex> p;
      if (order_ == FoldOrder::Fifo) {
        p = pending_.front();
        pending_.pop_front();
      } else {
        p = pending_.back();
        pending_.pop_back();
      }
      merge(p.first, p.second);
    }
  }

  void merge(Vertex x, Vertex y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (adj_[x].size() < adj_[y].size()) std::swap(x, y);
    parent_[y] = x;
    auto moved = std::move(adj_[y]);
    adj_[y].clear();
    for (const auto& [l, t] : moved) insert_half(x, l, find(t));
  }

  FoldOrder order_;
  std::vector<Vertex> parent_;
  std::vector<std::map<Letter, Vertex>> adj_;
  std::deque<std::pair<Vertex, Vertex>> pending_;
};

}  // namespace

SubgroupGraph::SubgroupGraph(AlphabetPtr alphabet, std::size_t vertices, std::vector<Edge> edges)
    : alphabet_(std::move(alphabet)), edges_(std::move(edges)) {
  out_.assign(vertices, std::vector<std::int64_t>(2 * alphabet_->rank(), -1));
  for (const Edge& e : edges_) {
    out_[e.from][slot({e.gen, false})] = e.to;
    out_[e.to][slot({e.gen, true})] = e.from;
  }
}

std::optional<Vertex> SubgroupGraph::step(Vertex v, Letter l) const {
  const std::int64_t t = out_.at(v).at(slot(l));
  if (t < 0) return std::nullopt;
  return static_cast<Vertex>(t);
}

std::size_t SubgroupGraph::degree(Vertex v) const {
  return static_cast<std::size_t>(
      std::count_if(out_.at(v).begin(), out_.at(v).end(), [](std::int64_t t) { return t >= 0; }));
}

SubgroupGraph build(const AlphabetPtr& alphabet, const std::vector<FreeWord>& generators,
                    FoldOrder order) {
  Folder folder(order);
  const Vertex base = folder.add_vertex();
  for (const FreeWord& w : generators) {
    if (!same_alphabet(alphabet, w.alphabet())) throw AlphabetMismatch();
    const auto letters = w.letters();
    Vertex cur = base;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      const Vertex next = i + 1 == letters.size() ? base : folder.add_vertex();
      if (letters[i].inverse) folder.add_edge(next, letters[i].gen, cur);
      else folder.add_edge(cur, letters[i].gen, next);
      cur = next;
    }
  }

  auto adj = folder.resolved();
  const Vertex root = folder.find(base);

  // Trim hanging trees: repeatedly drop non-base vertices of degree 1.
  std::deque<Vertex> leaves;
  for (const auto& [v, row] : adj)
    if (v != root && row.size() == 1) leaves.push_back(v);
  while (!leaves.empty()) {
    const Vertex v = leaves.front();
    leaves.pop_front();
    auto it = adj.find(v);
    if (it == adj.end() || it->second.size() != 1) continue;
    const auto [l, t] = *it->second.begin();
    adj.erase(it);
    auto& trow = adj.at(t);
    trow.erase(l.inverted());
    if (t != root && trow.size() == 1) leaves.push_back(t);
  }

  // Renumber breadth-first from the base.
  std::map<Vertex, Vertex> number;
  std::deque<Vertex> queue{root};
  number[root] = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (GenIndex g = 0; g < alphabet->rank(); ++g) {
      for (bool inv : {false, true}) {
        auto it = adj[v].find(Letter{g, inv});
        if (it == adj[v].end()) continue;
        if (number.try_emplace(it->second, static_cast<Vertex>(number.size())).second)
          queue.push_back(it->second);
      }
    }
  }
  std::vector<Edge> edges;
  for (const auto& [v, row] : adj)
    for (const auto& [l, t] : row)
      if (!l.inverse) edges.push_back({number.at(v), l.gen, number.at(t)});
  std::sort(edges.begin(), edges.end());
  return SubgroupGraph(alphabet, number.size(), std::move(edges));
}

bool contains(const SubgroupGraph& g, const FreeWord& w) {
  if (!same_alphabet(g.alphabet(), w.alphabet())) throw AlphabetMismatch();
  Vertex v = g.base();
  for (const Run& r : w.runs()) {
    const Letter l{r.gen, r.exp < 0};
    for (Exponent k = 0; k < (r.exp < 0 ? -r.exp : r.exp); ++k) {
      const auto next = g.step(v, l);
      if (!next) return false;
      v = *next;
    }
  }
  return v == g.base();
}

std::size_t rank(const SubgroupGraph& g) { return g.edge_count() + 1 - g.vertex_count(); }

std::vector<FreeWord> basis(const SubgroupGraph& g) {
  const AlphabetPtr& alphabet = g.alphabet();
  // Tree path from the base to each vertex.
  std::vector<std::optional<FreeWord>> path(g.vertex_count());
  std::vector<bool> tree_edge(g.edge_count(), false);
  std::map<std::pair<Vertex, Letter>, std::size_t> edge_of;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    edge_of[{e.from, Letter{e.gen, false}}] = i;
    edge_of[{e.to, Letter{e.gen, true}}] = i;
  }
  path[g.base()] = FreeWord(alphabet);
  std::deque<Vertex> queue{g.base()};
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (GenIndex gen = 0; gen < alphabet->rank(); ++gen) {
      for (bool inv : {false, true}) {
        const Letter l{gen, inv};
        const auto t = g.step(v, l);
        if (!t || path[*t]) continue;
        path[*t] = concat(*path[v], FreeWord::generator(alphabet, gen, inv ? -1 : 1));
        tree_edge[edge_of.at({v, l})] = true;
        queue.push_back(*t);
      }
    }
  }
  std::vector<FreeWord> out;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (tree_edge[i]) continue;
    const Edge& e = g.edges()[i];
    const FreeWord parts[] = {*path[e.from], FreeWord::generator(alphabet, e.gen),
                              invert(*path[e.to])};
    out.push_back(concat(parts));
  }
  return out;
}

bool isomorphic(const SubgroupGraph& x, const SubgroupGraph& y) {
  if (!same_alphabet(x.alphabet(), y.alphabet())) return false;
  if (x.vertex_count() != y.vertex_count() || x.edge_count() != y.edge_count()) return false;
  // Folded graphs are deterministic automata, so a base-preserving isomorphism is
  // forced by simultaneous traversal.
  std::vector<std::int64_t> image(x.vertex_count(), -1);
  image[x.base()] = y.base();
  std::deque<Vertex> queue{x.base()};
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    const auto w = static_cast<Vertex>(image[v]);
    for (GenIndex gen = 0; gen < x.alphabet()->rank(); ++gen) {
      for (bool inv : {false, true}) {
        const auto tx = x.step(v, Letter{gen, inv});
        const auto ty = y.step(w, Letter{gen, inv});
        if (tx.has_value() != ty.has_value()) return false;
        if (!tx) continue;
        if (image[*tx] < 0) {
          image[*tx] = *ty;
          queue.push_back(*tx);
        } else if (image[*tx] != static_cast<std::int64_t>(*ty)) {
          return false;
        }
      }
    }
  }
  return std::none_of(image.begin(), image.end(), [](std::int64_t i) { return i < 0; });
}

}  // namespace wordlab::stallings
