#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wordlab/word.hpp"

namespace wordlab::stallings {

using Vertex = std::uint32_t;

struct Edge {
  Vertex from;
  GenIndex gen;
  Vertex to;

  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

// Order in which pending identifications are processed while folding. The folded
// result does not depend on it; the option exists to test exactly that.
enum class FoldOrder { Fifo, Lifo };

// Folded core graph of a finitely generated subgroup. Vertex 0 is the base; vertices
// are numbered in breadth-first order from the base, following letters in order
// (x_1, x_1^-1, x_2, ...), and edges are sorted.
class SubgroupGraph {
 public:
  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  std::size_t vertex_count() const noexcept { return out_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  Vertex base() const noexcept { return 0; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // Target of the unique edge leaving v with the given letter.
  std::optional<Vertex> step(Vertex v, Letter l) const;

  std::size_t degree(Vertex v) const;

  friend SubgroupGraph build(const AlphabetPtr&, const std::vector<FreeWord>&, FoldOrder);

 private:
  SubgroupGraph(AlphabetPtr alphabet, std::size_t vertices, std::vector<Edge> edges);

  AlphabetPtr alphabet_;
  std::vector<Edge> edges_;
  // out_[v][2*g] follows g, out_[v][2*g+1] follows g^-1; -1 when absent.
  std::vector<std::vector<std::int64_t>> out_;
};

// Wedge of the generator loops, folded to a fixpoint and trimmed to its core.
SubgroupGraph build(const AlphabetPtr& alphabet, const std::vector<FreeWord>& generators,
                    FoldOrder order = FoldOrder::Fifo);

bool contains(const SubgroupGraph& g, const FreeWord& w);

// edges - vertices + 1
std::size_t rank(const SubgroupGraph& g);

// Free basis read off a breadth-first spanning tree: one loop word per non-tree edge.
std::vector<FreeWord> basis(const SubgroupGraph& g);

// Base-preserving label-preserving isomorphism.
bool isomorphic(const SubgroupGraph& x, const SubgroupGraph& y);

}  // namespace wordlab::stallings
