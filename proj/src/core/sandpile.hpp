#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/abelian.hpp"
#include "core/chartable.hpp"
#include "core/intmatrix.hpp"
#include "core/smith.hpp"

namespace critgrp {

/// Finite directed multigraph with named vertices and an optional sink.
class Digraph {
 public:
  struct Edge {
    std::size_t source;
    std::size_t target;
    Int multiplicity;
  };

  Digraph() = default;
  explicit Digraph(std::vector<std::string> vertex_names);

  std::size_t num_vertices() const { return names_.size(); }
  const std::string& vertex_name(std::size_t v) const { return names_[v]; }
  std::size_t vertex_index(const std::string& name) const;
  const std::vector<Edge>& edges() const { return edges_; }

  void add_edge(std::size_t source, std::size_t target, Int multiplicity = 1);
  void set_sink(std::size_t v);
  std::optional<std::size_t> sink() const { return sink_; }

  Int out_degree(std::size_t v) const;  // counts loops and multiplicities
  /// True iff every vertex has a directed path to the sink.
  bool sink_reachable_from_all() const;

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::optional<std::size_t> sink_;
};

/// Full Laplacian: out-degree minus adjacency (loops cancel on the
/// diagonal); rows sum to zero.
IntMatrix laplacian(const Digraph& g);

/// Laplacian with the sink's row and column removed; remaining vertices
/// keep their relative order.
IntMatrix reduced_laplacian(const Digraph& g, std::size_t sink);

/// Cokernel of the reduced Laplacian. Requires the sink to be reachable
/// from every vertex (otherwise the group would be infinite; rejected).
AbelianGroup graph_critical_group(const Digraph& g, std::size_t sink);

/// Number of spanning trees directed toward the sink: determinant of the
/// reduced Laplacian.
Int spanning_tree_count(const Digraph& g, std::size_t sink);

/// Cayley graph of the character group of an abelian table with respect to
/// the multiset of irreducible constituents of a faithful V: one edge
/// chi -> chi*psi per constituent psi. Vertices are the table's characters
/// in table order; the sink is the trivial character.
Digraph cayley_graph(const CharacterTable& table, const RepVector& v);

/// Vertex map between two digraphs that is a covering: a bijection on
/// incoming and outgoing edge fibers at every vertex.
struct CoveringMap {
  std::vector<std::size_t> vertex_map;  // source vertex -> target vertex
  bool verified = false;
};

/// Checks the covering property combinatorially on edge fibers.
CoveringMap verify_covering(const Digraph& source, const Digraph& target,
                            std::vector<std::size_t> vertex_map);

/// The covering Cay(dual G) -> Cay(dual H) induced by restricting
/// characters along an abelian subgroup fusion, together with the induced
/// (surjective) map on graph critical groups. Uses the trivial character as
/// the sink on both sides.
struct CayleyCovering {
  Digraph source_graph;
  Digraph target_graph;
  CoveringMap covering;
  CokernelMap induced;
};

CayleyCovering cayley_covering(const CharacterTable& g,
                               const CharacterTable& h,
                               const ClassFusion& fusion, const RepVector& v);

/// Relation presentation of the critical group used for induced maps: the
/// firing vectors of the non-sink vertices as columns (the transpose of the
/// reduced Laplacian).
IntMatrix firing_presentation(const Digraph& g, std::size_t sink);

}  // namespace critgrp
