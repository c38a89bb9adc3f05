//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SYNTHROUTE_ROUTE_TREE_H_
#define SYNTHROUTE_ROUTE_TREE_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "synthroute/chem/molecule.h"
#include "synthroute/route/reaction.h"

namespace synthroute::route {

inline constexpr std::size_t kMaxComparison = 5;

struct NodeId {
  std::uint64_t value = 0;

  friend auto operator<=>(const NodeId &, const NodeId &) = default;
};

struct RouteNode {
  NodeId id;
  // Empty only for the root, which stands for the starting molecule.
  std::optional<ReactionRecord> reaction;
  std::optional<NodeId> parent;
  std::vector<NodeId> children;
  int layer = 0;
  double total_yield = 1.0;
  double total_duration = 0.0;
  // "layer.ordinal", ordinal 1-based in depth-first order within the layer.
  std::string label;
  // Set when the chain check was bypassed for a near-identical intermediate.
  bool chain_override = false;

  // Product of this step, or the starting molecule for the root.
  const chem::Molecule &output(const chem::Molecule &root_molecule) const;
};

struct DecisionSequence {
  NodeId leaf;
  std::vector<NodeId> path;  // root first
  int steps = 0;
  double total_yield = 1.0;
  double total_duration = 0.0;
};

struct ComparisonMatrix {
  std::vector<NodeId> rows;     // comparison-set nodes
  std::vector<NodeId> columns;  // leaf of each decision sequence
  std::vector<std::vector<double>> cells;
};

// Tree of decision sequences rooted at the starting molecule. Cumulative
// yield is the product and cumulative duration the sum of the per-step values
// along the root path; both are maintained on every mutation.
//
// Not synchronized: callers serialize mutations and copy for readers.
class RouteTree {
public:
  explicit RouteTree(chem::Molecule start);

  NodeId root() const { return NodeId { 0 }; }
  const chem::Molecule &root_molecule() const { return root_molecule_; }
  const std::map<NodeId, RouteNode> &nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  bool contains(NodeId id) const { return nodes_.count(id) != 0; }
  const RouteNode &node(NodeId id) const;
  std::uint64_t next_id() const { return next_id_; }

  // Appends r under parent. Unless chain_override is set, r's reactant must
  // be the same molecule as the parent's product (the starting molecule for
  // the root). Throws kParentNotFound or kReactantMismatch.
  NodeId add_reaction(NodeId parent, ReactionRecord r,
                      bool chain_override = false);

  // Same as add_reaction with a caller-chosen id >= next_id(). Used when
  // restoring a persisted tree so node ids survive the round trip.
  NodeId add_reaction_as(NodeId id, NodeId parent, ReactionRecord r,
                         bool chain_override);
  // Raises next_id() to at least `next`, so ids of removed nodes are never
  // reused after a restore.
  void reserve_ids(std::uint64_t next);

  // Removes the node and its descendants; returns how many were removed.
  // Throws kNodeNotFound or kCannotRemoveRoot.
  std::size_t remove_subtree(NodeId id);

  // Edits the measured values of a step and refreshes descendant totals.
  void set_measurements(NodeId id, double yield, double duration_hours);
  void set_difficulty(NodeId id, std::optional<DifficultyAnnotation> a);

  const std::vector<NodeId> &comparison_set() const { return comparison_; }
  // Throws kNodeNotFound, kRootHasNoProduct or kComparisonFull. Adding a
  // node that is already in the set is a no-op.
  void add_to_comparison(NodeId id);
  void remove_from_comparison(NodeId id);

  // One entry per leaf that carries a reaction, in depth-first order.
  std::vector<DecisionSequence> decision_sequences() const;

  // Tanimoto similarity of every non-root node's product to the selected
  // node's product. Throws kNodeNotFound or kRootHasNoProduct.
  std::map<NodeId, double> similarity_marks(NodeId selected) const;

  // cells[i][j] = similarity of comparison node i's product to the final
  // product of decision sequence j.
  ComparisonMatrix comparison_matrix() const;

  // Number of nodes whose stored layer, totals or label disagree with a
  // fresh computation. Zero after every public mutation.
  std::size_t audit() const;

private:
  RouteNode &mutable_node(NodeId id);
  void refresh_subtree(NodeId id);
  void relabel();

  chem::Molecule root_molecule_;
  std::map<NodeId, RouteNode> nodes_;
  std::vector<NodeId> comparison_;
  std::uint64_t next_id_ = 1;
};

std::string to_string(NodeId id);

}  // namespace synthroute::route

#endif  // SYNTHROUTE_ROUTE_TREE_H_
