//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "synthroute/route/tree.h"

#include <algorithm>
#include <numeric>
#include <utility>

#include "synthroute/chem/similarity.h"
#include "synthroute/error.h"

namespace synthroute::route {

std::string to_string(NodeId id) {
  return std::to_string(id.value);
}

const chem::Molecule &
RouteNode::output(const chem::Molecule &root_molecule) const {
  return reaction ? reaction->product() : root_molecule;
}

RouteTree::RouteTree(chem::Molecule start)
    : root_molecule_(std::move(start)) {
  RouteNode root;
  root.id = NodeId { 0 };
  nodes_.emplace(root.id, std::move(root));
  relabel();
}

const RouteNode &RouteTree::node(NodeId id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) {
    throw Error(ErrorCode::kNodeNotFound,
                "no node with id " + to_string(id));
  }
  return it->second;
}

RouteNode &RouteTree::mutable_node(NodeId id) {
  return const_cast<RouteNode &>(std::as_const(*this).node(id));
}

NodeId RouteTree::add_reaction(NodeId parent, ReactionRecord r,
                               bool chain_override) {
  return add_reaction_as(NodeId { next_id_ }, parent, std::move(r),
                         chain_override);
}

void RouteTree::reserve_ids(std::uint64_t next) {
  next_id_ = std::max(next_id_, next);
}

NodeId RouteTree::add_reaction_as(NodeId id, NodeId parent, ReactionRecord r,
                                  bool chain_override) {
  auto pit = nodes_.find(parent);
  if (pit == nodes_.end()) {
    throw Error(ErrorCode::kParentNotFound,
                "no parent node with id " + to_string(parent));
  }
  if (id.value < next_id_) {
    throw Error(ErrorCode::kInvalidArgument,
                "node id " + to_string(id) + " already allocated");
  }

  const RouteNode &p = pit->second;
  if (!chain_override
      && !chem::same_molecule(r.reactant(), p.output(root_molecule_))) {
    throw Error(ErrorCode::kReactantMismatch,
                "reactant does not match the product of node "
                    + to_string(parent));
  }

  RouteNode child;
  child.id = id;
  child.parent = parent;
  child.layer = p.layer + 1;
  child.total_yield = p.total_yield * r.yield();
  child.total_duration = p.total_duration + r.duration_hours();
  child.chain_override = chain_override;
  child.reaction.emplace(std::move(r));

  pit->second.children.push_back(id);
  nodes_.emplace(id, std::move(child));
  next_id_ = id.value + 1;
  relabel();
  return id;
}

std::size_t RouteTree::remove_subtree(NodeId id) {
  const RouteNode &target = node(id);
  if (!target.parent) {
    throw Error(ErrorCode::kCannotRemoveRoot, "the root cannot be removed");
  }

  std::vector<NodeId> doomed { id };
  for (std::size_t i = 0; i < doomed.size(); ++i) {
    const auto &kids = nodes_.at(doomed[i]).children;
    doomed.insert(doomed.end(), kids.begin(), kids.end());
  }

  auto &siblings = nodes_.at(*target.parent).children;
  siblings.erase(std::find(siblings.begin(), siblings.end(), id));
  for (NodeId d: doomed) {
    nodes_.erase(d);
    std::erase(comparison_, d);
  }
  relabel();
  return doomed.size();
}

void RouteTree::set_measurements(NodeId id, double yield,
                                 double duration_hours) {
  RouteNode &n = mutable_node(id);
  if (!n.reaction) {
    throw Error(ErrorCode::kRootHasNoProduct,
                "the root carries no reaction");
  }
  n.reaction->set_measurements(yield, duration_hours);
  refresh_subtree(id);
}

void RouteTree::set_difficulty(NodeId id,
                               std::optional<DifficultyAnnotation> a) {
  RouteNode &n = mutable_node(id);
  if (!n.reaction) {
    throw Error(ErrorCode::kRootHasNoProduct,
                "the root carries no reaction");
  }
  n.reaction->set_difficulty(std::move(a));
}

void RouteTree::refresh_subtree(NodeId id) {
  std::vector<NodeId> stack { id };
  while (!stack.empty()) {
    RouteNode &n = nodes_.at(stack.back());
    stack.pop_back();
    if (n.parent) {
      const RouteNode &p = nodes_.at(*n.parent);
      n.layer = p.layer + 1;
      n.total_yield = p.total_yield * n.reaction->yield();
      n.total_duration = p.total_duration + n.reaction->duration_hours();
    }
    stack.insert(stack.end(), n.children.begin(), n.children.end());
  }
}

void RouteTree::relabel() {
  std::map<int, int> ordinal;
  std::vector<NodeId> stack { root() };
  while (!stack.empty()) {
    RouteNode &n = nodes_.at(stack.back());
    stack.pop_back();
    n.label = std::to_string(n.layer) + "." + std::to_string(++ordinal[n.layer]);
    stack.insert(stack.end(), n.children.rbegin(), n.children.rend());
  }
}

void RouteTree::add_to_comparison(NodeId id) {
  if (!node(id).reaction) {
    throw Error(ErrorCode::kRootHasNoProduct,
                "the root has no product to compare");
  }
  if (std::find(comparison_.begin(), comparison_.end(), id)
      != comparison_.end()) {
    return;
  }
  if (comparison_.size() >= kMaxComparison) {
    throw Error(ErrorCode::kComparisonFull,
                "the comparison set holds at most five nodes");
  }
  comparison_.push_back(id);
}

void RouteTree::remove_from_comparison(NodeId id) {
  node(id);
  std::erase(comparison_, id);
}

std::vector<DecisionSequence> RouteTree::decision_sequences() const {
  std::vector<DecisionSequence> out;
  std::vector<NodeId> path;

  // Iterative DFS carrying the path length at which each node sits.
  std::vector<std::pair<NodeId, std::size_t>> stack { { root(), 0 } };
  while (!stack.empty()) {
    auto [id, depth] = stack.back();
    stack.pop_back();
    path.resize(depth);
    path.push_back(id);

    const RouteNode &n = nodes_.at(id);
    if (n.children.empty()) {
      if (n.reaction) {
        out.push_back({ id, path, n.layer, n.total_yield, n.total_duration });
      }
      continue;
    }
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) {
      stack.emplace_back(*it, depth + 1);
    }
  }
  return out;
}

std::map<NodeId, double> RouteTree::similarity_marks(NodeId selected) const {
  const RouteNode &sel = node(selected);
  if (!sel.reaction) {
    throw Error(ErrorCode::kRootHasNoProduct,
                "the root has no product to compare");
  }
  const chem::Fingerprint ref = chem::fingerprint(sel.reaction->product());

  std::map<NodeId, double> marks;
  for (const auto &[id, n]: nodes_) {
    if (n.reaction) {
      marks[id] = chem::tanimoto(ref, chem::fingerprint(n.reaction->product()));
    }
  }
  return marks;
}

ComparisonMatrix RouteTree::comparison_matrix() const {
  ComparisonMatrix m;
  m.rows = comparison_;

  std::vector<chem::Fingerprint> finals;
  for (const DecisionSequence &seq: decision_sequences()) {
    m.columns.push_back(seq.leaf);
    finals.push_back(
        chem::fingerprint(nodes_.at(seq.leaf).reaction->product()));
  }

  for (NodeId row: m.rows) {
    const chem::Fingerprint fp =
        chem::fingerprint(nodes_.at(row).reaction->product());
    std::vector<double> cells;
    cells.reserve(finals.size());
    for (const chem::Fingerprint &f: finals) {
      cells.push_back(chem::tanimoto(fp, f));
    }
    m.cells.push_back(std::move(cells));
  }
  return m;
}

std::size_t RouteTree::audit() const {
  std::size_t stale = 0;
  std::map<int, int> ordinal;
  std::vector<NodeId> stack { root() };
  while (!stack.empty()) {
    const RouteNode &n = nodes_.at(stack.back());
    stack.pop_back();

    int layer = 0;
    double yield = 1.0;
    double duration = 0.0;
    if (n.parent) {
      const RouteNode &p = nodes_.at(*n.parent);
      layer = p.layer + 1;
      yield = p.total_yield * n.reaction->yield();
      duration = p.total_duration + n.reaction->duration_hours();
    }
    const std::string label =
        std::to_string(layer) + "." + std::to_string(++ordinal[layer]);
    if (n.layer != layer || n.total_yield != yield
        || n.total_duration != duration || n.label != label) {
      ++stale;
    }
    stack.insert(stack.end(), n.children.rbegin(), n.children.rend());
  }
  return stale + (nodes_.size() - static_cast<std::size_t>(std::accumulate(
                      ordinal.begin(), ordinal.end(), 0,
                      [](int acc, const auto &kv) { return acc + kv.second; })));
}

}  // namespace synthroute::route
