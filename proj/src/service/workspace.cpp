//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "synthroute/service/workspace.h"

#include <algorithm>

#include "synthroute/chem/smiles.h"
#include "synthroute/error.h"

namespace synthroute::service {
namespace {

using nlohmann::json;

std::string smiles_of(const chem::Molecule &m) {
  return m.smiles_source().empty() ? chem::write_smiles(m) : m.smiles_source();
}

json difficulty_json(const route::DifficultyAnnotation &a) {
  return { { "material", a.material },
           { "operation", a.operation },
           { "equipment", a.equipment },
           { "note", a.note } };
}

route::DifficultyAnnotation difficulty_from(const json &j) {
  route::DifficultyAnnotation a;
  a.material = j.at("material").get<int>();
  a.operation = j.at("operation").get<int>();
  a.equipment = j.at("equipment").get<int>();
  a.note = j.value("note", std::string());
  a.validate();
  return a;
}

json conditions_json(const route::ReactionConditions &c) {
  return { { "solvent", c.solvent },
           { "reagent", c.reagent },
           { "catalysts", c.catalysts },
           { "instruments", c.instruments },
           { "operation", c.operation },
           { "purification", c.purification } };
}

route::ReactionConditions conditions_from(const json &j) {
  route::ReactionConditions c;
  c.solvent = j.value("solvent", std::string());
  c.reagent = j.value("reagent", std::string());
  c.catalysts = j.value("catalysts", std::string());
  c.instruments = j.value("instruments", std::string());
  c.operation = j.value("operation", std::string());
  c.purification = j.value("purification", std::string());
  return c;
}

json reaction_json(const route::ReactionRecord &r) {
  json j = { { "reactant", smiles_of(r.reactant()) },
             { "product", smiles_of(r.product()) },
             { "yield", r.yield() },
             { "duration_hours", r.duration_hours() },
             { "conditions", conditions_json(r.conditions()) },
             { "source_doi", r.source_doi() },
             { "context_relevancy", nullptr },
             { "difficulty", nullptr } };
  if (r.context_relevancy()) {
    j["context_relevancy"] = *r.context_relevancy();
  }
  if (r.difficulty()) {
    j["difficulty"] = difficulty_json(*r.difficulty());
  }
  return j;
}

route::ReactionRecord reaction_from(const json &j) {
  route::ReactionRecord r(chem::parse_smiles(j.at("reactant").get<std::string>()),
                          chem::parse_smiles(j.at("product").get<std::string>()),
                          j.at("yield").get<double>(),
                          j.at("duration_hours").get<double>(),
                          conditions_from(j.value("conditions", json::object())),
                          j.value("source_doi", std::string()));
  if (j.contains("context_relevancy") && !j["context_relevancy"].is_null()) {
    r.set_context_relevancy(j["context_relevancy"].get<double>());
  }
  if (j.contains("difficulty") && !j["difficulty"].is_null()) {
    r.set_difficulty(difficulty_from(j["difficulty"]));
  }
  return r;
}

route::RouteTree tree_from(const std::string &start, const json &j) {
  route::RouteTree tree(chem::parse_smiles(start));
  for (const json &n: j.at("nodes")) {
    const auto id = n.at("id").get<std::uint64_t>();
    if (id == 0) {
      continue;
    }
    tree.add_reaction_as(route::NodeId { id },
                         route::NodeId { n.at("parent").get<std::uint64_t>() },
                         reaction_from(n.at("reaction")),
                         n.value("chain_override", false));
  }
  tree.reserve_ids(j.at("next_id").get<std::uint64_t>());
  for (const json &c: j.at("comparison")) {
    tree.add_to_comparison(route::NodeId { c.get<std::uint64_t>() });
  }
  return tree;
}

projection::ProjectionLayout layout_from(const json &j) {
  projection::ProjectionLayout l;
  l.perplexity = j.at("perplexity").get<double>();
  l.seed = j.at("seed").get<std::uint64_t>();
  l.overlap_converged = j.at("overlap_converged").get<bool>();
  l.kl_final = j.at("kl_final").get<double>();
  for (const json &p: j.at("points")) {
    l.points.push_back({ p.at("paper_id").get<std::string>(),
                         p.at("x").get<double>(), p.at("y").get<double>(),
                         p.at("relevance").get<double>(),
                         p.at("citation_count").get<int>(),
                         p.at("retrieval_rank").get<int>() });
  }
  return l;
}

SearchStatus search_status_from(const std::string &s) {
  if (s == "pending") {
    return SearchStatus::kPending;
  }
  if (s == "done") {
    return SearchStatus::kDone;
  }
  if (s == "failed") {
    return SearchStatus::kFailed;
  }
  throw Error(ErrorCode::kBadRequest, "unknown search status " + s);
}

}  // namespace

std::string to_string(SearchStatus s) {
  switch (s) {
  case SearchStatus::kPending:
    return "pending";
  case SearchStatus::kDone:
    return "done";
  case SearchStatus::kFailed:
    return "failed";
  }
  return "pending";
}

Workspace::Workspace(std::string id_, std::string starting_smiles_,
                     std::vector<std::string> expected_reactions_)
    : id(std::move(id_)), starting_smiles(std::move(starting_smiles_)),
      expected_reactions(std::move(expected_reactions_)),
      tree(chem::parse_smiles(starting_smiles)) { }

const corpus::PaperRecord *
Workspace::find_paper(const std::string &paper_id) const {
  auto it = std::find_if(papers.begin(), papers.end(),
                         [&](const auto &p) { return p.id == paper_id; });
  return it == papers.end() ? nullptr : &*it;
}

const projection::ProjectionLayout *
Workspace::find_projection(double perplexity, std::uint64_t seed) const {
  for (const auto &l: projections) {
    if (l.perplexity == perplexity && l.seed == seed) {
      return &l;
    }
  }
  return nullptr;
}

nlohmann::json to_json(const route::RouteTree &tree) {
  json nodes = json::array();
  for (const auto &[id, n]: tree.nodes()) {
    json j = { { "id", id.value },
               { "parent", nullptr },
               { "children", json::array() },
               { "label", n.label },
               { "layer", n.layer },
               { "total_yield", n.total_yield },
               { "total_duration", n.total_duration },
               { "chain_override", n.chain_override },
               { "reaction", nullptr } };
    if (n.parent) {
      j["parent"] = n.parent->value;
    }
    for (route::NodeId c: n.children) {
      j["children"].push_back(c.value);
    }
    if (n.reaction) {
      j["reaction"] = reaction_json(*n.reaction);
    }
    nodes.push_back(std::move(j));
  }
  json comparison = json::array();
  for (route::NodeId c: tree.comparison_set()) {
    comparison.push_back(c.value);
  }
  return { { "nodes", nodes },
           { "comparison", comparison },
           { "next_id", tree.next_id() } };
}

nlohmann::json to_json(const projection::ProjectionLayout &layout) {
  json points = json::array();
  for (const auto &p: layout.points) {
    points.push_back({ { "paper_id", p.paper_id },
                       { "x", p.x },
                       { "y", p.y },
                       { "relevance", p.relevance },
                       { "citation_count", p.citation_count },
                       { "retrieval_rank", p.retrieval_rank } });
  }
  return { { "perplexity", layout.perplexity },
           { "seed", layout.seed },
           { "overlap_converged", layout.overlap_converged },
           { "kl_final", layout.kl_final },
           { "points", points } };
}

nlohmann::json to_json(const Workspace &ws) {
  json papers = json::array();
  for (const auto &p: ws.papers) {
    papers.push_back(corpus::to_json(p));
  }
  json projections = json::array();
  for (const auto &l: ws.projections) {
    projections.push_back(to_json(l));
  }
  json annotations = json::array();
  for (const auto &a: ws.annotations) {
    annotations.push_back({ { "operation", a.operation },
                            { "annotation", difficulty_json(a.annotation) } });
  }
  json extractions = json::object();
  for (const auto &[id, e]: ws.extractions) {
    extractions[id] = { { "paper_id", e.paper_id },
                        { "reactant", e.reactant },
                        { "expected_reaction", e.expected_reaction },
                        { "result", extraction::to_json(e.result) } };
  }
  return { { "schema_version", ws.schema_version },
           { "id", ws.id },
           { "starting_smiles", ws.starting_smiles },
           { "expected_reactions", ws.expected_reactions },
           { "search", { { "status", to_string(ws.search_status) },
                         { "error", ws.search_error } } },
           { "papers", papers },
           { "relevance", ws.relevance },
           { "projections", projections },
           { "tree", to_json(ws.tree) },
           { "weights", { { "steps", ws.weights.steps },
                          { "duration", ws.weights.duration },
                          { "yield", ws.weights.yield } } },
           { "relevancy_history", ws.relevancy_history },
           { "annotations", annotations },
           { "extractions", extractions } };
}

void migrate(nlohmann::json &j) {
  const int version = j.value("schema_version", 0);
  if (version > kSchemaVersion) {
    throw Error(ErrorCode::kUnsupportedSchema,
                "workspace schema " + std::to_string(version)
                    + " is newer than supported version "
                    + std::to_string(kSchemaVersion));
  }
  if (version < 1) {
    throw Error(ErrorCode::kUnsupportedSchema,
                "workspace has no usable schema_version");
  }
  // Future upgrades chain here, one step per version.
}

Workspace workspace_from_json(const nlohmann::json &input) {
  json j = input;
  migrate(j);
  try {
    Workspace ws(j.at("id").get<std::string>(),
                 j.at("starting_smiles").get<std::string>(),
                 j.at("expected_reactions").get<std::vector<std::string>>());
    ws.search_status =
        search_status_from(j.at("search").at("status").get<std::string>());
    ws.search_error = j.at("search").value("error", std::string());
    for (const json &p: j.at("papers")) {
      ws.papers.push_back(corpus::paper_from_json(p));
    }
    ws.relevance = j.at("relevance").get<std::vector<double>>();
    for (const json &l: j.at("projections")) {
      ws.projections.push_back(layout_from(l));
    }
    ws.tree = tree_from(ws.starting_smiles, j.at("tree"));
    const json &w = j.at("weights");
    ws.weights = { w.at("steps").get<double>(), w.at("duration").get<double>(),
                   w.at("yield").get<double>() };
    ws.weights.validate();
    ws.relevancy_history = j.at("relevancy_history").get<std::vector<double>>();
    for (const json &a: j.at("annotations")) {
      ws.annotations.push_back({ a.at("operation").get<std::string>(),
                                 difficulty_from(a.at("annotation")) });
    }
    for (const auto &[id, e]: j.at("extractions").items()) {
      ws.extractions.emplace(
          id, StoredExtraction { e.at("paper_id").get<std::string>(),
                                 e.at("reactant").get<std::string>(),
                                 e.at("expected_reaction").get<std::string>(),
                                 extraction::extraction_from_json(e.at("result")) });
    }
    return ws;
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kBadRequest,
                std::string("malformed workspace: ") + e.what());
  }
}

std::string serialize(const Workspace &ws) {
  return to_json(ws).dump(2) + "\n";
}

Workspace deserialize(const std::string &bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kBadRequest,
                std::string("workspace is not valid JSON: ") + e.what());
  }
  return workspace_from_json(j);
}

}  // namespace synthroute::service
