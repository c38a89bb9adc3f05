//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "synthroute/service/service.h"

#include <algorithm>

#include "synthroute/chem/smiles.h"
#include "synthroute/corpus/relevance.h"
#include "synthroute/error.h"
#include "synthroute/extraction/text.h"
#include "synthroute/extraction/units.h"
#include "synthroute/projection/project.h"

namespace synthroute::service {
namespace {

using nlohmann::json;

std::vector<std::string> embedding_texts(const std::vector<corpus::PaperRecord> &papers) {
  std::vector<std::string> out;
  out.reserve(papers.size());
  for (const auto &p: papers) {
    out.push_back(p.embedding_text());
  }
  return out;
}

void require_search_done(const Workspace &ws) {
  if (ws.search_status == SearchStatus::kPending) {
    throw Error(ErrorCode::kSearchPending,
                "literature search for " + ws.id + " has not finished");
  }
  if (ws.search_status == SearchStatus::kFailed) {
    throw Error(ErrorCode::kSearchPending,
                "literature search for " + ws.id + " failed: " + ws.search_error);
  }
}

// Runs a body parser, turning JSON type errors into validation errors.
template <typename F>
auto parse_body(F &&f) {
  try {
    return f();
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("invalid request body: ") + e.what());
  }
}

route::DifficultyAnnotation difficulty_from(const json &j) {
  route::DifficultyAnnotation a;
  parse_body([&] {
    a.material = j.at("material").get<int>();
    a.operation = j.at("operation").get<int>();
    a.equipment = j.at("equipment").get<int>();
    a.note = j.value("note", std::string());
    return 0;
  });
  a.validate();
  return a;
}

route::ReactionConditions conditions_from(const json &j) {
  return parse_body([&] {
    route::ReactionConditions c;
    c.solvent = j.value("solvent", std::string());
    c.reagent = j.value("reagent", std::string());
    c.catalysts = j.value("catalysts", std::string());
    c.instruments = j.value("instruments", std::string());
    c.operation = j.value("operation", std::string());
    c.purification = j.value("purification", std::string());
    return c;
  });
}

json node_json(const route::RouteTree &tree, route::NodeId id) {
  const json all = to_json(tree);
  for (const json &n: all.at("nodes")) {
    if (n.at("id").get<std::uint64_t>() == id.value) {
      return n;
    }
  }
  throw Error(ErrorCode::kNodeNotFound, "no node " + route::to_string(id));
}

json comparison_ids(const route::RouteTree &tree) {
  json out = json::array();
  for (route::NodeId c: tree.comparison_set()) {
    out.push_back(c.value);
  }
  return out;
}

double resolve_perplexity(const Workspace &ws, const ProjectionQuery &q) {
  return q.perplexity.value_or(projection::default_perplexity(ws.papers.size()));
}

json filtered_layout(const projection::ProjectionLayout &layout,
                     std::optional<int> display_count, bool cache_hit) {
  json j = to_json(layout);
  if (display_count) {
    json kept = json::array();
    for (const json &p: j["points"]) {
      if (p.at("retrieval_rank").get<int>() <= *display_count) {
        kept.push_back(p);
      }
    }
    j["points"] = std::move(kept);
  }
  j["cache_hit"] = cache_hit;
  return j;
}

}  // namespace

json rankings_json(const Workspace &ws, const rank::CriteriaWeights &w) {
  const auto sequences = ws.tree.decision_sequences();
  std::vector<rank::SequenceCriteria> criteria;
  criteria.reserve(sequences.size());
  for (const auto &s: sequences) {
    criteria.push_back({ s.leaf.value, s.steps, s.total_yield, s.total_duration });
  }
  const auto entries = rank::score(criteria, w);

  json rows = json::array();
  for (const auto &e: entries) {
    const route::NodeId leaf { e.raw.leaf };
    json path = json::array();
    for (const auto &s: sequences) {
      if (s.leaf == leaf) {
        for (route::NodeId n: s.path) {
          path.push_back(n.value);
        }
      }
    }
    rows.push_back({ { "rank", e.rank },
                     { "leaf", e.raw.leaf },
                     { "label", ws.tree.node(leaf).label },
                     { "path", path },
                     { "steps", e.raw.steps },
                     { "total_yield", e.raw.total_yield },
                     { "total_duration", e.raw.total_duration },
                     { "normalized", { { "steps", e.normalized.steps },
                                       { "yield", e.normalized.yield },
                                       { "duration", e.normalized.duration } } },
                     { "weighted_score", e.weighted_score } });
  }
  return { { "weights", { { "steps", w.steps },
                          { "duration", w.duration },
                          { "yield", w.yield } } },
           { "rankings", rows } };
}

json rankings_json(const Workspace &ws) {
  return rankings_json(ws, ws.weights);
}

Service::Service(ServiceConfig config, Providers providers)
    : config_(std::move(config)), providers_(std::move(providers)),
      store_(config_.data_dir),
      fetcher_(*providers_.fulltext, corpus::FullTextCache(config_.fulltext_cache_dir)),
      jobs_(config_.workers) { }

json Service::create_workspace(const std::string &starting_smiles,
                               const std::vector<std::string> &expected) {
  const auto ws = store_.create(starting_smiles, expected);
  const std::string id = ws->id;
  const std::string context =
      corpus::query_context(starting_smiles, expected.empty() ? "" : expected.front());

  const std::string job = jobs_.submit(JobKind::kSearch, id, [this, id, starting_smiles,
                                                               context](std::stop_token) {
    try {
      corpus::SearchOutcome found =
          corpus::search_papers(*providers_.literature, starting_smiles,
                                config_.search_limit);
      for (auto &p: found.papers) {
        p.fulltext.reset();
      }
      std::vector<double> relevance;
      if (!found.papers.empty()) {
        const auto texts = embedding_texts(found.papers);
        const auto embedder = providers_.embedder(texts);
        relevance = corpus::relevance_scores(found.papers, context, *embedder);
      }
      const std::size_t n = found.papers.size();
      store_.mutate(id, [&](Workspace &w) {
        w.papers = std::move(found.papers);
        w.relevance = std::move(relevance);
        w.search_status = SearchStatus::kDone;
        w.search_error.clear();
      });
      return json { { "workspace_id", id },
                    { "paper_count", n },
                    { "no_results", found.no_results } };
    } catch (const Error &e) {
      const std::string what = std::string(e.code_name()) + ": " + e.what();
      store_.mutate(id, [&](Workspace &w) {
        w.search_status = SearchStatus::kFailed;
        w.search_error = what;
      });
      throw;
    }
  });
  return { { "id", id }, { "search_job", job } };
}

json Service::get_workspace(const std::string &id) const {
  return to_json(*store_.get(id));
}

json Service::get_papers(const std::string &id) const {
  const auto ws = store_.get(id);
  require_search_done(*ws);
  json out = json::array();
  for (std::size_t i = 0; i < ws->papers.size(); ++i) {
    json p = corpus::to_json(ws->papers[i]);
    p.erase("fulltext");
    p["relevance"] = i < ws->relevance.size() ? ws->relevance[i] : 0.0;
    out.push_back(std::move(p));
  }
  return { { "workspace_id", id }, { "papers", out } };
}

json Service::projection_for(const std::string &id, const ProjectionQuery &q,
                             std::stop_token stop) {
  const auto ws = store_.get(id);
  require_search_done(*ws);
  if (q.display_count && *q.display_count < 1) {
    throw Error(ErrorCode::kInvalidArgument, "display_count must be >= 1");
  }
  const double perplexity = resolve_perplexity(*ws, q);
  const std::uint64_t seed = q.seed.value_or(config_.seed);
  if (const auto *cached = ws->find_projection(perplexity, seed)) {
    return filtered_layout(*cached, q.display_count, true);
  }

  projection::ProjectionParams params;
  params.tsne.perplexity = perplexity;
  params.tsne.seed = seed;
  params.tsne.validate(ws->papers.size());
  const auto texts = embedding_texts(ws->papers);
  const auto embedder = providers_.embedder(texts);
  projection::ProjectionLayout layout =
      projection::project_corpus(ws->papers, ws->relevance, params, *embedder, stop);

  store_.mutate(id, [&](Workspace &w) {
    if (w.find_projection(perplexity, seed) == nullptr) {
      w.projections.push_back(layout);
    }
  });
  return filtered_layout(layout, q.display_count, false);
}

json Service::get_projection(const std::string &id, const ProjectionQuery &q) {
  return projection_for(id, q, {});
}

json Service::start_projection(const std::string &id, const ProjectionQuery &q) {
  const auto ws = store_.get(id);
  require_search_done(*ws);
  const std::string job = jobs_.submit(JobKind::kProjection, id,
                                       [this, id, q](std::stop_token stop) {
                                         return projection_for(id, q, stop);
                                       });
  return { { "job_id", job } };
}

json Service::start_extraction(const std::string &id, const std::string &paper_id,
                               std::optional<std::string> reactant,
                               std::optional<std::string> expected) {
  const auto ws = store_.get(id);
  require_search_done(*ws);
  const corpus::PaperRecord *found = ws->find_paper(paper_id);
  if (found == nullptr) {
    throw Error(ErrorCode::kPaperNotFound, "no paper " + paper_id + " in " + id);
  }
  const corpus::PaperRecord paper = *found;
  const std::string query = reactant.value_or(ws->starting_smiles);
  chem::parse_smiles(query);
  const std::string expectation =
      expected.value_or(ws->expected_reactions.empty() ? "" : ws->expected_reactions.front());

  const std::string job = jobs_.submit(
      JobKind::kExtraction, id, [this, id, paper, query, expectation](std::stop_token stop) {
        const std::string text = fetcher_.fetch(paper);
        if (stop.stop_requested()) {
          throw Error(ErrorCode::kCanceled, "extraction canceled");
        }
        const auto paragraphs = extraction::chunk_document(text);
        const auto embedder = providers_.embedder(paragraphs);
        extraction::ExtractionOptions options;
        options.max_retries = config_.max_retries;
        const extraction::ExtractionResult result = extraction::extract_reaction(
            text, query, expectation, *providers_.chat, *embedder, options);

        json recommendation = nullptr;
        json stats = nullptr;
        const auto ws = store_.mutate(id, [&](Workspace &w) {
          w.extractions[paper.id] = { paper.id, query, expectation, result };
          if (result.status == extraction::ExtractionStatus::kFound) {
            w.relevancy_history.push_back(result.context_relevancy);
          }
        });
        if (!ws->relevancy_history.empty()) {
          const auto s = extraction::relevancy_stats(ws->relevancy_history);
          stats = { { "mean", s.mean }, { "q1", s.q1 }, { "q3", s.q3 },
                    { "count", s.history.size() } };
        }
        const auto op = result.fields.find("operation");
        if (op != result.fields.end() && op->second && !ws->annotations.empty()) {
          std::vector<std::string> ops;
          for (const auto &a: ws->annotations) {
            ops.push_back(a.operation);
          }
          ops.push_back(*op->second);
          const auto rec_embedder = providers_.embedder(ops);
          if (const auto rec = extraction::recommend_difficulty(
                  *op->second, ws->annotations, *rec_embedder)) {
            recommendation = { { "material", rec->annotation.material },
                               { "operation", rec->annotation.operation },
                               { "equipment", rec->annotation.equipment },
                               { "similarity", rec->similarity },
                               { "source_index", rec->source_index } };
          }
        }
        return json { { "paper_id", paper.id },
                      { "doi", paper.doi },
                      { "extraction", extraction::to_json(result) },
                      { "relevancy_stats", stats },
                      { "recommendation", recommendation } };
      });
  return { { "job_id", job } };
}

json Service::get_job(const std::string &job_id) const {
  return to_json(jobs_.get(job_id));
}

json Service::cancel_job(const std::string &job_id) {
  return to_json(jobs_.cancel(job_id));
}

json Service::get_tree(const std::string &id) const {
  const auto ws = store_.get(id);
  return to_json(ws->tree);
}

json Service::add_node(const std::string &id, const json &body) {
  struct Request {
    std::uint64_t parent = 0;
    bool chain_override = false;
    std::optional<std::string> paper_id;
    std::optional<json> reaction;
    extraction::ManualEdits edits;
    std::optional<route::DifficultyAnnotation> difficulty;
  };
  const Request req = parse_body([&] {
    Request r;
    r.parent = body.at("parent").get<std::uint64_t>();
    r.chain_override = body.value("override", false);
    if (body.contains("paper_id")) {
      r.paper_id = body["paper_id"].get<std::string>();
    }
    if (body.contains("reaction")) {
      r.reaction = body["reaction"];
    }
    if (r.paper_id.has_value() == r.reaction.has_value()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "give exactly one of paper_id or reaction");
    }
    if (body.contains("edits")) {
      const json &e = body["edits"];
      if (e.contains("product_smiles")) {
        r.edits.product_smiles = e["product_smiles"].get<std::string>();
      }
      if (e.contains("yield")) {
        r.edits.yield = e["yield"].get<double>();
      }
      if (e.contains("duration_hours")) {
        r.edits.duration_hours = e["duration_hours"].get<double>();
      }
      if (e.contains("conditions")) {
        r.edits.conditions = conditions_from(e["conditions"]);
      }
    }
    if (body.contains("difficulty") && !body["difficulty"].is_null()) {
      r.difficulty = difficulty_from(body["difficulty"]);
    }
    return r;
  });

  route::NodeId added;
  const auto ws = store_.mutate(id, [&](Workspace &w) {
    std::optional<route::ReactionRecord> record;
    if (req.paper_id) {
      const auto it = w.extractions.find(*req.paper_id);
      if (it == w.extractions.end()) {
        throw Error(ErrorCode::kPaperNotFound,
                    "no extraction for paper " + *req.paper_id);
      }
      const corpus::PaperRecord *paper = w.find_paper(*req.paper_id);
      record.emplace(extraction::to_reaction_record(
          it->second.result, it->second.reactant, paper ? paper->doi : "", req.edits));
    } else {
      const json &r = *req.reaction;
      record.emplace(parse_body([&] {
        return route::ReactionRecord(
            chem::parse_smiles(r.at("reactant").get<std::string>()),
            chem::parse_smiles(r.at("product").get<std::string>()),
            r.at("yield").get<double>(), r.at("duration_hours").get<double>(),
            conditions_from(r.value("conditions", json::object())),
            r.value("source_doi", std::string()));
      }));
    }
    if (req.difficulty) {
      record->set_difficulty(*req.difficulty);
    }
    const std::string operation = record->conditions().operation;
    added = w.tree.add_reaction(route::NodeId { req.parent }, std::move(*record),
                                req.chain_override);
    if (req.difficulty && !operation.empty()) {
      w.annotations.push_back({ operation, *req.difficulty });
    }
  });
  return { { "node_id", added.value }, { "node", node_json(ws->tree, added) } };
}

json Service::remove_node(const std::string &id, std::uint64_t node) {
  std::size_t removed = 0;
  store_.mutate(id, [&](Workspace &w) {
    removed = w.tree.remove_subtree(route::NodeId { node });
  });
  return { { "removed", removed } };
}

json Service::set_difficulty(const std::string &id, std::uint64_t node,
                             const json &body) {
  const route::DifficultyAnnotation a = difficulty_from(body);
  const auto ws = store_.mutate(id, [&](Workspace &w) {
    const route::NodeId nid { node };
    w.tree.set_difficulty(nid, a);
    const std::string &operation = w.tree.node(nid).reaction->conditions().operation;
    if (!operation.empty()) {
      w.annotations.push_back({ operation, a });
    }
  });
  return { { "node", node_json(ws->tree, route::NodeId { node }) } };
}

json Service::similarity(const std::string &id, std::uint64_t node) const {
  const auto ws = store_.get(id);
  json marks = json::array();
  for (const auto &[nid, s]: ws->tree.similarity_marks(route::NodeId { node })) {
    marks.push_back({ { "node_id", nid.value }, { "similarity", s } });
  }
  return { { "selected", node }, { "marks", marks } };
}

json Service::add_to_comparison(const std::string &id, std::uint64_t node) {
  const auto ws = store_.mutate(id, [&](Workspace &w) {
    w.tree.add_to_comparison(route::NodeId { node });
  });
  return { { "comparison", comparison_ids(ws->tree) } };
}

json Service::remove_from_comparison(const std::string &id, std::uint64_t node) {
  const auto ws = store_.mutate(id, [&](Workspace &w) {
    w.tree.remove_from_comparison(route::NodeId { node });
  });
  return { { "comparison", comparison_ids(ws->tree) } };
}

json Service::get_comparison(const std::string &id) const {
  const auto ws = store_.get(id);
  const route::ComparisonMatrix m = ws->tree.comparison_matrix();
  json rows = json::array();
  for (route::NodeId r: m.rows) {
    json row = node_json(ws->tree, r);
    rows.push_back(std::move(row));
  }
  json columns = json::array();
  for (route::NodeId c: m.columns) {
    columns.push_back(c.value);
  }
  return { { "comparison", comparison_ids(ws->tree) },
           { "nodes", rows },
           { "columns", columns },
           { "cells", m.cells } };
}

json Service::get_rankings(const std::string &id) const {
  return rankings_json(*store_.get(id));
}

json Service::put_weights(const std::string &id, const rank::CriteriaWeights &w) {
  w.validate();
  const auto ws = store_.mutate(id, [&](Workspace &ws) { ws.weights = w; });
  return rankings_json(*ws);
}

json Service::relevancy_stats(const std::string &id) const {
  const auto ws = store_.get(id);
  if (ws->relevancy_history.empty()) {
    return { { "count", 0 }, { "mean", nullptr }, { "q1", nullptr }, { "q3", nullptr } };
  }
  const auto s = extraction::relevancy_stats(ws->relevancy_history);
  return { { "count", s.history.size() }, { "mean", s.mean }, { "q1", s.q1 }, { "q3", s.q3 },
           { "history", s.history } };
}

}  // namespace synthroute::service
