//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SYNTHROUTE_SERVICE_SERVICE_H_
#define SYNTHROUTE_SERVICE_SERVICE_H_

#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "synthroute/corpus/fulltext.h"
#include "synthroute/rank/ranking.h"
#include "synthroute/service/config.h"
#include "synthroute/service/jobs.h"
#include "synthroute/service/store.h"

namespace synthroute::service {

struct ProjectionQuery {
  std::optional<double> perplexity;  // default: default_perplexity(n)
  std::optional<std::uint64_t> seed;  // default: the configured seed
  std::optional<int> display_count;  // default: every paper
};

// The workflow operations behind the REST API. Every mutation goes through
// WorkspaceStore::mutate, so a failed call leaves the stored workspace as it
// was. Results are JSON documents shaped like the API responses.
class Service {
public:
  Service(ServiceConfig config, Providers providers);

  const ServiceConfig &config() const { return config_; }
  WorkspaceStore &store() { return store_; }
  const WorkspaceStore &store() const { return store_; }
  JobManager &jobs() { return jobs_; }

  // {"id", "search_job"}. The literature search runs as a job.
  nlohmann::json create_workspace(const std::string &starting_smiles,
                                  const std::vector<std::string> &expected);
  nlohmann::json get_workspace(const std::string &id) const;
  // Throws kSearchPending until the search job has finished.
  nlohmann::json get_papers(const std::string &id) const;

  // Layouts are cached in the workspace per (perplexity, seed); the display
  // count keeps the points with retrieval rank <= count.
  nlohmann::json get_projection(const std::string &id, const ProjectionQuery &q);
  // Same computation as a cancelable job.
  nlohmann::json start_projection(const std::string &id, const ProjectionQuery &q);

  // Throws kPaperNotFound synchronously; fetch and extraction run as a job.
  nlohmann::json start_extraction(const std::string &id, const std::string &paper_id,
                                  std::optional<std::string> reactant,
                                  std::optional<std::string> expected);
  nlohmann::json get_job(const std::string &job_id) const;
  nlohmann::json cancel_job(const std::string &job_id);

  nlohmann::json get_tree(const std::string &id) const;
  nlohmann::json add_node(const std::string &id, const nlohmann::json &body);
  nlohmann::json remove_node(const std::string &id, std::uint64_t node);
  nlohmann::json set_difficulty(const std::string &id, std::uint64_t node,
                                const nlohmann::json &body);
  nlohmann::json similarity(const std::string &id, std::uint64_t node) const;
  nlohmann::json add_to_comparison(const std::string &id, std::uint64_t node);
  nlohmann::json remove_from_comparison(const std::string &id, std::uint64_t node);
  nlohmann::json get_comparison(const std::string &id) const;

  nlohmann::json get_rankings(const std::string &id) const;
  nlohmann::json put_weights(const std::string &id, const rank::CriteriaWeights &w);

  nlohmann::json relevancy_stats(const std::string &id) const;

private:
  nlohmann::json projection_for(const std::string &id, const ProjectionQuery &q,
                                std::stop_token stop);

  ServiceConfig config_;
  Providers providers_;
  WorkspaceStore store_;
  corpus::FullTextFetcher fetcher_;
  JobManager jobs_;
};

// Ranking of a workspace's decision sequences under its weights.
nlohmann::json rankings_json(const Workspace &ws);
nlohmann::json rankings_json(const Workspace &ws, const rank::CriteriaWeights &w);

}  // namespace synthroute::service

#endif  // SYNTHROUTE_SERVICE_SERVICE_H_
