//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: serve the REST API, ingest a paper fixture into a
// workspace, run one extraction, rank a saved workspace and score an
// extraction run against gold annotations.

#include <csignal>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "synthroute/chem/smiles.h"
#include "synthroute/corpus/literature.h"
#include "synthroute/error.h"
#include "synthroute/eval/harness.h"
#include "synthroute/extraction/text.h"
#include "synthroute/service/api.h"
#include "synthroute/service/service.h"

namespace {

using nlohmann::json;
using namespace synthroute;

service::ServiceConfig config_or_default(const std::string &path,
                                         const std::string &data_dir) {
  service::ServiceConfig c;
  if (!path.empty()) {
    c = service::load_config(path);
  } else {
    service::apply_env_overrides(c, [](const char *k) { return std::getenv(k); });
  }
  if (!data_dir.empty()) {
    if (c.fulltext_cache_dir == c.data_dir / "fulltext") {
      c.fulltext_cache_dir.clear();
    }
    c.data_dir = data_dir;
  }
  if (c.fulltext_cache_dir.empty()) {
    c.fulltext_cache_dir = c.data_dir / "fulltext";
  }
  return c;
}

rank::CriteriaWeights parse_weights(const std::string &text) {
  std::vector<double> v;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(part, &used));
      if (used != part.size()) {
        throw std::invalid_argument(part);
      }
    } catch (const std::logic_error &) {
      throw Error(ErrorCode::kBadRequest, "weights must be numbers: " + text);
    }
  }
  if (v.size() != 3) {
    throw Error(ErrorCode::kBadRequest, "weights take steps,duration,yield: " + text);
  }
  return { v[0], v[1], v[2] };
}

int run_serve(const std::string &config_path, const std::string &data_dir,
              const std::string &host, int port) {
  // Block the stop signals before any thread starts so only the waiter
  // below receives them.
  sigset_t stop_signals;
  sigemptyset(&stop_signals);
  sigaddset(&stop_signals, SIGINT);
  sigaddset(&stop_signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &stop_signals, nullptr);

  service::ServiceConfig config = config_or_default(config_path, data_dir);
  service::Providers providers = service::make_providers(config);
  service::Service svc(std::move(config), std::move(providers));
  service::Api api(svc);
  service::HttpServer server(api);
  const int bound = server.bind(host, port);
  if (bound < 0) {
    std::cerr << "cannot bind " << host << ":" << port << "\n";
    return 1;
  }
  std::cout << "listening on http://" << host << ":" << bound << std::endl;

  std::jthread waiter([&server, &stop_signals] {
    int sig = 0;
    sigwait(&stop_signals, &sig);
    server.stop();
  });
  server.listen();
  return 0;
}

int run_ingest(const std::string &file, const std::string &config_path,
               const std::string &data_dir, const std::string &smiles,
               const std::string &expected) {
  const auto papers = corpus::load_papers_jsonl(file);
  std::set<std::string> dois;
  int with_text = 0;
  for (const auto &p: papers) {
    if (!p.doi.empty()) {
      dois.insert(corpus::normalize_doi(p.doi));
    }
    with_text += p.fulltext ? 1 : 0;
  }
  json out = { { "file", file },
               { "papers", papers.size() },
               { "distinct_dois", dois.size() },
               { "with_fulltext", with_text } };

  if (!smiles.empty()) {
    service::ServiceConfig config = config_or_default(config_path, data_dir);
    config.literature_provider = "fixture";
    config.literature_path = file;
    service::Providers providers = service::make_providers(config);
    service::Service svc(std::move(config), std::move(providers));
    std::vector<std::string> expected_list;
    if (!expected.empty()) {
      expected_list.push_back(expected);
    }
    const json created = svc.create_workspace(smiles, expected_list);
    const std::string id = created.at("id");
    const auto job = svc.jobs().wait(created.at("search_job"), std::chrono::minutes(5));
    if (job.state != service::JobState::kDone) {
      std::cerr << service::to_json(job).dump() << "\n";
      return 1;
    }
    out["workspace"] = id;
    out["workspace_file"] = (svc.config().data_dir / (id + ".json")).string();
    out["retrieved"] = svc.get_papers(id).at("papers").size();
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_extract(const std::string &config_path, const std::string &data_dir,
                const std::string &doi, const std::string &reactant,
                const std::string &expected) {
  const service::ServiceConfig config = config_or_default(config_path, data_dir);
  const service::Providers providers = service::make_providers(config);
  chem::parse_smiles(reactant);

  corpus::PaperRecord paper;
  paper.id = doi;
  paper.doi = doi;
  if (config.literature_provider == "fixture") {
    for (const auto &p: corpus::load_papers_jsonl(config.literature_path)) {
      if (corpus::normalize_doi(p.doi) == corpus::normalize_doi(doi)) {
        paper = p;
        break;
      }
    }
  }
  const corpus::FullTextFetcher fetcher(*providers.fulltext,
                                        corpus::FullTextCache(config.fulltext_cache_dir));
  const std::string text = fetcher.fetch(paper);
  const auto paragraphs = extraction::chunk_document(text);
  const auto embedder = providers.embedder(paragraphs);
  extraction::ExtractionOptions options;
  options.max_retries = config.max_retries;
  const auto result =
      extraction::extract_reaction(text, reactant, expected, *providers.chat, *embedder, options);
  std::cout << json { { "doi", doi }, { "extraction", extraction::to_json(result) } }.dump(2)
            << "\n";
  return 0;
}

int run_rank(const std::string &workspace_file, const std::string &weights, bool as_json) {
  const service::Workspace ws = service::deserialize(service::read_file(workspace_file));
  const json r = weights.empty() ? service::rankings_json(ws)
                                 : service::rankings_json(ws, parse_weights(weights));
  if (as_json) {
    std::cout << r.dump(2) << "\n";
    return 0;
  }
  std::printf("%-5s %-6s %-24s %5s %8s %10s %8s\n", "rank", "leaf", "label", "steps", "yield",
              "duration", "score");
  for (const json &e: r.at("rankings")) {
    std::printf("%-5d %-6llu %-24s %5d %8.4f %10.2f %8.4f\n", e.at("rank").get<int>(),
                e.at("leaf").get<unsigned long long>(),
                e.at("label").get<std::string>().substr(0, 24).c_str(), e.at("steps").get<int>(),
                e.at("total_yield").get<double>(), e.at("total_duration").get<double>(),
                e.at("weighted_score").get<double>());
  }
  return 0;
}

int run_eval(const std::string &gold_path, const std::string &pred_path,
             const std::string &tool, bool as_json) {
  const auto gold = eval::load_reactions_jsonl(gold_path, true);
  const auto pred = eval::load_reactions_jsonl(pred_path, false);
  const eval::EvalReport report = eval::evaluate(pred, gold);
  const std::vector<eval::ReportRow> rows { { tool, report.metrics } };
  if (as_json) {
    json j = eval::format_report_json(rows);
    std::cout << json { { "report", j }, { "unparseable", report.unparseable } }.dump(2) << "\n";
  } else {
    std::cout << eval::format_report_text(rows);
    std::printf("tp=%d fp=%d fn=%d unparseable=%d\n", report.metrics.tp, report.metrics.fp,
                report.metrics.fn, report.unparseable);
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app { "synthroute: literature-driven synthesis route exploration" };
  app.require_subcommand(1);

  std::string config_path;
  std::string data_dir;

  auto *serve = app.add_subcommand("serve", "Serve the REST API");
  std::string host = "127.0.0.1";
  int port = 8080;
  serve->add_option("--port", port, "Port, 0 picks a free one")->check(CLI::Range(0, 65535));
  serve->add_option("--config", config_path, "Provider configuration (INI)")
      ->required()
      ->check(CLI::ExistingFile);
  serve->add_option("--host", host, "Address to bind");
  serve->add_option("--data-dir", data_dir, "Workspace directory, overrides the config");

  auto *ingest = app.add_subcommand("ingest", "Load a paper fixture, optionally into a workspace");
  std::string ingest_file;
  std::string smiles;
  std::string ingest_expected;
  ingest->add_option("file", ingest_file, "Papers, one JSON object per line")
      ->required()
      ->check(CLI::ExistingFile);
  ingest->add_option("--smiles", smiles, "Starting molecule; creates a workspace");
  ingest->add_option("--expected", ingest_expected, "Expected reaction");
  ingest->add_option("--config", config_path, "Provider configuration (INI)")
      ->check(CLI::ExistingFile);
  ingest->add_option("--data-dir", data_dir, "Workspace directory, overrides the config");

  auto *extract = app.add_subcommand("extract", "Extract one reaction from a paper");
  std::string doi;
  std::string reactant;
  std::string extract_expected;
  extract->add_option("--doi", doi, "Paper DOI")->required();
  extract->add_option("--reactant", reactant, "Reactant SMILES")->required();
  extract->add_option("--expected", extract_expected, "Expected reaction")->required();
  extract->add_option("--config", config_path, "Provider configuration (INI)")
      ->required()
      ->check(CLI::ExistingFile);
  extract->add_option("--data-dir", data_dir, "Holds the full-text cache, overrides the config");

  auto *rank_cmd = app.add_subcommand("rank", "Rank the decision sequences of a saved workspace");
  std::string workspace_file;
  std::string weights;
  bool rank_json = false;
  rank_cmd->add_option("--workspace", workspace_file, "Workspace file")
      ->required()
      ->check(CLI::ExistingFile);
  rank_cmd->add_option("--weights", weights, "steps,duration,yield; default: the saved weights");
  rank_cmd->add_flag("--json", rank_json, "Print the API response body");

  auto *eval_cmd = app.add_subcommand("eval", "Score predicted reactions against gold annotations");
  std::string gold;
  std::string pred;
  std::string tool = "synthroute";
  bool eval_json = false;
  eval_cmd->add_option("--gold", gold, "Gold annotations (JSONL)")
      ->required()
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("--pred", pred, "Predictions (JSONL)")
      ->required()
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("--tool", tool, "Row label");
  eval_cmd->add_flag("--json", eval_json, "Machine-readable report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*serve) {
      return run_serve(config_path, data_dir, host, port);
    }
    if (*ingest) {
      return run_ingest(ingest_file, config_path, data_dir, smiles, ingest_expected);
    }
    if (*extract) {
      return run_extract(config_path, data_dir, doi, reactant, extract_expected);
    }
    if (*rank_cmd) {
      return run_rank(workspace_file, weights, rank_json);
    }
    return run_eval(gold, pred, tool, eval_json);
  } catch (const Error &e) {
    std::cerr << "error " << e.code_name() << ": " << e.what() << "\n";
    return 2;
  }
}
