//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate. Prints one PASS or FAIL line per criterion, each with
// its wall time against the runtime limit, and exits non-zero if any fails.

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "synthroute/chem/similarity.h"
#include "synthroute/chem/smiles.h"
#include "synthroute/eval/harness.h"
#include "synthroute/extraction/chat.h"
#include "synthroute/extraction/extract.h"
#include "synthroute/hash.h"
#include "synthroute/projection/embedding.h"
#include "synthroute/projection/overlap.h"
#include "synthroute/projection/tsne.h"
#include "synthroute/rank/ranking.h"
#include "synthroute/route/tree.h"

#include "../unit/api_session.h"

namespace {

using namespace synthroute;
using nlohmann::json;

// Thrown by check() to end a criterion with a reason.
struct Failure {
  std::string reason;
};

void check(bool ok, const std::string &what) {
  if (!ok) {
    throw Failure { what };
  }
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

template <typename Fn>
ErrorCode error_of(Fn &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  throw Failure { "expected an error, call succeeded" };
}

// ---------------------------------------------------------------------------
// Cumulative yield

struct PathTotals {
  int steps = 0;
  double yield = 1.0;
  double duration = 0.0;
};

// Walk parent links to the root, then fold root first.
PathTotals walk_path(const route::RouteTree &tree, route::NodeId id) {
  std::vector<const route::RouteNode *> path;
  for (const route::RouteNode *n = &tree.node(id); n->parent; n = &tree.node(*n->parent)) {
    path.push_back(n);
  }
  PathTotals t;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    ++t.steps;
    t.yield *= (*it)->reaction->yield();
    t.duration += (*it)->reaction->duration_hours();
  }
  return t;
}

route::ReactionRecord step(const chem::Molecule &from, const std::string &to, double yield,
                           double hours) {
  return route::ReactionRecord(from, chem::parse_smiles(to), yield, hours);
}

void cumulative_yield() {
  {
    route::RouteTree tree(chem::parse_smiles("CCO"));
    const auto a = tree.add_reaction(tree.root(), step(tree.root_molecule(), "CC=O", 0.80, 2));
    const auto b = tree.add_reaction(a, step(chem::parse_smiles("CC=O"), "CC(=O)O", 0.90, 3));
    const double t = tree.node(b).total_yield;
    check(std::abs(t - 0.72) <= 0.72 * 1e-12, "0.80 then 0.90 gave " + fmt(t));
  }

  const std::vector<std::string> pool { "CC=O", "CC(=O)O", "c1ccccc1O", "CC(=O)Cl",
                                        "CCN",  "O=C1CCCN1", "N#Cc1ccccc1", "CCOC(C)=O" };
  std::vector<chem::Molecule> molecules;
  for (const auto &s: pool) {
    molecules.push_back(chem::parse_smiles(s));
  }
  std::mt19937_64 rng(20261016);
  for (int t = 0; t < 1000; ++t) {
    route::RouteTree tree(chem::parse_smiles("CCO"));
    const int target = 2 + static_cast<int>(rng() % 40);
    while (static_cast<int>(tree.size()) < target) {
      auto it = tree.nodes().begin();
      std::advance(it, static_cast<long>(rng() % tree.size()));
      const route::NodeId parent = it->first;
      const chem::Molecule &from = it->second.output(tree.root_molecule());
      const std::size_t k = rng() % pool.size();
      const double yield = std::uniform_real_distribution<double>(0.01, 1.0)(rng);
      const double hours = 0.25 * static_cast<double>(rng() % 97);
      tree.add_reaction(parent, route::ReactionRecord(from, molecules[k], yield, hours));
    }
    // Occasionally edit a measurement or prune so refreshed totals are
    // covered as well.
    if (tree.size() > 3 && rng() % 3 == 0) {
      auto it = std::next(tree.nodes().begin(), 1 + static_cast<long>(rng() % (tree.size() - 1)));
      tree.set_measurements(it->first, 0.5, 1.5);
    }
    if (tree.size() > 3 && rng() % 4 == 0) {
      auto it = std::next(tree.nodes().begin(), 1 + static_cast<long>(rng() % (tree.size() - 1)));
      tree.remove_subtree(it->first);
    }
    for (const auto &[id, n]: tree.nodes()) {
      const PathTotals o = walk_path(tree, id);
      check(n.layer == o.steps, "tree " + std::to_string(t) + ": layer differs");
      check(std::abs(n.total_yield - o.yield) <= 1e-12 * o.yield,
            "tree " + std::to_string(t) + ": yield " + fmt(n.total_yield) + " vs " + fmt(o.yield));
      check(std::abs(n.total_duration - o.duration) <= 1e-12 * std::max(1.0, o.duration),
            "tree " + std::to_string(t) + ": duration differs");
    }
    for (const auto &seq: tree.decision_sequences()) {
      const PathTotals o = walk_path(tree, seq.leaf);
      check(seq.steps == o.steps && std::abs(seq.total_yield - o.yield) <= 1e-12 * o.yield,
            "tree " + std::to_string(t) + ": decision sequence totals differ");
    }
  }
}

// ---------------------------------------------------------------------------
// Ranking

std::vector<rank::SequenceCriteria> random_instance(std::mt19937_64 &rng, int n) {
  std::uniform_int_distribution<int> steps(1, 8);
  std::uniform_real_distribution<double> yield(0.01, 1.0);
  std::uniform_real_distribution<double> hours(0.0, 120.0);
  std::vector<rank::SequenceCriteria> out;
  for (int i = 0; i < n; ++i) {
    out.push_back({ static_cast<std::uint64_t>(i + 1), steps(rng), yield(rng), hours(rng) });
  }
  return out;
}

rank::CriteriaWeights random_weights(std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double a = u(rng);
  double b = u(rng);
  if (a > b) {
    std::swap(a, b);
  }
  return { a, b - a, 1.0 - b };
}

std::vector<std::uint64_t> order_of(const std::vector<rank::RankEntry> &entries) {
  std::vector<std::uint64_t> ids;
  for (const auto &e: entries) {
    ids.push_back(e.raw.leaf);
  }
  return ids;
}

void ranking() {
  // A: 3 steps, 0.72, 10 h. B: 4 steps, 0.50, 8 h. A is best on steps and
  // yield (0.1 + 0.6), B only on duration (0.3).
  const std::vector<rank::SequenceCriteria> two { { 1, 3, 0.72, 10 }, { 2, 4, 0.50, 8 } };
  const auto r = rank::score(two, { 0.1, 0.3, 0.6 });
  check(r.size() == 2 && r[0].raw.leaf == 1, "A does not rank first");
  check(std::abs(r[0].weighted_score - 0.7) <= 1e-12, "A scored " + fmt(r[0].weighted_score));
  check(std::abs(r[1].weighted_score - 0.3) <= 1e-12, "B scored " + fmt(r[1].weighted_score));

  std::mt19937_64 rng(7001);
  for (int t = 0; t < 10000; ++t) {
    auto seqs = random_instance(rng, 2 + static_cast<int>(rng() % 12));
    // Sequence 0 strictly dominates sequence 1 on every criterion.
    seqs[1].steps = seqs[0].steps + 1 + static_cast<int>(rng() % 3);
    seqs[1].total_yield = seqs[0].total_yield * std::uniform_real_distribution<double>(0.1, 0.99)(rng);
    seqs[1].total_duration = seqs[0].total_duration + std::uniform_real_distribution<double>(0.1, 50)(rng);
    std::shuffle(seqs.begin(), seqs.end(), rng);
    const auto w = random_weights(rng);
    const auto ranked = rank::score(seqs, w);
    int rank_a = 0;
    int rank_b = 0;
    for (const auto &e: ranked) {
      rank_a = e.raw.leaf == 1 ? e.rank : rank_a;
      rank_b = e.raw.leaf == 2 ? e.rank : rank_b;
    }
    check(rank_a < rank_b, "draw " + std::to_string(t) + ": dominated sequence ranked above");

    const auto before = order_of(ranked);
    const double c = std::exp(std::uniform_real_distribution<double>(-6, 6)(rng));
    for (auto &s: seqs) {
      s.total_duration *= c;
    }
    check(order_of(rank::score(seqs, w)) == before,
          "draw " + std::to_string(t) + ": rescaling durations by " + fmt(c) + " reordered");
  }
}

// ---------------------------------------------------------------------------
// Tanimoto

void tanimoto() {
  std::mt19937_64 rng(31337);
  for (int t = 0; t < 10000; ++t) {
    const int n_bits = 64 << (rng() % 6);
    chem::Fingerprint a(n_bits);
    chem::Fingerprint b(n_bits);
    std::vector<std::uint64_t> wa(n_bits / 64);
    std::vector<std::uint64_t> wb(n_bits / 64);
    // Vary density so near-empty and near-full pairs both occur.
    const int sparsity = static_cast<int>(rng() % 4);
    for (int w = 0; w < n_bits / 64; ++w) {
      wa[w] = rng();
      wb[w] = rng();
      for (int k = 0; k < sparsity; ++k) {
        wa[w] &= rng();
        wb[w] &= rng();
      }
      for (int i = 0; i < 64; ++i) {
        if ((wa[w] >> i) & 1U) {
          a.set(64 * w + i);
        }
        if ((wb[w] >> i) & 1U) {
          b.set(64 * w + i);
        }
      }
    }
    long inter = 0;
    long uni = 0;
    for (std::size_t w = 0; w < wa.size(); ++w) {
      inter += std::popcount(wa[w] & wb[w]);
      uni += std::popcount(wa[w] | wb[w]);
    }
    const double oracle = uni == 0 ? 1.0 : static_cast<double>(inter) / static_cast<double>(uni);
    const double got = chem::tanimoto(a, b);
    check(got == oracle, "pair " + std::to_string(t) + ": " + fmt(got) + " vs " + fmt(oracle));
  }

  std::ifstream in(testing::fixture_path("smiles_spelling_pairs.tsv"));
  int pairs = 0;
  for (std::string line; std::getline(in, line);) {
    const auto cols = testing::split_tab(line);
    check(cols.size() == 2, "malformed fixture line " + line);
    const auto a = chem::parse_smiles(cols[0]);
    const auto b = chem::parse_smiles(cols[1]);
    check(chem::fingerprint(a) == chem::fingerprint(b), "fingerprints differ: " + line);
    check(chem::tanimoto(chem::fingerprint(a), chem::fingerprint(b)) == 1.0,
          "similarity below 1: " + line);
    ++pairs;
  }
  check(pairs == 50, "expected 50 spelling pairs, read " + std::to_string(pairs));
}

// ---------------------------------------------------------------------------
// t-SNE

double entropy_bits(const std::vector<double> &p) {
  double h = 0.0;
  for (double v: p) {
    if (v > 0.0) {
      h -= v * std::log2(v);
    }
  }
  return h;
}

double one_nn_recall(const std::vector<projection::Point2> &y, const std::vector<int> &labels) {
  int hits = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    double best = INFINITY;
    std::size_t arg = i;
    for (std::size_t j = 0; j < y.size(); ++j) {
      const double d = std::hypot(y[i].x - y[j].x, y[i].y - y[j].y);
      if (j != i && d < best) {
        best = d;
        arg = j;
      }
    }
    hits += labels[arg] == labels[i] ? 1 : 0;
  }
  return static_cast<double>(hits) / static_cast<double>(y.size());
}

void tsne() {
  std::mt19937_64 rng(404);
  for (int t = 0; t < 500; ++t) {
    std::vector<double> d(5 + rng() % 195);
    for (double &v: d) {
      v = std::uniform_real_distribution<double>(0.01, 20.0)(rng);
    }
    const double target = std::uniform_real_distribution<double>(1.5, 0.9 * d.size())(rng);
    const auto s = projection::search_sigma(d, target);
    const double h = entropy_bits(s.probabilities);
    check(s.converged, "row " + std::to_string(t) + ": sigma search did not converge");
    check(std::abs(h - std::log2(target)) <= 1e-4,
          "row " + std::to_string(t) + ": entropy " + fmt(h) + " vs " + fmt(std::log2(target)));
  }

  std::mt19937_64 g(2026);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::vector<std::vector<double>> pts;
  std::vector<int> labels;
  for (int c = 0; c < 3; ++c) {
    std::vector<double> center(256);
    for (double &v: center) {
      v = 10.0 * noise(g);
    }
    for (int i = 0; i < 30; ++i) {
      std::vector<double> v(256);
      for (int k = 0; k < 256; ++k) {
        v[k] = center[k] + noise(g);
      }
      pts.push_back(std::move(v));
      labels.push_back(c);
    }
  }
  const projection::TsneParams params;
  const auto a = projection::tsne(pts, params);
  const auto b = projection::tsne(pts, params);
  const double recall = one_nn_recall(a.points, labels);
  check(recall >= 0.9, "1-NN cluster recall " + fmt(recall));
  check(a.points.size() == b.points.size(), "runs differ in size");
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    check(std::bit_cast<std::uint64_t>(a.points[i].x) == std::bit_cast<std::uint64_t>(b.points[i].x)
              && std::bit_cast<std::uint64_t>(a.points[i].y)
                     == std::bit_cast<std::uint64_t>(b.points[i].y),
          "same seed gave different coordinates at point " + std::to_string(i));
  }
}

// ---------------------------------------------------------------------------
// Overlap removal

void overlap() {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 50.0);
  std::vector<projection::Point2> pts(100);
  for (auto &p: pts) {
    p = { u(rng), u(rng) };
  }
  const double d_min = projection::kDefaultMinDistance;
  const auto r = projection::remove_overlap(pts, d_min, 300, 99);
  check(r.points.size() == 100, "point count changed");
  check(r.converged && r.iterations <= 300, "not converged in 300 iterations");
  for (const auto &p: r.points) {
    check(std::isfinite(p.x) && std::isfinite(p.y), "non-finite coordinate");
  }
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    for (std::size_t j = i + 1; j < r.points.size(); ++j) {
      const double d = std::hypot(r.points[i].x - r.points[j].x, r.points[i].y - r.points[j].y);
      check(d >= d_min, "pair " + std::to_string(i) + "," + std::to_string(j) + " at " + fmt(d));
    }
  }
}

// ---------------------------------------------------------------------------
// Extraction retry loop

const char *kValid = R"({"reactants": "CCO", "products": "CC=O", "solvent": "DCM",
  "reagent": "PCC", "catalysts": null, "duration": "2 h", "instruments": "flask",
  "operation": "stirred", "yield": "82%"})";

void retry_loop() {
  const projection::TrigramEmbedder e;
  const std::string doc = "Ethanol was oxidised with PCC in DCM. The aldehyde was isolated.";
  {
    const extraction::MockChatProvider chat({ "Sure, here it is.", "{\"reactants\": ", kValid });
    const auto r = extraction::extract_reaction(doc, "CCO", "oxidation", chat, e);
    check(r.status == extraction::ExtractionStatus::kFound, "scripted run not found");
    check(r.attempts == 3, "attempts " + std::to_string(r.attempts));
    check(chat.calls() == 3, "provider calls " + std::to_string(chat.calls()));
  }
  for (int retries = 0; retries <= 5; ++retries) {
    const extraction::MockChatProvider chat(std::vector<std::string>(10, "not json"));
    extraction::ExtractionOptions opt;
    opt.max_retries = retries;
    const ErrorCode code =
        error_of([&] { extraction::extract_reaction(doc, "CCO", "oxidation", chat, e, opt); });
    check(code == ErrorCode::kMalformedAfterRetries,
          "always-malformed gave " + std::string(to_string(code)));
    check(chat.calls() == retries + 1, "max_retries " + std::to_string(retries) + ": "
                                           + std::to_string(chat.calls()) + " calls");
  }
  {
    const extraction::MockChatProvider chat({ "null" });
    const auto r = extraction::extract_reaction(doc, "CCO", "oxidation", chat, e);
    check(r.status == extraction::ExtractionStatus::kNotFound, "null answer was not not_found");
    check(chat.calls() == 1, "null answer retried");
  }
}

// ---------------------------------------------------------------------------
// Eval harness

void eval_harness() {
  const auto gold = eval::load_reactions_jsonl(testing::fixture_path("eval/gold.jsonl"), true);
  const auto pred = eval::load_reactions_jsonl(testing::fixture_path("eval/pred.jsonl"), false);
  const auto m = eval::evaluate(pred, gold).metrics;
  check(m.tp == 5 && m.fp == 1 && m.fn == 2, "counts " + std::to_string(m.tp) + "/"
                                                  + std::to_string(m.fp) + "/"
                                                  + std::to_string(m.fn));
  const std::vector<eval::ReportRow> rows { { "synthroute", m } };
  const std::string text = eval::format_report_text(rows);
  check(text.find("0.833") != std::string::npos && text.find("0.714") != std::string::npos
            && text.find("0.769") != std::string::npos,
        "report text: " + text);
  check(std::abs(m.precision - 0.833) <= 0.001 && std::abs(m.recall - 0.714) <= 0.001
            && std::abs(m.f1 - 0.769) <= 0.001,
        "metrics " + fmt(m.precision) + " " + fmt(m.recall) + " " + fmt(m.f1));

  // Randomized corpora drawn from the spelling pairs: golds use one
  // spelling, predictions the other or a wrong molecule or yield.
  std::vector<std::pair<std::string, std::string>> spellings;
  std::ifstream in(testing::fixture_path("smiles_spelling_pairs.tsv"));
  for (std::string line; std::getline(in, line);) {
    const auto cols = testing::split_tab(line);
    spellings.emplace_back(cols[0], cols[1]);
  }
  std::mt19937_64 rng(555);
  for (int t = 0; t < 200; ++t) {
    std::vector<eval::PaperReactions> g;
    std::vector<eval::PaperReactions> p;
    int n_gold = 0;
    int n_pred = 0;
    const int papers = 1 + static_cast<int>(rng() % 6);
    for (int k = 0; k < papers; ++k) {
      eval::PaperReactions gp { "P" + std::to_string(k), {} };
      eval::PaperReactions pp { gp.paper_id, {} };
      const int reactions = 1 + static_cast<int>(rng() % 4);
      for (int i = 0; i < reactions; ++i) {
        const auto &r = spellings[rng() % spellings.size()];
        const auto &q = spellings[rng() % spellings.size()];
        const double y = 0.05 + 0.01 * static_cast<double>(rng() % 90);
        gp.reactions.push_back({ { r.first }, { q.first }, y });
        switch (rng() % 4) {
        case 0:
          break;  // missed
        case 1:
          pp.reactions.push_back({ { r.second }, { q.second }, y });
          break;
        case 2:
          pp.reactions.push_back({ { r.second }, { q.second }, y + 0.2 });
          break;
        default:
          pp.reactions.push_back({ { r.second }, { q.second }, y });
          pp.reactions.push_back({ { q.first }, { r.first }, y });
          break;
        }
      }
      n_gold += static_cast<int>(gp.reactions.size());
      n_pred += static_cast<int>(pp.reactions.size());
      g.push_back(std::move(gp));
      if (!pp.reactions.empty()) {
        p.push_back(std::move(pp));
      }
    }
    const auto got = eval::evaluate(p, g).metrics;
    check(got.tp + got.fn == n_gold, "corpus " + std::to_string(t) + ": tp+fn != gold");
    check(got.tp + got.fp == n_pred, "corpus " + std::to_string(t) + ": tp+fp != predictions");
    std::shuffle(p.begin(), p.end(), rng);
    for (auto &pp: p) {
      std::shuffle(pp.reactions.begin(), pp.reactions.end(), rng);
    }
    const auto again = eval::evaluate(p, g).metrics;
    check(again.tp == got.tp && again.fp == got.fp,
          "corpus " + std::to_string(t) + ": order changed the counts");
  }
}

// ---------------------------------------------------------------------------
// Service

std::uint64_t checksum(const testing::ApiHarness &h, const std::string &ws) {
  return fnv1a(h.file_bytes(ws));
}

void service_suite() {
  testing::ApiHarness h;
  const std::string ws = h.ready_workspace();
  const std::string base = "/workspaces/" + ws;

  // Build some state: an extraction, nodes, difficulty, weights.
  const auto ex = h.call("POST", base + "/extractions", { { "paper_id", "P0001" } });
  check(ex.status == 202, "extraction status " + std::to_string(ex.status));
  check(h.wait_job(ex.body["job_id"])["state"] == "done", "extraction job did not finish");
  auto add = [&](json body) {
    const auto r = h.call("POST", base + "/tree/nodes", body);
    check(r.status == 201, "add node: " + r.body.dump());
    return r.body["node_id"].get<std::uint64_t>();
  };
  const auto reaction = [](const char *from, const char *to, double y, double hours) {
    return json { { "reactant", from }, { "product", to }, { "yield", y },
                  { "duration_hours", hours } };
  };
  const auto a = add({ { "parent", 0 }, { "paper_id", "P0001" },
                       { "difficulty", { { "material", 1 }, { "operation", 2 }, { "equipment", 3 } } } });
  const auto b = add({ { "parent", a }, { "reaction", reaction("CC=O", "CC(=O)O", 0.9, 5) } });
  std::vector<std::uint64_t> leaves { b };
  for (const char *p: { "CCOCC", "CCCl", "CCBr", "C=C", "CCOC(C)=O" }) {
    leaves.push_back(add({ { "parent", 0 }, { "reaction", reaction("CCO", p, 0.5, 1) } }));
  }
  check(h.call("PUT", base + "/weights",
               { { "steps", 0.1 }, { "duration", 0.3 }, { "yield", 0.6 } }).status == 200,
        "weights rejected");

  // save -> load -> save
  const std::string bytes = h.file_bytes(ws);
  check(service::serialize(service::deserialize(bytes)) == bytes, "round trip changed bytes");
  testing::TempDir other;
  service::write_file_atomic(other.path() / (ws + ".json"), bytes);
  const service::WorkspaceStore reopened(other.path());
  check(service::serialize(*reopened.get(ws)) == bytes, "reopened store changed bytes");

  // Comparison set holds five.
  for (std::size_t i = 0; i < 5; ++i) {
    const auto r = h.call("POST", base + "/comparison", { { "node_id", leaves[i] } });
    check(r.status == 200, "comparison add " + std::to_string(i + 1) + ": " + r.body.dump());
  }

  // Failed mutations leave the file untouched.
  struct Bad {
    std::string method;
    std::string path;
    json body;
    int status;
    std::string code;
  };
  const std::vector<Bad> bad {
    { "POST", base + "/comparison", { { "node_id", leaves[5] } }, 409, "ComparisonFull" },
    { "POST", base + "/tree/nodes", { { "parent", b }, { "reaction", reaction("CCO", "CC=O", 0.8, 1) } },
      409, "ReactantMismatch" },
    { "POST", base + "/tree/nodes", { { "parent", 999 }, { "reaction", reaction("CCO", "CC=O", 0.8, 1) } },
      404, "ParentNotFound" },
    { "POST", base + "/tree/nodes", { { "parent", 0 }, { "reaction", reaction("CCO", "CC=O", 0.0, 1) } },
      422, "InvalidRecord" },
    { "PUT", base + "/weights", { { "steps", 0.5 }, { "duration", 0.6 }, { "yield", 0.2 } }, 422,
      "InvalidWeights" },
    { "POST", base + "/tree/nodes/" + std::to_string(a) + "/difficulty",
      { { "material", 4 }, { "operation", 1 }, { "equipment", 1 } }, 422, "InvalidRecord" },
    { "DELETE", base + "/tree/nodes/0", nullptr, 422, "CannotRemoveRoot" },
    { "DELETE", base + "/tree/nodes/12345", nullptr, 404, "NodeNotFound" },
  };
  for (const Bad &c: bad) {
    const std::uint64_t before = checksum(h, ws);
    const auto r = h.call(c.method, c.path, c.body);
    check(r.status == c.status && r.body["code"] == c.code,
          c.method + " " + c.path + " gave " + std::to_string(r.status) + " " + r.body.dump());
    check(checksum(h, ws) == before, c.method + " " + c.path + " changed the file");
  }

  // Golden session.
  testing::ApiHarness fresh;
  const json transcript = testing::record_session(fresh);
  std::ifstream in(testing::golden_session_path());
  check(static_cast<bool>(in), "missing golden session file");
  const json golden = json::parse(in);
  check(golden.size() == transcript.size(), "golden session length differs");
  for (std::size_t i = 0; i < golden.size(); ++i) {
    std::string diff;
    check(testing::same_json(golden[i], transcript[i], "step" + std::to_string(i), diff),
          "golden mismatch " + diff);
  }
}

struct Criterion {
  const char *name;
  double limit_seconds;
  std::function<void()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria {
    { "cumulative_yield", 5, cumulative_yield },
    { "ranking", 10, ranking },
    { "tanimoto", 5, tanimoto },
    { "tsne", 60, tsne },
    { "overlap_removal", 2, overlap },
    { "extraction_retry", 1, retry_loop },
    { "eval_harness", 1, eval_harness },
    { "service", 30, service_suite },
  };
  int failed = 0;
  for (const Criterion &c: criteria) {
    std::string reason;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run();
    } catch (const Failure &f) {
      reason = f.reason;
    } catch (const std::exception &e) {
      reason = std::string("unexpected exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (reason.empty() && secs > c.limit_seconds) {
      reason = "over the " + fmt(c.limit_seconds) + " s limit";
    }
    if (reason.empty()) {
      std::printf("PASS %-18s %7.3f s (limit %g s)\n", c.name, secs, c.limit_seconds);
    } else {
      ++failed;
      std::printf("FAIL %-18s %7.3f s (limit %g s): %s\n", c.name, secs, c.limit_seconds,
                  reason.c_str());
    }
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
