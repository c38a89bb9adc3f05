//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "synthroute/service/store.h"

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>
#include <thread>

#include "synthroute/error.h"

namespace synthroute::service {
namespace {

std::string format_id(std::uint64_t seq) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "ws-%06llu", static_cast<unsigned long long>(seq));
  return buf;
}

}  // namespace

void write_file_atomic(const std::filesystem::path &path, const std::string &bytes) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(std::hash<std::thread::id>()(std::this_thread::get_id()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << bytes;
    out.flush();
    if (!out) {
      throw Error(ErrorCode::kIoError, "cannot write " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::kIoError, "cannot replace " + path.string());
  }
}

std::string read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

WorkspaceStore::WorkspaceStore(std::filesystem::path dir): dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) {
    throw Error(ErrorCode::kIoError, "cannot create " + dir_.string());
  }
  static const std::regex name(R"(ws-(\d{6,})\.json)");
  for (const auto &f: std::filesystem::directory_iterator(dir_)) {
    std::smatch m;
    const std::string file = f.path().filename().string();
    if (std::regex_match(file, m, name)) {
      next_seq_ = std::max<std::uint64_t>(next_seq_, std::stoull(m[1]) + 1);
    }
  }
}

std::filesystem::path WorkspaceStore::path_for(const std::string &id) const {
  return dir_ / (id + ".json");
}

void WorkspaceStore::write_file(const Workspace &ws) const {
  write_file_atomic(path_for(ws.id), serialize(ws));
}

std::shared_ptr<const Workspace>
WorkspaceStore::create(const std::string &starting_smiles,
                       std::vector<std::string> expected_reactions) {
  std::lock_guard lock(mu_);
  auto ws = std::make_shared<Workspace>(format_id(next_seq_), starting_smiles,
                                        std::move(expected_reactions));
  write_file(*ws);
  ++next_seq_;
  auto e = std::make_unique<Entry>();
  e->snapshot = ws;
  entries_[ws->id] = std::move(e);
  return ws;
}

WorkspaceStore::Entry &WorkspaceStore::entry(const std::string &id) const {
  std::lock_guard lock(mu_);
  auto it = entries_.find(id);
  if (it != entries_.end()) {
    return *it->second;
  }
  static const std::regex valid(R"(ws-\d{6,})");
  const auto path = path_for(id);
  if (!std::regex_match(id, valid) || !std::filesystem::exists(path)) {
    throw Error(ErrorCode::kWorkspaceNotFound, "no workspace " + id);
  }
  auto e = std::make_unique<Entry>();
  e->snapshot = std::make_shared<const Workspace>(deserialize(read_file(path)));
  return *(entries_[id] = std::move(e));
}

std::shared_ptr<const Workspace> WorkspaceStore::get(const std::string &id) const {
  Entry &e = entry(id);
  std::lock_guard lock(mu_);
  return e.snapshot;
}

std::shared_ptr<const Workspace>
WorkspaceStore::mutate(const std::string &id,
                       const std::function<void(Workspace &)> &fn) {
  Entry &e = entry(id);
  std::lock_guard writer(e.writer);
  std::shared_ptr<const Workspace> current;
  {
    std::lock_guard lock(mu_);
    current = e.snapshot;
  }
  auto next = std::make_shared<Workspace>(*current);
  fn(*next);
  write_file(*next);
  std::lock_guard lock(mu_);
  e.snapshot = next;
  return next;
}

}  // namespace synthroute::service
