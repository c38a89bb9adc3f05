//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SYNTHROUTE_SERVICE_STORE_H_
#define SYNTHROUTE_SERVICE_STORE_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "synthroute/service/workspace.h"

namespace synthroute::service {

// One JSON file per workspace under a directory. Readers get immutable
// snapshots; writers to one workspace are serialized by its own lock and
// publish a new snapshot only after the file has been replaced.
class WorkspaceStore {
public:
  explicit WorkspaceStore(std::filesystem::path dir);

  // Allocates the next "ws-NNNNNN" id and persists the new workspace.
  // Throws the SMILES parse error for a bad starting molecule.
  std::shared_ptr<const Workspace>
  create(const std::string &starting_smiles,
         std::vector<std::string> expected_reactions);

  // Throws kWorkspaceNotFound.
  std::shared_ptr<const Workspace> get(const std::string &id) const;

  // Applies fn to a private copy, writes it (temp file then rename) and
  // publishes it. If fn or the write throws, the stored workspace and its
  // file are left untouched.
  std::shared_ptr<const Workspace>
  mutate(const std::string &id, const std::function<void(Workspace &)> &fn);

  std::filesystem::path path_for(const std::string &id) const;
  const std::filesystem::path &dir() const { return dir_; }

private:
  struct Entry {
    std::mutex writer;
    std::shared_ptr<const Workspace> snapshot;
  };

  Entry &entry(const std::string &id) const;
  void write_file(const Workspace &ws) const;

  std::filesystem::path dir_;
  mutable std::mutex mu_;
  mutable std::map<std::string, std::unique_ptr<Entry>> entries_;
  std::uint64_t next_seq_ = 1;
};

// Writes bytes to path atomically: a sibling temp file renamed over it.
void write_file_atomic(const std::filesystem::path &path, const std::string &bytes);

std::string read_file(const std::filesystem::path &path);

}  // namespace synthroute::service

#endif  // SYNTHROUTE_SERVICE_STORE_H_
