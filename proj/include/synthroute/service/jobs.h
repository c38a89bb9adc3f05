//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SYNTHROUTE_SERVICE_JOBS_H_
#define SYNTHROUTE_SERVICE_JOBS_H_

#include <chrono>
#include <condition_variable>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stop_token>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

namespace synthroute::service {

enum class JobKind { kSearch, kProjection, kExtraction, kFullText };
enum class JobState { kQueued, kRunning, kDone, kFailed, kCanceled };

std::string to_string(JobKind k);
std::string to_string(JobState s);
bool is_terminal(JobState s);

struct JobHandle {
  std::string id;
  JobKind kind = JobKind::kSearch;
  JobState state = JobState::kQueued;
  std::string workspace_id;
  nlohmann::json result;  // set when done
  std::string error_code;  // set when failed or canceled
  std::string error_message;
};

nlohmann::json to_json(const JobHandle &job);

// Background executor with sequential "job-NNNNNN" ids. A job body returns
// its JSON result or throws; synthroute::Error codes are kept, kCanceled
// maps to the canceled state. States only move forward.
class JobManager {
public:
  using Body = std::function<nlohmann::json(std::stop_token)>;

  explicit JobManager(int workers = 4);
  ~JobManager();

  JobManager(const JobManager &) = delete;
  JobManager &operator=(const JobManager &) = delete;

  std::string submit(JobKind kind, std::string workspace_id, Body body);

  // Throws kJobNotFound.
  JobHandle get(const std::string &id) const;

  // Queued jobs are canceled at once; running jobs see a stop request at
  // their next checkpoint. Terminal jobs are left as they are.
  JobHandle cancel(const std::string &id);

  // Blocks until the job is terminal or the timeout passes.
  JobHandle wait(const std::string &id,
                 std::chrono::milliseconds timeout = std::chrono::seconds(60)) const;

  // Blocks until no job is queued or running.
  void drain() const;

private:
  struct Job {
    JobHandle handle;
    Body body;
    std::stop_source stop;
  };

  void worker_loop(std::stop_token stop);
  Job &find(const std::string &id) const;

  mutable std::mutex mu_;
  mutable std::condition_variable cv_;
  std::map<std::string, std::unique_ptr<Job>> jobs_;
  std::deque<Job *> queue_;
  std::uint64_t next_seq_ = 1;
  int active_ = 0;
  std::vector<std::jthread> workers_;
};

}  // namespace synthroute::service

#endif  // SYNTHROUTE_SERVICE_JOBS_H_
