//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "synthroute/service/jobs.h"

#include <cstdio>

#include "synthroute/error.h"

namespace synthroute::service {

std::string to_string(JobKind k) {
  switch (k) {
  case JobKind::kSearch:
    return "search";
  case JobKind::kProjection:
    return "projection";
  case JobKind::kExtraction:
    return "extraction";
  case JobKind::kFullText:
    return "fulltext";
  }
  return "search";
}

std::string to_string(JobState s) {
  switch (s) {
  case JobState::kQueued:
    return "queued";
  case JobState::kRunning:
    return "running";
  case JobState::kDone:
    return "done";
  case JobState::kFailed:
    return "failed";
  case JobState::kCanceled:
    return "canceled";
  }
  return "queued";
}

bool is_terminal(JobState s) {
  return s == JobState::kDone || s == JobState::kFailed
         || s == JobState::kCanceled;
}

nlohmann::json to_json(const JobHandle &job) {
  nlohmann::json j = { { "id", job.id },
                       { "kind", to_string(job.kind) },
                       { "state", to_string(job.state) },
                       { "workspace_id", job.workspace_id },
                       { "result", job.result },
                       { "error", nullptr } };
  if (!job.error_code.empty()) {
    j["error"] = { { "code", job.error_code },
                   { "message", job.error_message } };
  }
  return j;
}

JobManager::JobManager(int workers) {
  const int n = std::max(1, workers);
  for (int i = 0; i < n; ++i) {
    workers_.emplace_back([this](std::stop_token st) { worker_loop(st); });
  }
}

JobManager::~JobManager() {
  {
    std::lock_guard lock(mu_);
    for (auto &[id, job]: jobs_) {
      job->stop.request_stop();
    }
    // Under the lock so no worker can miss the wakeup.
    for (auto &w: workers_) {
      w.request_stop();
    }
  }
  cv_.notify_all();
  workers_.clear();
}

std::string JobManager::submit(JobKind kind, std::string workspace_id, Body body) {
  std::lock_guard lock(mu_);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "job-%06llu",
                static_cast<unsigned long long>(next_seq_++));
  auto job = std::make_unique<Job>();
  job->handle.id = buf;
  job->handle.kind = kind;
  job->handle.workspace_id = std::move(workspace_id);
  job->body = std::move(body);
  queue_.push_back(job.get());
  jobs_[buf] = std::move(job);
  cv_.notify_all();
  return buf;
}

JobManager::Job &JobManager::find(const std::string &id) const {
  auto it = jobs_.find(id);
  if (it == jobs_.end()) {
    throw Error(ErrorCode::kJobNotFound, "no job " + id);
  }
  return *it->second;
}

JobHandle JobManager::get(const std::string &id) const {
  std::lock_guard lock(mu_);
  return find(id).handle;
}

JobHandle JobManager::cancel(const std::string &id) {
  std::lock_guard lock(mu_);
  Job &job = find(id);
  if (job.handle.state == JobState::kQueued) {
    job.handle.state = JobState::kCanceled;
    job.handle.error_code = std::string(to_string(ErrorCode::kCanceled));
    job.handle.error_message = "canceled before start";
    std::erase(queue_, &job);
    cv_.notify_all();
  } else if (job.handle.state == JobState::kRunning) {
    job.stop.request_stop();
  }
  return job.handle;
}

JobHandle JobManager::wait(const std::string &id,
                           std::chrono::milliseconds timeout) const {
  std::unique_lock lock(mu_);
  Job &job = find(id);
  cv_.wait_for(lock, timeout, [&job] { return is_terminal(job.handle.state); });
  return job.handle;
}

void JobManager::drain() const {
  std::unique_lock lock(mu_);
  cv_.wait(lock, [this] { return queue_.empty() && active_ == 0; });
}

void JobManager::worker_loop(std::stop_token stop) {
  for (;;) {
    Job *job = nullptr;
    {
      std::unique_lock lock(mu_);
      cv_.wait(lock, [&] { return stop.stop_requested() || !queue_.empty(); });
      if (stop.stop_requested()) {
        return;
      }
      job = queue_.front();
      queue_.pop_front();
      job->handle.state = JobState::kRunning;
      ++active_;
    }

    nlohmann::json result;
    JobState state = JobState::kDone;
    std::string code;
    std::string message;
    try {
      result = job->body(job->stop.get_token());
    } catch (const Error &e) {
      state = e.code() == ErrorCode::kCanceled ? JobState::kCanceled
                                               : JobState::kFailed;
      code = std::string(e.code_name());
      message = e.what();
    } catch (const std::exception &e) {
      state = JobState::kFailed;
      code = "Internal";
      message = e.what();
    }

    {
      std::lock_guard lock(mu_);
      job->handle.state = state;
      job->handle.result = std::move(result);
      job->handle.error_code = std::move(code);
      job->handle.error_message = std::move(message);
      job->body = nullptr;
      --active_;
    }
    cv_.notify_all();
  }
}

}  // namespace synthroute::service
