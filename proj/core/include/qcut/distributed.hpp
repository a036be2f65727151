// Copyright 2026 The qcut authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCUT_DISTRIBUTED_HPP_
#define QCUT_DISTRIBUTED_HPP_

#include <cstdint>
#include <functional>
#include <string>

#include "qcut/executor.hpp"

namespace qcut {

struct MasterConfig {
  std::string host = "127.0.0.1";
  int port = 0;                 // 0 picks an ephemeral port
  int workers = 1;              // expected worker count; sets batch size
  std::uint64_t batch_size = 0; // 0 means ceil(jobs / workers)
  double timeout_secs = 300;    // outstanding batch heartbeat
  double connect_timeout_secs = 30;
  // Called once with the bound port, before any worker is awaited.
  std::function<void(int)> on_listening;
};

// Listens, ships the payload to connecting workers, hands out batches
// on pull, re-queues batches lost to disconnects or timeouts, and
// aggregates results in range order. Throws std::runtime_error when no
// worker ever connects or all workers are lost for too long.
RunReport run_distributed(const MasterConfig& cfg, const JobSpec& job);

struct WorkerConfig {
  std::string host = "127.0.0.1";
  int port = 0;
  int worker_id = 0;
  int slots = 1;  // independent connections sharing one payload cache

  // Fault-injection hooks for tests. die_after_batches >= 0 makes the
  // slot hard-close its socket when batch number die_after_batches+1
  // arrives; stall_secs delays each result past the master's timeout.
  int die_after_batches = -1;
  double stall_secs = 0;
};

// Connects, fetches the payload (once per process, content-addressed),
// then pulls and computes batches until drain. Throws on abort, hash
// mismatch, or a lost master connection.
void run_worker(const WorkerConfig& cfg);

}  // namespace qcut

#endif  // QCUT_DISTRIBUTED_HPP_
