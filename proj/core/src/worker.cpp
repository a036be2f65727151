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

#include <chrono>
#include <exception>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <variant>
#include <vector>

#include "qcut/distributed.hpp"
#include "qcut/protocol.hpp"
#include "qcut/serialize.hpp"

namespace qcut {

namespace {

std::mutex g_payload_mu;
std::unordered_map<std::string, std::shared_ptr<const Payload>> g_payloads;

std::shared_ptr<const Payload> cached_payload(const std::string& hash) {
  std::lock_guard<std::mutex> lk(g_payload_mu);
  auto it = g_payloads.find(hash);
  return it == g_payloads.end() ? nullptr : it->second;
}

void cache_payload(const std::string& hash,
                   std::shared_ptr<const Payload> p) {
  std::lock_guard<std::mutex> lk(g_payload_mu);
  g_payloads.emplace(hash, std::move(p));
}

void slot_loop(const WorkerConfig& cfg) {
  TcpStream s = tcp_connect(cfg.host, cfg.port);
  if (!s.send_msg(MsgHello{cfg.worker_id, cfg.slots})) {
    throw std::runtime_error("master closed connection during hello");
  }

  std::shared_ptr<const Payload> payload;
  int batches_done = 0;
  std::string line;
  for (;;) {
    RecvStatus st = s.recv_line(line, -1);
    if (st != RecvStatus::kLine) {
      throw std::runtime_error("lost connection to master");
    }
    WireMsg msg = decode_msg(line);

    if (const auto* pl = std::get_if<MsgPayload>(&msg)) {
      if (pl->body.empty()) {
        payload = cached_payload(pl->hash);
        if (!payload) {
          s.send_msg(MsgNeedPayload{pl->hash});
          continue;
        }
      } else {
        std::string body = base64_decode(pl->body);
        if (payload_hash(body) != pl->hash) {
          s.send_msg(MsgBye{});
          throw std::runtime_error("payload hash mismatch: announced " +
                                   pl->hash + ", body hashes to " +
                                   payload_hash(body));
        }
        auto p = std::make_shared<const Payload>(decode_payload(body));
        cache_payload(pl->hash, p);
        payload = std::move(p);
      }
      s.send_msg(MsgPull{});
      continue;
    }

    if (const auto* batch = std::get_if<MsgBatch>(&msg)) {
      if (!payload) {
        throw std::runtime_error("batch received before payload");
      }
      if (cfg.die_after_batches >= 0 &&
          batches_done >= cfg.die_after_batches) {
        s.close();  // simulated crash: vanish without a result
        return;
      }
      auto t0 = std::chrono::steady_clock::now();
      JobSpec job{payload->tn, payload->cut, payload->plan,
                  payload->max_rank};
      cx part = sum_range(job, batch->lo, batch->hi);
      double secs = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
      if (cfg.stall_secs > 0) {
        std::this_thread::sleep_for(
            std::chrono::duration<double>(cfg.stall_secs));
      }
      ++batches_done;
      if (!s.send_msg(MsgResult{batch->lo, batch->hi, part.real(),
                                part.imag(), secs}) ||
          !s.send_msg(MsgPull{})) {
        throw std::runtime_error("lost connection to master mid-result");
      }
      continue;
    }

    if (std::get_if<MsgDrain>(&msg)) {
      s.send_msg(MsgBye{});
      return;
    }
    if (const auto* abort = std::get_if<MsgAbort>(&msg)) {
      throw std::runtime_error("aborted by master: " + abort->why);
    }
    throw std::runtime_error("unexpected message from master");
  }
}

}  // namespace

void run_worker(const WorkerConfig& cfg) {
  if (cfg.slots < 1) throw std::invalid_argument("slots must be >= 1");
  if (cfg.slots == 1) {
    slot_loop(cfg);
    return;
  }
  std::vector<std::thread> threads;
  std::exception_ptr first_error;
  std::mutex error_mu;
  threads.reserve(static_cast<std::size_t>(cfg.slots));
  for (int i = 0; i < cfg.slots; ++i) {
    threads.emplace_back([&cfg, &first_error, &error_mu]() {
      try {
        slot_loop(cfg);
      } catch (...) {
        std::lock_guard<std::mutex> lk(error_mu);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace qcut
