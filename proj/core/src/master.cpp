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

#include <poll.h>

#include <algorithm>
#include <chrono>
#include <deque>
#include <iostream>
#include <list>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qcut/distributed.hpp"
#include "qcut/protocol.hpp"
#include "qcut/serialize.hpp"

namespace qcut {

namespace {

using Clock = std::chrono::steady_clock;

double secs_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Conn {
  TcpStream stream;
  int worker_id = -1;
  bool helloed = false;
  long long outstanding = -1;  // batch id, -1 when idle
  Clock::time_point dispatch_time;
  bool waiting_pull = false;
};

}  // namespace

RunReport run_distributed(const MasterConfig& cfg, const JobSpec& job) {
  const std::uint64_t total = job.jobs();
  const std::uint64_t batch_size =
      cfg.batch_size ? cfg.batch_size : round_count(total, cfg.workers);
  const std::uint64_t n_batches = (total + batch_size - 1) / batch_size;

  const std::string payload = encode_payload(
      Payload{job.tn, job.cut, job.plan, job.max_rank});
  const std::string hash = payload_hash(payload);

  TcpListener listener = TcpListener::bind_listen(cfg.host, cfg.port);
  if (cfg.on_listening) cfg.on_listening(listener.bound_port());

  std::deque<std::uint64_t> pending;
  for (std::uint64_t b = 0; b < n_batches; ++b) pending.push_back(b);
  std::vector<std::optional<WorkerResult>> done(n_batches);
  std::uint64_t n_done = 0;
  std::uint64_t recomputed = 0;
  std::map<int, WorkerTiming> timings;

  std::list<Conn> conns;
  const auto start = Clock::now();
  auto zero_conns_since = start;
  bool ever_connected = false;

  auto batch_range = [&](std::uint64_t b) {
    std::uint64_t lo = b * batch_size;
    return std::pair<std::uint64_t, std::uint64_t>(
        lo, std::min(total, lo + batch_size));
  };

  auto dispatch = [&](Conn& c) {
    if (!pending.empty()) {
      std::uint64_t b = pending.front();
      pending.pop_front();
      auto [lo, hi] = batch_range(b);
      c.outstanding = static_cast<long long>(b);
      c.dispatch_time = Clock::now();
      c.waiting_pull = false;
      if (!c.stream.send_msg(MsgBatch{lo, hi})) {
        // peer vanished between pull and batch; requeue right away
        pending.push_front(b);
        c.outstanding = -1;
        c.stream.close();
      }
    } else if (n_done == n_batches) {
      c.waiting_pull = false;
      c.stream.send_msg(MsgDrain{});
    } else {
      c.waiting_pull = true;  // answered once a batch frees up
    }
  };

  auto drop_conn = [&](Conn& c, const char* why) {
    if (c.outstanding >= 0) {
      std::uint64_t b = static_cast<std::uint64_t>(c.outstanding);
      if (!done[b]) {
        pending.push_back(b);
        ++recomputed;
        auto [lo, hi] = batch_range(b);
        std::cerr << "qcut master: requeue batch [" << lo << "," << hi
                  << ") from worker " << c.worker_id << " (" << why << ")\n";
      }
      c.outstanding = -1;
    }
    c.stream.close();
  };

  auto serve_waiting = [&]() {
    for (Conn& c : conns) {
      if (c.stream.valid() && c.waiting_pull &&
          (!pending.empty() || n_done == n_batches)) {
        dispatch(c);
      }
    }
  };

  auto handle_msg = [&](Conn& c, const WireMsg& msg) {
    if (const auto* hello = std::get_if<MsgHello>(&msg)) {
      c.worker_id = hello->worker;
      c.helloed = true;
      c.stream.send_msg(MsgPayload{hash, ""});
      return;
    }
    if (const auto* need = std::get_if<MsgNeedPayload>(&msg)) {
      if (need->hash != hash) {
        c.stream.send_msg(MsgAbort{"payload hash mismatch: master has " +
                                   hash + ", worker asked for " + need->hash});
        drop_conn(c, "hash mismatch");
        return;
      }
      c.stream.send_msg(MsgPayload{hash, base64_encode(payload)});
      return;
    }
    if (std::get_if<MsgPull>(&msg)) {
      dispatch(c);
      return;
    }
    if (const auto* res = std::get_if<MsgResult>(&msg)) {
      if (res->hi <= res->lo || res->lo % batch_size != 0 ||
          res->hi > total) {
        c.stream.send_msg(MsgAbort{"result range off the batch grid"});
        drop_conn(c, "bad result range");
        return;
      }
      std::uint64_t b = res->lo / batch_size;
      auto [lo, hi] = batch_range(b);
      if (res->lo != lo || res->hi != hi) {
        c.stream.send_msg(MsgAbort{"result range off the batch grid"});
        drop_conn(c, "bad result range");
        return;
      }
      if (c.outstanding == static_cast<long long>(b)) c.outstanding = -1;
      if (done[b]) {
        std::cerr << "qcut master: duplicate result for [" << lo << "," << hi
                  << ") from worker " << c.worker_id << ", keeping first\n";
        return;
      }
      done[b] = WorkerResult{res->lo, res->hi, cx{res->re, res->im},
                             res->secs};
      ++n_done;
      auto& t = timings[c.worker_id];
      t.worker = c.worker_id;
      t.secs += res->secs;
      ++t.batches;
      if (n_done == n_batches) serve_waiting();  // drain the idle ones
      return;
    }
    if (std::get_if<MsgBye>(&msg)) {
      drop_conn(c, "bye");
      return;
    }
    c.stream.send_msg(MsgAbort{"unexpected message from worker"});
    drop_conn(c, "protocol violation");
  };

  while (n_done < n_batches) {
    std::vector<pollfd> pfds;
    pfds.push_back(pollfd{listener.fd(), POLLIN, 0});
    std::vector<Conn*> by_slot;
    for (Conn& c : conns) {
      if (!c.stream.valid()) continue;
      pfds.push_back(pollfd{c.stream.fd(), POLLIN, 0});
      by_slot.push_back(&c);
    }

    int pr = ::poll(pfds.data(), pfds.size(), 100);
    if (pr < 0 && errno != EINTR) {
      throw std::runtime_error("master poll failed");
    }

    if (pfds[0].revents & POLLIN) {
      TcpStream s = listener.accept_conn();
      if (s.valid()) {
        ever_connected = true;
        Conn c;
        c.stream = std::move(s);
        conns.push_back(std::move(c));
      }
    }
    for (std::size_t i = 0; i < by_slot.size(); ++i) {
      Conn& c = *by_slot[i];
      if (!(pfds[i + 1].revents & (POLLIN | POLLHUP | POLLERR))) continue;
      if (!c.stream.fill_from_socket()) {
        drop_conn(c, "disconnect");
        continue;
      }
      std::string line;
      while (c.stream.valid() && c.stream.take_buffered_line(line)) {
        try {
          handle_msg(c, decode_msg(line));
        } catch (const std::invalid_argument& e) {
          c.stream.send_msg(MsgAbort{e.what()});
          drop_conn(c, "undecodable message");
        }
      }
    }

    for (Conn& c : conns) {
      if (c.stream.valid() && c.outstanding >= 0 &&
          secs_since(c.dispatch_time) > cfg.timeout_secs) {
        drop_conn(c, "batch timeout");
      }
    }
    conns.remove_if([](const Conn& c) { return !c.stream.valid(); });
    serve_waiting();

    if (conns.empty()) {
      if (!ever_connected && secs_since(start) > cfg.connect_timeout_secs) {
        throw std::runtime_error(
            "no workers connected within " +
            std::to_string(cfg.connect_timeout_secs) + "s");
      }
      if (ever_connected &&
          secs_since(zero_conns_since) > cfg.connect_timeout_secs) {
        throw std::runtime_error("all workers lost with work remaining");
      }
    } else {
      zero_conns_since = Clock::now();
    }
  }

  for (Conn& c : conns) {
    if (c.stream.valid()) c.stream.send_msg(MsgDrain{});
  }

  std::vector<WorkerResult> partials;
  partials.reserve(n_batches);
  for (const auto& r : done) partials.push_back(*r);

  RunReport report;
  report.amplitude = aggregate(std::move(partials), total);
  report.jobs = total;
  report.workers = cfg.workers;
  report.rounds = round_count(total, cfg.workers);
  report.batches = n_batches;
  report.recomputed_batches = recomputed;
  for (const auto& [id, t] : timings) report.timings.push_back(t);
  report.wall_secs = secs_since(start);
  return report;
}

}  // namespace qcut
