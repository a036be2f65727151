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

#ifndef QCUT_PROTOCOL_HPP_
#define QCUT_PROTOCOL_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <variant>

namespace qcut {

// Newline-delimited JSON messages over TCP.
//
// Worker to master:
//   {"t":"hello","worker":id,"slots":k}
//   {"t":"need_payload","hash":h}
//   {"t":"pull"}
//   {"t":"result","lo":int,"hi":int,"re":float,"im":float,"secs":float}
//   {"t":"bye"}
// Master to worker:
//   {"t":"payload","hash":h,"body":base64}   body "" announces the hash
//   {"t":"batch","lo":int,"hi":int}
//   {"t":"drain"}
//   {"t":"abort","why":string}

struct MsgHello {
  int worker = 0;
  int slots = 1;
};
struct MsgNeedPayload {
  std::string hash;
};
struct MsgPull {};
struct MsgResult {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  double re = 0;
  double im = 0;
  double secs = 0;
};
struct MsgBye {};
struct MsgPayload {
  std::string hash;
  std::string body;  // base64; empty for the announcement
};
struct MsgBatch {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};
struct MsgDrain {};
struct MsgAbort {
  std::string why;
};

using WireMsg = std::variant<MsgHello, MsgNeedPayload, MsgPull, MsgResult,
                             MsgBye, MsgPayload, MsgBatch, MsgDrain, MsgAbort>;

// One JSON object terminated by '\n'.
std::string encode_msg(const WireMsg& msg);
// Throws std::invalid_argument on malformed lines or unknown tags.
WireMsg decode_msg(const std::string& line);

std::pair<std::string, int> parse_hostport(const std::string& text);

enum class RecvStatus { kLine, kEof, kTimeout };

// Blocking line-oriented TCP connection.
class TcpStream {
 public:
  TcpStream() = default;
  explicit TcpStream(int fd) : fd_(fd) {}
  TcpStream(TcpStream&& other) noexcept;
  TcpStream& operator=(TcpStream&& other) noexcept;
  TcpStream(const TcpStream&) = delete;
  TcpStream& operator=(const TcpStream&) = delete;
  ~TcpStream();

  bool valid() const { return fd_ >= 0; }
  int fd() const { return fd_; }

  // Sends the whole string; returns false when the peer is gone.
  bool send_all(const std::string& data);
  bool send_msg(const WireMsg& msg) { return send_all(encode_msg(msg)); }

  // Reads up to the next '\n' (stripped). timeout_ms < 0 blocks forever.
  RecvStatus recv_line(std::string& out, int timeout_ms = -1);

  // For multiplexed loops: one recv() into the buffer, to be called
  // after poll reports readability. False on EOF or error.
  bool fill_from_socket();
  // Next complete buffered line, if any, without touching the socket.
  bool take_buffered_line(std::string& out);

  void close();

 private:
  int fd_ = -1;
  std::string buffer_;
};

class TcpListener {
 public:
  // port 0 picks an ephemeral port; bound_port() reports it.
  static TcpListener bind_listen(const std::string& host, int port);

  TcpListener() = default;
  TcpListener(TcpListener&& other) noexcept;
  TcpListener& operator=(TcpListener&& other) noexcept;
  TcpListener(const TcpListener&) = delete;
  TcpListener& operator=(const TcpListener&) = delete;
  ~TcpListener();

  int fd() const { return fd_; }
  int bound_port() const { return port_; }
  // nullopt when no pending connection (after a poll timeout).
  TcpStream accept_conn();
  void close();

 private:
  int fd_ = -1;
  int port_ = 0;
};

TcpStream tcp_connect(const std::string& host, int port);

}  // namespace qcut

#endif  // QCUT_PROTOCOL_HPP_
