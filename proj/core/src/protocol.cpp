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

#include "qcut/protocol.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qcut {

std::string encode_msg(const WireMsg& msg) {
  nlohmann::json j;
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, MsgHello>) {
          j = {{"t", "hello"}, {"worker", m.worker}, {"slots", m.slots}};
        } else if constexpr (std::is_same_v<T, MsgNeedPayload>) {
          j = {{"t", "need_payload"}, {"hash", m.hash}};
        } else if constexpr (std::is_same_v<T, MsgPull>) {
          j = {{"t", "pull"}};
        } else if constexpr (std::is_same_v<T, MsgResult>) {
          j = {{"t", "result"}, {"lo", m.lo},   {"hi", m.hi},
               {"re", m.re},    {"im", m.im},   {"secs", m.secs}};
        } else if constexpr (std::is_same_v<T, MsgBye>) {
          j = {{"t", "bye"}};
        } else if constexpr (std::is_same_v<T, MsgPayload>) {
          j = {{"t", "payload"}, {"hash", m.hash}, {"body", m.body}};
        } else if constexpr (std::is_same_v<T, MsgBatch>) {
          j = {{"t", "batch"}, {"lo", m.lo}, {"hi", m.hi}};
        } else if constexpr (std::is_same_v<T, MsgDrain>) {
          j = {{"t", "drain"}};
        } else {
          static_assert(std::is_same_v<T, MsgAbort>);
          j = {{"t", "abort"}, {"why", m.why}};
        }
      },
      msg);
  return j.dump() + "\n";
}

namespace {

WireMsg decode_fields(const nlohmann::json& j) {
  const std::string t = j.at("t").get<std::string>();
  if (t == "hello") {
    return MsgHello{j.at("worker").get<int>(), j.at("slots").get<int>()};
  }
  if (t == "need_payload") {
    return MsgNeedPayload{j.at("hash").get<std::string>()};
  }
  if (t == "pull") return MsgPull{};
  if (t == "result") {
    return MsgResult{j.at("lo").get<std::uint64_t>(),
                     j.at("hi").get<std::uint64_t>(),
                     j.at("re").get<double>(), j.at("im").get<double>(),
                     j.at("secs").get<double>()};
  }
  if (t == "bye") return MsgBye{};
  if (t == "payload") {
    return MsgPayload{j.at("hash").get<std::string>(),
                      j.at("body").get<std::string>()};
  }
  if (t == "batch") {
    return MsgBatch{j.at("lo").get<std::uint64_t>(),
                    j.at("hi").get<std::uint64_t>()};
  }
  if (t == "drain") return MsgDrain{};
  if (t == "abort") return MsgAbort{j.at("why").get<std::string>()};
  throw std::invalid_argument("unknown wire message tag: " + t);
}

}  // namespace

WireMsg decode_msg(const std::string& line) {
  try {
    return decode_fields(nlohmann::json::parse(line));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad wire message: ") + e.what());
  }
}

std::pair<std::string, int> parse_hostport(const std::string& text) {
  auto pos = text.rfind(':');
  if (pos == std::string::npos || pos == 0 || pos + 1 == text.size()) {
    throw std::invalid_argument("expected host:port, got '" + text + "'");
  }
  int port = 0;
  try {
    port = std::stoi(text.substr(pos + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad port in '" + text + "'");
  }
  if (port < 0 || port > 65535) {
    throw std::invalid_argument("port out of range in '" + text + "'");
  }
  return {text.substr(0, pos), port};
}

TcpStream::TcpStream(TcpStream&& other) noexcept
    : fd_(other.fd_), buffer_(std::move(other.buffer_)) {
  other.fd_ = -1;
}

TcpStream& TcpStream::operator=(TcpStream&& other) noexcept {
  if (this != &other) {
    close();
    fd_ = other.fd_;
    buffer_ = std::move(other.buffer_);
    other.fd_ = -1;
  }
  return *this;
}

TcpStream::~TcpStream() { close(); }

void TcpStream::close() {
  if (fd_ >= 0) {
    ::close(fd_);
    fd_ = -1;
  }
  buffer_.clear();
}

bool TcpStream::send_all(const std::string& data) {
  if (fd_ < 0) return false;
  std::size_t sent = 0;
  while (sent < data.size()) {
    ssize_t n = ::send(fd_, data.data() + sent, data.size() - sent,
                       MSG_NOSIGNAL);
    if (n < 0) {
      if (errno == EINTR) continue;
      return false;
    }
    sent += static_cast<std::size_t>(n);
  }
  return true;
}

RecvStatus TcpStream::recv_line(std::string& out, int timeout_ms) {
  for (;;) {
    auto nl = buffer_.find('\n');
    if (nl != std::string::npos) {
      out = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      return RecvStatus::kLine;
    }
    if (fd_ < 0) return RecvStatus::kEof;

    pollfd pfd{fd_, POLLIN, 0};
    int pr = ::poll(&pfd, 1, timeout_ms);
    if (pr < 0) {
      if (errno == EINTR) continue;
      return RecvStatus::kEof;
    }
    if (pr == 0) return RecvStatus::kTimeout;

    char chunk[4096];
    ssize_t n = ::recv(fd_, chunk, sizeof(chunk), 0);
    if (n < 0) {
      if (errno == EINTR) continue;
      return RecvStatus::kEof;
    }
    if (n == 0) return RecvStatus::kEof;
    buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

bool TcpStream::fill_from_socket() {
  if (fd_ < 0) return false;
  char chunk[4096];
  for (;;) {
    ssize_t n = ::recv(fd_, chunk, sizeof(chunk), 0);
    if (n < 0) {
      if (errno == EINTR) continue;
      return false;
    }
    if (n == 0) return false;
    buffer_.append(chunk, static_cast<std::size_t>(n));
    return true;
  }
}

bool TcpStream::take_buffered_line(std::string& out) {
  auto nl = buffer_.find('\n');
  if (nl == std::string::npos) return false;
  out = buffer_.substr(0, nl);
  buffer_.erase(0, nl + 1);
  return true;
}

TcpListener::TcpListener(TcpListener&& other) noexcept
    : fd_(other.fd_), port_(other.port_) {
  other.fd_ = -1;
}

TcpListener& TcpListener::operator=(TcpListener&& other) noexcept {
  if (this != &other) {
    close();
    fd_ = other.fd_;
    port_ = other.port_;
    other.fd_ = -1;
  }
  return *this;
}

TcpListener::~TcpListener() { close(); }

void TcpListener::close() {
  if (fd_ >= 0) {
    ::close(fd_);
    fd_ = -1;
  }
}

TcpListener TcpListener::bind_listen(const std::string& host, int port) {
  int fd = ::socket(AF_INET, SOCK_STREAM, 0);
  if (fd < 0) throw std::runtime_error("socket: " + std::string(strerror(errno)));
  int one = 1;
  ::setsockopt(fd, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));

  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(static_cast<std::uint16_t>(port));
  if (::inet_pton(AF_INET, host.c_str(), &addr.sin_addr) != 1) {
    ::close(fd);
    throw std::runtime_error("bad listen address: " + host);
  }
  if (::bind(fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) < 0) {
    int err = errno;
    ::close(fd);
    throw std::runtime_error("bind " + host + ":" + std::to_string(port) +
                             ": " + strerror(err));
  }
  if (::listen(fd, 64) < 0) {
    int err = errno;
    ::close(fd);
    throw std::runtime_error("listen: " + std::string(strerror(err)));
  }
  sockaddr_in bound{};
  socklen_t len = sizeof(bound);
  if (::getsockname(fd, reinterpret_cast<sockaddr*>(&bound), &len) < 0) {
    int err = errno;
    ::close(fd);
    throw std::runtime_error("getsockname: " + std::string(strerror(err)));
  }
  TcpListener l;
  l.fd_ = fd;
  l.port_ = ntohs(bound.sin_port);
  return l;
}

TcpStream TcpListener::accept_conn() {
  for (;;) {
    int cfd = ::accept(fd_, nullptr, nullptr);
    if (cfd < 0) {
      if (errno == EINTR) continue;
      return TcpStream{};
    }
    int one = 1;
    ::setsockopt(cfd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
    return TcpStream{cfd};
  }
}

TcpStream tcp_connect(const std::string& host, int port) {
  addrinfo hints{};
  hints.ai_family = AF_INET;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* res = nullptr;
  int rc = ::getaddrinfo(host.c_str(), std::to_string(port).c_str(), &hints,
                         &res);
  if (rc != 0) {
    throw std::runtime_error("resolve " + host + ": " + gai_strerror(rc));
  }
  int fd = -1;
  int err = 0;
  for (addrinfo* ai = res; ai; ai = ai->ai_next) {
    fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
    if (fd < 0) {
      err = errno;
      continue;
    }
    if (::connect(fd, ai->ai_addr, ai->ai_addrlen) == 0) break;
    err = errno;
    ::close(fd);
    fd = -1;
  }
  ::freeaddrinfo(res);
  if (fd < 0) {
    throw std::runtime_error("connect " + host + ":" + std::to_string(port) +
                             ": " + strerror(err));
  }
  int one = 1;
  ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
  return TcpStream{fd};
}

}  // namespace qcut
