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

#include "qcut/serialize.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "qcut/graph.hpp"

namespace qcut {

namespace {

constexpr char kB64[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

}  // namespace

std::string base64_encode(const std::string& bytes) {
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  std::size_t i = 0;
  for (; i + 3 <= bytes.size(); i += 3) {
    std::uint32_t v = (static_cast<unsigned char>(bytes[i]) << 16) |
                      (static_cast<unsigned char>(bytes[i + 1]) << 8) |
                      static_cast<unsigned char>(bytes[i + 2]);
    out.push_back(kB64[(v >> 18) & 63]);
    out.push_back(kB64[(v >> 12) & 63]);
    out.push_back(kB64[(v >> 6) & 63]);
    out.push_back(kB64[v & 63]);
  }
  std::size_t rest = bytes.size() - i;
  if (rest == 1) {
    std::uint32_t v = static_cast<unsigned char>(bytes[i]) << 16;
    out.push_back(kB64[(v >> 18) & 63]);
    out.push_back(kB64[(v >> 12) & 63]);
    out.push_back('=');
    out.push_back('=');
  } else if (rest == 2) {
    std::uint32_t v = (static_cast<unsigned char>(bytes[i]) << 16) |
                      (static_cast<unsigned char>(bytes[i + 1]) << 8);
    out.push_back(kB64[(v >> 18) & 63]);
    out.push_back(kB64[(v >> 12) & 63]);
    out.push_back(kB64[(v >> 6) & 63]);
    out.push_back('=');
  }
  return out;
}

std::string base64_decode(const std::string& text) {
  std::array<int, 256> rev;
  rev.fill(-1);
  for (int i = 0; i < 64; ++i) {
    rev[static_cast<unsigned char>(kB64[i])] = i;
  }
  if (text.size() % 4 != 0) {
    throw std::invalid_argument("base64 length not a multiple of 4");
  }
  std::string out;
  out.reserve(text.size() / 4 * 3);
  for (std::size_t i = 0; i < text.size(); i += 4) {
    int pad = 0;
    std::uint32_t v = 0;
    for (int k = 0; k < 4; ++k) {
      char c = text[i + k];
      if (c == '=') {
        if (i + 4 != text.size() || k < 2) {
          throw std::invalid_argument("stray base64 padding");
        }
        ++pad;
        v <<= 6;
        continue;
      }
      if (pad > 0 || rev[static_cast<unsigned char>(c)] < 0) {
        throw std::invalid_argument("bad base64 character");
      }
      v = (v << 6) | static_cast<std::uint32_t>(rev[static_cast<unsigned char>(c)]);
    }
    out.push_back(static_cast<char>((v >> 16) & 0xff));
    if (pad < 2) out.push_back(static_cast<char>((v >> 8) & 0xff));
    if (pad < 1) out.push_back(static_cast<char>(v & 0xff));
  }
  return out;
}

namespace {

nlohmann::json plan_to_json(const ContractionPlan& plan) {
  nlohmann::json steps = nlohmann::json::array();
  for (const PlanStep& s : plan.steps) {
    steps.push_back({{"a", s.a},
                     {"b", s.b},
                     {"out", s.out},
                     {"edges", s.edges},
                     {"legs_a", s.legs_a},
                     {"legs_b", s.legs_b},
                     {"rank_a", s.rank_a},
                     {"rank_b", s.rank_b},
                     {"result_rank", s.result_rank},
                     {"work_rank", s.work_rank}});
  }
  return {{"steps", std::move(steps)},
          {"scalars", plan.scalars},
          {"peak_rank", plan.peak_rank},
          {"cost_estimate", plan.cost_estimate}};
}

ContractionPlan plan_from_json(const nlohmann::json& j) {
  ContractionPlan plan;
  for (const auto& s : j.at("steps")) {
    PlanStep step;
    step.a = s.at("a").get<int>();
    step.b = s.at("b").get<int>();
    step.out = s.at("out").get<int>();
    step.edges = s.at("edges").get<std::vector<int>>();
    step.legs_a = s.at("legs_a").get<std::vector<int>>();
    step.legs_b = s.at("legs_b").get<std::vector<int>>();
    step.rank_a = s.at("rank_a").get<int>();
    step.rank_b = s.at("rank_b").get<int>();
    step.result_rank = s.at("result_rank").get<int>();
    step.work_rank = s.at("work_rank").get<int>();
    plan.steps.push_back(std::move(step));
  }
  plan.scalars = j.at("scalars").get<std::vector<int>>();
  plan.peak_rank = j.at("peak_rank").get<int>();
  plan.cost_estimate = j.at("cost_estimate").get<double>();
  return plan;
}

}  // namespace

std::string encode_payload(const Payload& p) {
  nlohmann::json j{{"v", 1},
                   {"network", nlohmann::json::parse(dump_network_json(p.tn))},
                   {"cut", p.cut},
                   {"plan", plan_to_json(p.plan)},
                   {"max_rank", p.max_rank}};
  return j.dump();
}

Payload decode_payload(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.at("v").get<int>() != 1) {
    throw std::invalid_argument("unsupported payload version");
  }
  Payload p;
  p.tn = load_network_json(j.at("network").dump());
  p.cut = j.at("cut").get<std::vector<int>>();
  p.plan = plan_from_json(j.at("plan"));
  p.max_rank = j.at("max_rank").get<int>();
  return p;
}

std::string payload_hash(const std::string& encoded) {
  return fnv1a64_hex(encoded);
}

}  // namespace qcut
