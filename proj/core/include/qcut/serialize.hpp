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

#ifndef QCUT_SERIALIZE_HPP_
#define QCUT_SERIALIZE_HPP_

#include <string>

#include "qcut/contraction.hpp"
#include "qcut/cutting.hpp"
#include "qcut/tensor_network.hpp"

namespace qcut {

std::string base64_encode(const std::string& bytes);
std::string base64_decode(const std::string& text);

// Everything a worker needs to compute partial sums: the uncut
// network, the cut set, the shared plan for the cut topology, and the
// rank limit.
struct Payload {
  TensorNetwork tn;
  CutSet cut;
  ContractionPlan plan;
  int max_rank = kDefaultMaxRank;
};

std::string encode_payload(const Payload& p);
Payload decode_payload(const std::string& text);

// Content address of an encoded payload (FNV-1a, hex).
std::string payload_hash(const std::string& encoded);

}  // namespace qcut

#endif  // QCUT_SERIALIZE_HPP_
