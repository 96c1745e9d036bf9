// Copyright 2026 The bimono Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "bimono/contour.hpp"

namespace bimono {

/// Resumable enumeration state: every item with value < level has been
/// emitted (emitted of them), and the frontier is Min { f >= level }.
struct Checkpoint {
  static constexpr int kFormatVersion = 1;

  std::string function_text;
  std::string domain_text;
  BigValue level;
  std::uint64_t emitted = 0;
  std::vector<ParamPair> frontier;

  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

/// Line-oriented text:
///
///   BIMONO-CKPT 1
///   f <canonical polynomial>
///   domain <canonical domain>
///   level <decimal>
///   emitted <decimal>
///   frontier <m>
///   <a> <b>            (m lines, a ascending)
std::string format_checkpoint(const Checkpoint& cp);

/// Throws CheckpointError: Format for anything that deviates from the
/// layout above, CorruptFrontier when the pairs are not ordered.
Checkpoint parse_checkpoint(std::string_view text);

/// Writes to a sibling temporary file and renames it over path.
void write_checkpoint_file(const std::filesystem::path& path, const Checkpoint& cp);
Checkpoint read_checkpoint_file(const std::filesystem::path& path);

namespace detail {
inline BigValue to_big(const Value128& v) {
  BigValue out = BigValue(static_cast<std::uint64_t>(static_cast<unsigned __int128>(v.raw()) >> 64)) << 64;
  out |= BigValue(static_cast<std::uint64_t>(static_cast<unsigned __int128>(v.raw())));
  if (v.raw() < 0) out -= BigValue(1) << 128;
  return out;
}
inline BigValue to_big(const BigValue& v) { return v; }

template <class V>
V from_big(const BigValue& v) {
  if constexpr (std::is_same_v<V, BigValue>) {
    return v;
  } else {
    return parse_value<V>(v.str());
  }
}
}  // namespace detail

/// Captures the enumerator at its last value boundary. If the stream is in
/// the middle of an equal-value block, the checkpoint rolls back to the
/// block start so that no block is split across a resume.
template <class V>
Checkpoint checkpoint_save(const BimonotoneEnumerator<V>& e, std::string function_text) {
  Checkpoint cp;
  cp.function_text = std::move(function_text);
  cp.domain_text = e.domain().name();
  if (e.at_value_boundary()) {
    cp.emitted = e.emitted();
    cp.frontier = e.frontier().pairs();
    if (e.last_value()) {
      cp.level = detail::to_big(*e.last_value()) + 1;
    } else if (auto v = e.peek_value()) {
      cp.level = detail::to_big(*v);
    } else {
      cp.level = 0;
    }
  } else {
    const V& level = *e.last_value();
    cp.emitted = e.block_start();
    cp.level = detail::to_big(level);
    cp.frontier = construct_minima(e.evaluator(), e.domain(), level);
  }
  return cp;
}

/// Rebuilds an enumerator from a checkpoint. The continuation is identical
/// to the uninterrupted stream from the saved boundary, ordinals included.
///
/// Throws CheckpointError: FunctionMismatch or DomainMismatch when the
/// canonical texts differ, CorruptFrontier when a frontier point is outside
/// the domain, Boundary when a frontier point lies below the level.
template <class V>
BimonotoneEnumerator<V> checkpoint_resume(const Checkpoint& cp, Evaluator<V> f, BimonotoneDomain d,
                                          std::string_view function_text, EnumeratorOptions<V> opts = {}) {
  if (cp.function_text != function_text) {
    throw CheckpointError(CheckpointError::Kind::FunctionMismatch,
                          "checkpoint is for f=" + cp.function_text + ", not f=" + std::string(function_text));
  }
  if (cp.domain_text != d.name()) {
    throw CheckpointError(CheckpointError::Kind::DomainMismatch,
                          "checkpoint is for domain " + cp.domain_text + ", not " + d.name());
  }
  V level = detail::from_big<V>(cp.level);
  for (auto [a, b] : cp.frontier) {
    if (!d.contains(a, b)) {
      throw CheckpointError(CheckpointError::Kind::CorruptFrontier,
                            "frontier point (" + std::to_string(a) + "," + std::to_string(b) + ") outside the domain");
    }
    if (f(a, b) < level) {
      throw CheckpointError(CheckpointError::Kind::Boundary,
                            "frontier point (" + std::to_string(a) + "," + std::to_string(b) + ") lies below the level");
    }
  }
  opts.ordinal_base = cp.emitted;
  if (!opts.bound_base) opts.bound_base = Count{cp.emitted};
  return BimonotoneEnumerator<V>(std::move(f), std::move(d), cp.frontier, std::move(opts));
}

}  // namespace bimono
