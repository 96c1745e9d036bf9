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

#include <functional>

#include "bimono/axis.hpp"
#include "bimono/value.hpp"

namespace bimono {

/// A pure function f(a, b). Bimonotonicity and properness are caller
/// contracts; evaluators report capacity overflow by throwing ValueOverflow.
template <class V>
using Evaluator = std::function<V(Param, Param)>;

template <class V>
V eval_checked(const Evaluator<V>& f, Param a, Param b) {
  return f(a, b);
}

/// x^e with checked multiplication.
template <class V>
V checked_pow(V x, unsigned e) {
  V result(1);
  while (e != 0) {
    if (e & 1u) result = result * x;
    e >>= 1;
    if (e != 0) x = x * x;
  }
  return result;
}

/// The built-in max(a, b) test function.
template <class V>
Evaluator<V> max_evaluator() {
  return [](Param a, Param b) { return V(a < b ? b : a); };
}

}  // namespace bimono
