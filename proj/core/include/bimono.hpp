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

#include "bimono/axis.hpp"
#include "bimono/bench.hpp"
#include "bimono/checkpoint.hpp"
#include "bimono/contour.hpp"
#include "bimono/domain.hpp"
#include "bimono/enumerate.hpp"
#include "bimono/errors.hpp"
#include "bimono/evaluator.hpp"
#include "bimono/frontier.hpp"
#include "bimono/parallel.hpp"
#include "bimono/polynomial.hpp"
#include "bimono/queue.hpp"
#include "bimono/search.hpp"
#include "bimono/taxicab.hpp"
#include "bimono/tropical.hpp"
#include "bimono/value.hpp"
