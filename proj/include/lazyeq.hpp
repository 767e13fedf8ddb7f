// Copyright 2026 The lazyeq Authors
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

#ifndef LAZYEQ_LAZYEQ_HPP_
#define LAZYEQ_LAZYEQ_HPP_

#include "lazyeq/core_games.hpp"
#include "lazyeq/dag_games.hpp"
#include "lazyeq/dynamics.hpp"
#include "lazyeq/equilibria.hpp"
#include "lazyeq/error.hpp"
#include "lazyeq/fixtures.hpp"
#include "lazyeq/generators.hpp"
#include "lazyeq/graph.hpp"
#include "lazyeq/io.hpp"
#include "lazyeq/normal_form.hpp"
#include "lazyeq/perturbed_chain.hpp"
#include "lazyeq/potentials.hpp"
#include "lazyeq/random.hpp"
#include "lazyeq/rational.hpp"

#endif  // LAZYEQ_LAZYEQ_HPP_
