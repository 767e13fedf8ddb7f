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

// Runs lazy improvement on a quadratic-family game and compares the number
// of steps with the global bound.

#include <cstdlib>
#include <iostream>

#include "lazyeq.hpp"

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 3;
  auto game =
      std::get<lazyeq::TreeDocument>(lazyeq::ParseDocument(lazyeq::FixtureText(
                                         "quadratic-" + std::to_string(n))))
          .game;
  lazyeq::RunOptions options;
  options.mode = lazyeq::StepMode::kLazy;
  options.policy = lazyeq::Policy::kScripted;
  options.script = *lazyeq::QuadraticScript(*game);
  lazyeq::RunTrace trace =
      lazyeq::Run(lazyeq::Profile::FirstChoices(game), options);
  std::cout << "quadratic-" << n << ": " << trace.steps.size()
            << " lazy steps, global bound " << lazyeq::GlobalBound(*game)
            << "\n";
  return 0;
}
