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

// Prints the stable profiles of the perturbed chain on the eight-profile
// example.

#include <iostream>

#include "lazyeq.hpp"

int main() {
  auto game = std::get<lazyeq::TreeDocument>(
                  lazyeq::ParseDocument(lazyeq::FixtureText("markov-abcdefgh")))
                  .game;
  lazyeq::Rational p(1, 10);
  auto report = lazyeq::StableProfiles(game, p, p / 10);
  lazyeq::ProfileSpace<lazyeq::Game> space(game);
  for (const auto& s : report.states) {
    std::cout << lazyeq::ProfileText(space.Decode(s.state)) << "  " << s.limit
              << (s.stable ? "  stable" : "") << "\n";
  }
  return 0;
}
