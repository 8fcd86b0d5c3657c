// Copyright 2026 The ddskit Authors
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

#ifndef DDSKIT_SRC_FUNCTIONAL_HPP
#define DDSKIT_SRC_FUNCTIONAL_HPP

#include <cstddef>
#include <vector>

namespace ddskit::detail {

// Minimal period of every periodic point of the endofunction f, 0 for
// transient points. Linear time.
inline std::vector<std::size_t> periods(const std::vector<std::size_t>& f) {
  const std::size_t n = f.size();
  enum : unsigned char { kNew, kOnPath, kDone };
  std::vector<unsigned char> state(n, kNew);
  std::vector<std::size_t> period(n, 0);
  std::vector<std::size_t> path;
  for (std::size_t start = 0; start < n; ++start) {
    if (state[start] != kNew) continue;
    path.clear();
    std::size_t x = start;
    while (state[x] == kNew) {
      state[x] = kOnPath;
      path.push_back(x);
      x = f[x];
    }
    if (state[x] == kOnPath) {
      // x closes a fresh cycle: the path suffix from x.
      std::size_t len = 0;
      for (auto it = path.rbegin(); it != path.rend(); ++it) {
        ++len;
        if (*it == x) break;
      }
      for (std::size_t i = path.size() - len; i < path.size(); ++i) period[path[i]] = len;
    }
    for (std::size_t y : path) state[y] = kDone;
  }
  return period;
}

}  // namespace ddskit::detail

#endif  // DDSKIT_SRC_FUNCTIONAL_HPP
