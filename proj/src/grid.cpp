// Copyright 2026 The infoeq Authors
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

#include "infoeq/grid.hpp"

#include <cmath>

#include "infoeq/errors.hpp"
#include "infoeq/table.hpp"

namespace infoeq {

GridSpec parse_grid_spec(const std::string& text, bool log_spaced) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? c1 : text.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos ||
      text.find(':', c2 + 1) != std::string::npos)
    fail(ErrorKind::kParse, "grid must be start:stop:count, got '" + text + "'");
  GridSpec spec;
  spec.start = parse_double(text.substr(0, c1));
  spec.stop = parse_double(text.substr(c1 + 1, c2 - c1 - 1));
  const double count = parse_double(text.substr(c2 + 1));
  if (!(count >= 1.0) || count != std::floor(count) || count > 1e8)
    fail(ErrorKind::kParse, "grid count must be a positive integer");
  spec.count = static_cast<std::size_t>(count);
  spec.log_spaced = log_spaced;
  return spec;
}

std::vector<double> make_grid(const GridSpec& spec) {
  if (spec.count == 0) fail(ErrorKind::kInvalidArgument, "empty grid");
  if (!std::isfinite(spec.start) || !std::isfinite(spec.stop))
    fail(ErrorKind::kInvalidArgument, "grid bounds must be finite");
  if (spec.count == 1) return {spec.start};
  if (spec.log_spaced && !(spec.start > 0.0 && spec.stop > 0.0))
    fail(ErrorKind::kInvalidArgument, "log grid needs positive bounds");
  std::vector<double> g(spec.count);
  const double n1 = static_cast<double>(spec.count - 1);
  if (spec.log_spaced) {
    const double a = std::log(spec.start), b = std::log(spec.stop);
    for (std::size_t i = 0; i < spec.count; ++i)
      g[i] = std::exp(a + (b - a) * (static_cast<double>(i) / n1));
  } else {
    for (std::size_t i = 0; i < spec.count; ++i)
      g[i] = spec.start + (spec.stop - spec.start) * (static_cast<double>(i) / n1);
  }
  g.front() = spec.start;
  g.back() = spec.stop;
  return g;
}

}  // namespace infoeq
