// Copyright 2026 The maxvar Authors
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

#ifndef MAXVAR_SAMPLE_SET_HPP
#define MAXVAR_SAMPLE_SET_HPP

#include "maxvar/rational.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace maxvar {

/// Finite strictly increasing set of sample abscissae.
struct SampleSet {
  std::vector<Rational> points;

  void validate() const {
    if (points.empty()) throw std::invalid_argument("SampleSet: empty");
    for (std::size_t i = 1; i < points.size(); ++i)
      if (!(points[i - 1] < points[i]))
        throw std::invalid_argument("SampleSet: points must be strictly increasing");
  }
};

/// Variation of a finite value sequence: sum of |consecutive differences|.
/// For samples of a function over a finite set this equals the sup over
/// monotone reindexings.
inline Rational variation_of_values(std::span<const Rational> values) {
  Rational v = 0;
  for (std::size_t i = 1; i < values.size(); ++i) v += rat_abs(values[i] - values[i - 1]);
  return v;
}

template <typename Evaluator>
Rational var_over(const SampleSet& samples, Evaluator&& eval) {
  samples.validate();
  std::vector<Rational> vals;
  vals.reserve(samples.points.size());
  for (const Rational& x : samples.points) vals.push_back(eval(x));
  return variation_of_values(vals);
}

}  // namespace maxvar

#endif  // MAXVAR_SAMPLE_SET_HPP
