// Copyright 2026 The qarrow Authors
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

#include "qarrow/random.h"

#include <boost/random/normal_distribution.hpp>

namespace qarrow {

double standard_normal(Rng &rng) {
    // boost's ziggurat is specified bit-for-bit, unlike std::normal_distribution.
    boost::random::normal_distribution<double> dist;
    return dist(rng);
}

}  // namespace qarrow
