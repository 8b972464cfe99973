// Copyright 2026 The spinnet Authors
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
#include <random>

namespace spinnet {

/// Seeded MT19937-64 stream. Doubles are built from the top 53 bits so that
/// sampled outcomes do not depend on the standard library's distributions.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {
    }

    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }
    std::uint64_t next() {
        return engine_();
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace spinnet
