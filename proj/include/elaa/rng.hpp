// SPDX-License-Identifier: Apache-2.0
//
// elaa-isac-sim  Near-field ELAA / ISAC simulation library
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef elaa_rng_H
#define elaa_rng_H

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace elaa
{

// splitmix64 step; used to derive independent substream seeds from
// (master seed, index) so results do not depend on execution order.
inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t index)
{
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Deterministic Gaussian source. Box-Muller on top of mt19937_64 with a
// fully specified uniform mapping, so streams are identical across
// platforms and standard-library versions.
class gaussian_source
{
  public:
    explicit gaussian_source(std::uint64_t seed) : engine(seed) {}

    double uniform01() // in (0, 1]
    {
        return static_cast<double>((engine() >> 11) + 1ULL) * 0x1.0p-53;
    }

    double normal()
    {
        if (have_spare)
        {
            have_spare = false;
            return spare;
        }
        double u1 = uniform01();
        double u2 = uniform01();
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 6.283185307179586476925287 * u2;
        spare = radius * std::sin(angle);
        have_spare = true;
        return radius * std::cos(angle);
    }

    // CN(0, variance): real and imaginary parts N(0, variance/2)
    std::complex<double> complex_normal(double variance)
    {
        double s = std::sqrt(0.5 * variance);
        double u1 = uniform01();
        double u2 = uniform01();
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 6.283185307179586476925287 * u2;
        return {s * radius * std::cos(angle), s * radius * std::sin(angle)};
    }

  private:
    std::mt19937_64 engine;
    double spare = 0.0;
    bool have_spare = false;
};

} // namespace elaa

#endif
