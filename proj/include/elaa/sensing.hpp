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

#ifndef elaa_sensing_H
#define elaa_sensing_H

#include <complex>
#include <cstdint>
#include <vector>

#include "elaa/waveform.hpp"

namespace elaa
{

struct Scatterer
{
    SourcePoint point;
    std::complex<double> reflectivity;
};

struct ScattererSet
{
    std::vector<Scatterer> scatterers;
};

// Extended target with per-scatterer reflectivity magnitudes proportional
// to sqrt(sigma_NF(range)) of a disk of the given radius, normalized so
// the total reflected power is 10^(gain_db/10); phases are uniform,
// fixed per seed.
ScattererSet make_extended_target(const std::vector<SourcePoint> &points, double disk_radius,
                                  double wavelength, double gain_db, std::uint64_t seed);

// Monostatic N x N target response G = sum_s beta_s * a(p_s) * a(p_s)^T
// with physical-amplitude steering vectors (per-element magnitude 1);
// near-field vectors are range-dependent, far-field vectors angle-only.
cmat target_response(const ArrayGeometry &geometry, const ScattererSet &target, ChannelModel model);

struct EchoModel
{
    double clutter_power = 0.0; // linear, per received entry
    double noise_power = 1.0;   // sigma^2, linear
    cmat clutter_response;      // N x N, empty when clutter-free
};

// Y = [G*X if target_present] + C*X + W with the clutter response scaled
// so the per-entry clutter power equals clutter_power, and W iid complex
// Gaussian at noise_power. Deterministic per seed.
cmat synthesize_echo(const cmat &response, const IsacWaveform &waveform, const EchoModel &echo_model,
                     bool target_present, std::uint64_t seed);

// Noise-whitened matched-subspace energy detector for a known transmit
// block: T = ||(Y - C*X) V||_F^2 with V an orthonormal basis of the row
// space of X and C*X the known clutter return (subtracted before the
// energy is formed). Under the null, T/(sigma^2/2) is central chi-square
// with 2*N*rank(X) degrees of freedom.
struct Detector
{
    cmat basis;         // L x r; empty when rank(X) == L (projection is identity)
    Eigen::Index n = 0; // receive antennas
    Eigen::Index l = 0;
    Eigen::Index rank = 0;
    double noise_power = 1.0;
};

Detector make_detector(const IsacWaveform &waveform, std::size_t n_antennas, double noise_power);

// Projection energy of a (clutter-centered) receive block. With clutter
// present the caller subtracts the known C*X mean first.
double detection_statistic(const Detector &detector, const cmat &received);

// Precomputed hypothesis means for fast Monte Carlo loops.
struct EchoMeans
{
    cmat null_mean; // C*X (zero matrix when clutter-free)
    cmat alt_mean;  // C*X + G*X
    double noise_power = 1.0;
};

EchoMeans make_echo_means(const cmat &response, const IsacWaveform &waveform,
                          const EchoModel &echo_model);

enum class CalibrationPath
{
    monte_carlo,
    analytic
};

// Threshold with P(T > threshold | target absent) = p_fa for the
// clutter-centered statistic. The Monte Carlo path requires
// trials >= 100/p_fa; the analytic path inverts the central chi-square
// tail.
double calibrate_threshold(const EchoMeans &means, const Detector &detector, double p_fa,
                           CalibrationPath path, std::size_t trials = 0, std::uint64_t seed = 0);

struct PdEstimate
{
    double p_hat = 0.0;
    std::size_t trials = 0;
    double ci95_halfwidth = 0.0; // Wilson interval
};

PdEstimate wilson_estimate(std::size_t successes, std::size_t trials);

class gaussian_source;

// One draw of the energy statistic over `dims` complex entries with an
// arbitrary fixed mean of total energy mean_energy; O(1) per draw (the
// isotropic noise makes the mean's direction irrelevant).
double sample_energy_statistic(double mean_energy, double noise_power, std::size_t dims,
                               gaussian_source &rng);

// p_fa tail threshold of the centered energy statistic over `dims`
// complex noise entries (central chi-square with 2*dims dof).
double analytic_energy_threshold(double noise_power, std::size_t dims, double p_fa);

// Empirical detection (or false-alarm, via target_present=false) rate at a
// threshold over seeded independent trials; per-trial substreams derive
// from (seed, trial index), so the result is order-independent.
PdEstimate estimate_pd(const EchoMeans &means, const Detector &detector, double threshold,
                       std::size_t trials, std::uint64_t seed, bool target_present = true);

} // namespace elaa

#endif
