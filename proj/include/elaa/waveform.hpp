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

#ifndef elaa_waveform_H
#define elaa_waveform_H

#include <cstdint>
#include <vector>

#include "elaa/propagation.hpp"

namespace elaa
{

// K x L block of unit-average-power constellation symbols
struct SymbolBlock
{
    cmat matrix;
    std::size_t frame_length() const { return static_cast<std::size_t>(matrix.cols()); }
};

// QPSK symbols, deterministic per seed
SymbolBlock random_qpsk_symbols(std::size_t n_users, std::size_t frame_length, std::uint64_t seed);

// N x L transmit block; ||matrix||_F^2 == frame_length * total_power after
// power projection.
struct IsacWaveform
{
    cmat matrix;
    double total_power = 0.0; // per-symbol-slot budget P
};

// Orthogonal constant-modulus sensing reference: rows are distinct cyclic
// shifts of a Zadoff-Chu sequence, so X0*X0^H = (L*P/N)*I exactly.
IsacWaveform reference_radar_waveform(std::size_t n_antennas, std::size_t frame_length,
                                      double total_power = 1.0);

// Sensing reference for N > L, where row orthogonality is infeasible:
// constant-modulus chirp block with exactly orthogonal columns
// (X0^H*X0 = P*I) instead. Each column occupies one spatial-frequency
// DFT bin; with side_count > 0 (square UPA of that side) the bins are
// separable 2D (azimuth, elevation) pairs swept azimuth-first, otherwise
// they follow the flattened element index. Requires L <= N.
IsacWaveform chirp_reference_waveform(std::size_t n_antennas, std::size_t frame_length,
                                      double total_power = 1.0, std::size_t side_count = 0);

struct WeightedDesign
{
    IsacWaveform waveform;
    double power_scale = 1.0; // factor applied to meet the power budget
    double mui_energy = 0.0;  // ||H*X - S||_F^2 before power scaling
    bool rank_deficient = false;
};

// Minimizer of rho*||H*X - S||_F^2 + (1-rho)*||X - X0||_F^2, i.e.
// X = (rho*H^H*H + (1-rho)*I)^-1 (rho*H^H*S + (1-rho)*X0), then projected
// onto the total-power constraint. rho = 1 falls back to the minimum-norm
// least-squares solution and flags rank deficiency when H is rank
// deficient.
WeightedDesign design_weighted_waveform(const ChannelSet &channels, const SymbolBlock &symbols,
                                        const IsacWaveform &reference, double rho, double power);

// Conjugate-beam (MRT) precoder X = H_d^H * diag(c) * S with per-user beam
// normalization, projected onto the power budget. The design channel set
// may differ from the true one (far-field-mismatched designs).
IsacWaveform mrt_waveform(const ChannelSet &channels_for_design, const SymbolBlock &symbols,
                          double power);

struct NullingResult
{
    IsacWaveform waveform;
    double retained_power_fraction = 1.0; // before rescaling
};

// Projects every column onto the orthogonal complement of the span of the
// CPE steering vectors, then restores the power budget. Throws when the
// null space is empty (as many constraints as antennas).
NullingResult project_null_constraints(const IsacWaveform &waveform,
                                       const std::vector<cvec> &cpe_steering);

struct EstimatedChannels
{
    cmat matrix; // K x N least-squares estimate
    std::size_t pilot_length = 0;
    double pilot_snr_db = 0.0;
};

// Orthogonal uplink pilots with complex Gaussian noise; per-entry error
// variance 1/(tau_p * snr). Deterministic per seed. Requires tau_p >= K.
EstimatedChannels estimate_channels_ls(const ChannelSet &true_channels, std::size_t pilot_length,
                                       double pilot_snr_db, std::uint64_t seed);

struct RateReport
{
    std::vector<double> per_user_rate; // bits/s/Hz, prelog included
    std::vector<double> sinr;          // linear
    double prelog = 1.0;
    bool capped = false; // noiseless+interference-free sentinel hit
};

// Empirical per-user SINR from the decomposition of H*X against the
// desired symbols (matched projection vs. residual + noise), with rate
// (1 - tau_p/tau_c) * log2(1 + sinr).
RateReport achievable_rates(const ChannelSet &true_channels, const IsacWaveform &waveform,
                            const SymbolBlock &symbols, double noise_power, std::size_t tau_p,
                            std::size_t tau_c);

} // namespace elaa

#endif
