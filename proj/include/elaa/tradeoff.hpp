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

#ifndef elaa_tradeoff_H
#define elaa_tradeoff_H

#include <optional>
#include <string>
#include <vector>

#include "elaa/experiments.hpp"
#include "elaa/sensing.hpp"

namespace elaa
{

// Everything one rate-detection case needs: geometry, channels (true and
// pilot-estimated), desired symbols, sensing reference, target and
// clutter responses, detector noise floor.
struct CaseSetup
{
    std::string name;
    std::size_t k_users = 0;
    std::size_t freq_index = 0;
    ArrayGeometry geometry;
    ChannelSet true_channels;
    ChannelSet design_channels; // estimated by default, true when configured
    SymbolBlock symbols;
    IsacWaveform reference;
    cmat target_g;                          // near-field target response
    std::vector<SourcePoint> target_points; // scatterer locations
    std::vector<cvec> target_steering;      // per-scatterer steering vectors
    std::vector<double> target_magnitudes;  // RCS-weighted reflectivity magnitudes
    EchoModel echo;
    double power = 1.0;       // P from the transmit SNR (sigma^2 = 1)
    std::size_t tau_p = 0;
    std::size_t tau_c = 0;
    std::uint64_t seed = 0;
};

CaseSetup build_case(const Scenario &scenario, std::size_t k_users, std::size_t freq_index,
                     std::uint64_t case_seed);

struct OperatingPoint
{
    double rho = -1.0;          // -1 marks MRT cases (no weighting factor)
    double mean_user_rate = 0.0; // bits/s/Hz, prelog included
    PdEstimate pd;
    double threshold = 0.0;
};

// Weighted ISAC design at one rho: estimated-channel precoding, rates on
// the true channels, analytic threshold at the scenario p_fa, Monte
// Carlo detection probability.
OperatingPoint evaluate_rho_point(const CaseSetup &setup, const Scenario &scenario, double rho,
                                  std::size_t trials, std::uint64_t trial_seed);

// MRT precoding; far_field_mismatch designs on a planar-wavefront channel
// set built from the same UE angles, evaluation stays on the true
// near-field channels.
OperatingPoint evaluate_mrt_point(const CaseSetup &setup, const Scenario &scenario,
                                  bool far_field_mismatch, std::size_t trials,
                                  std::uint64_t trial_seed);

struct CaseRecord
{
    std::string name;
    std::string type; // "weighted" | "mrt_near" | "mrt_far"
    std::size_t k_users = 0;
    std::size_t side_count = 0;
    double freq_ghz = 0.0;
    std::string status; // "run" | "skipped_desk_cap"
};

struct TradeoffResult
{
    Table curve;    // case,rho,rate_bps_hz,pd,pd_ci95
    Table manifest; // the full configured case grid with statuses
};

// Full sweep over the configured (K, carrier) grid plus the MRT
// near/far pair. Desk-scale default skips N > 961 unless `full`.
TradeoffResult run_tradeoff(const Scenario &scenario, bool full);

void write_tradeoff(const TradeoffResult &result, const std::string &out_dir, bool svg);

} // namespace elaa

#endif
