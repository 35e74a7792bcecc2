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

#include "elaa/tradeoff.hpp"

#include <cmath>
#include <filesystem>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "elaa/rng.hpp"

namespace elaa
{

static constexpr double deg = 3.141592653589793238462643 / 180.0;
static constexpr double two_pi = 6.283185307179586476925287;
static constexpr std::size_t desk_side_cap = 31; // N = 961

static std::vector<SourcePoint> to_points(const std::vector<double> &ranges,
                                          const std::vector<double> &az_deg,
                                          const std::vector<double> &el_deg, std::size_t count)
{
    std::vector<SourcePoint> pts;
    for (std::size_t i = 0; i < count; ++i)
        pts.push_back({ranges[i], az_deg[i] * deg, el_deg[i] * deg});
    return pts;
}

CaseSetup build_case(const Scenario &scenario, std::size_t k_users, std::size_t freq_index,
                     std::uint64_t case_seed)
{
    CaseSetup setup;
    setup.k_users = k_users;
    setup.freq_index = freq_index;
    setup.seed = case_seed;
    setup.geometry = scenario_geometry(scenario, freq_index);
    setup.tau_c = static_cast<std::size_t>(scenario.coherence_symbols);
    setup.tau_p = k_users;
    setup.power = std::pow(10.0, scenario.transmit_snr_db / 10.0); // sigma^2 = 1

    auto ue_points = to_points(scenario.ue_ranges_m, scenario.ue_azimuths_deg,
                               scenario.ue_elevations_deg, k_users);
    // unit average per-element gain at the reference distance (row norm
    // sqrt(N)); keeps the 0 dB pilot SNR physically meaningful
    double element_gain_db = 10.0 * std::log10(static_cast<double>(setup.geometry.n_antennas()));
    setup.true_channels =
        build_channels(setup.geometry, ue_points, ChannelModel::near_field, AmplitudeModel::phase_only,
                       element_gain_db, scenario.reference_distance_m);

    // the precoder designs against unit-reference-gain rows (1/sqrt(N)),
    // so the achieved receive amplitude carries the array gain while the
    // desired-symbol block stays unit power
    double design_scale = 1.0 / std::sqrt(static_cast<double>(setup.geometry.n_antennas()));
    setup.design_channels = setup.true_channels;
    if (scenario.use_estimated_channels)
    {
        EstimatedChannels est = estimate_channels_ls(setup.true_channels, setup.tau_p,
                                                     scenario.pilot_snr_db, split_seed(case_seed, 1));
        setup.design_channels.matrix = design_scale * est.matrix;
    }
    else
        setup.design_channels.matrix = design_scale * setup.true_channels.matrix;

    std::size_t frame = setup.tau_c - setup.tau_p;
    setup.symbols = random_qpsk_symbols(k_users, frame, split_seed(case_seed, 2));
    // row-orthogonal reference when the frame allows it, column-orthogonal
    // chirp block otherwise (N antennas > L slots)
    setup.reference =
        (frame >= setup.geometry.n_antennas())
            ? reference_radar_waveform(setup.geometry.n_antennas(), frame, setup.power)
            : chirp_reference_waveform(setup.geometry.n_antennas(), frame, setup.power,
                                       setup.geometry.side_count);

    double lambda = setup.geometry.wavelength;
    auto target_points = to_points(scenario.target_ranges_m, scenario.target_azimuths_deg,
                                   scenario.target_elevations_deg, scenario.target_ranges_m.size());
    // the physical scene is a scenario property: every case sees the same
    // target and clutter phase draws, so case-to-case P_D differences come
    // from the design, not from scene luck
    ScattererSet target = make_extended_target(target_points, scenario.target_disk_radius_m, lambda,
                                               scenario.target_gain_db, split_seed(scenario.seed, 11));
    setup.target_g = target_response(setup.geometry, target, ChannelModel::near_field);
    setup.target_points = target_points;
    for (const Scatterer &s : target.scatterers)
    {
        setup.target_steering.push_back(
            physical_steering(setup.geometry, s.point, ChannelModel::near_field));
        setup.target_magnitudes.push_back(std::abs(s.reflectivity));
    }

    setup.echo.noise_power = 1.0;
    if (!scenario.clutter_ranges_m.empty())
    {
        auto clutter_points = to_points(scenario.clutter_ranges_m, scenario.clutter_azimuths_deg,
                                        scenario.clutter_elevations_deg, scenario.clutter_ranges_m.size());
        ScattererSet clutter = make_extended_target(clutter_points, scenario.target_disk_radius_m,
                                                    lambda, 0.0, split_seed(scenario.seed, 13));
        setup.echo.clutter_response = target_response(setup.geometry, clutter, ChannelModel::near_field);
        setup.echo.clutter_power = std::pow(10.0, scenario.clutter_to_noise_db / 10.0);
    }
    return setup;
}

// Detection probability for a fluctuating target: the scatterer phases
// are redrawn every trial, so P_D estimates the phase-ensemble average.
// With four nearly-collinear scatterers a single coherent draw can swing
// the echo energy by an order of magnitude, which would make the case
// orderings depend on the seed rather than on the design. The centered
// mean is sum_s beta_s * u_s * w_s^T, so its projected energy reduces to
// a quadratic form over an S x S Gram matrix; together with the O(1)
// energy-statistic sampler each trial costs O(S^2).
//
// A non-empty left_basis restricts the detector to that receive-side
// subspace (model-matched variant for the MRT near/far pair).
static PdEstimate fluctuating_pd(const CaseSetup &setup, const Detector &detector,
                                 const IsacWaveform &waveform, const cmat &left_basis,
                                 double threshold, std::size_t trials, std::uint64_t seed)
{
    const std::size_t s_count = setup.target_steering.size();
    std::vector<cvec> u(s_count), w(s_count);
    for (std::size_t s = 0; s < s_count; ++s)
    {
        u[s] = (left_basis.size() == 0) ? setup.target_steering[s]
                                        : cvec(left_basis.adjoint() * setup.target_steering[s]);
        Eigen::RowVectorXcd row = setup.target_steering[s].transpose() * waveform.matrix;
        w[s] = (detector.basis.size() == 0) ? cvec(row.transpose())
                                            : cvec((row * detector.basis).transpose());
    }
    cmat gram(s_count, s_count);
    for (std::size_t s = 0; s < s_count; ++s)
        for (std::size_t p = 0; p < s_count; ++p)
            gram(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(p)) =
                u[p].dot(u[s]) * w[p].dot(w[s]);

    const auto left_dims = static_cast<std::size_t>(left_basis.size() == 0 ? detector.n
                                                                           : left_basis.cols());
    const auto dims =
        left_dims *
        static_cast<std::size_t>(detector.basis.size() == 0 ? detector.l : detector.rank);
    std::vector<std::complex<double>> beta(s_count);
    std::size_t hits = 0;
    for (std::size_t t = 0; t < trials; ++t)
    {
        gaussian_source rng(split_seed(seed, t));
        for (std::size_t s = 0; s < s_count; ++s)
            beta[s] = std::polar(setup.target_magnitudes[s], two_pi * rng.uniform01());
        std::complex<double> acc = 0.0;
        for (std::size_t s = 0; s < s_count; ++s)
            for (std::size_t p = 0; p < s_count; ++p)
                acc += beta[s] * std::conj(beta[p]) *
                       gram(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(p));
        double stat = sample_energy_statistic(acc.real(), detector.noise_power, dims, rng);
        if (stat > threshold)
            ++hits;
    }
    return wilson_estimate(hits, trials);
}

static OperatingPoint evaluate_waveform(const CaseSetup &setup, const Scenario &scenario,
                                        const IsacWaveform &waveform, const cmat &left_basis,
                                        double rho, std::size_t trials, std::uint64_t trial_seed)
{
    OperatingPoint pt;
    pt.rho = rho;

    RateReport rates =
        achievable_rates(setup.true_channels, waveform, setup.symbols, 1.0, setup.tau_p, setup.tau_c);
    pt.mean_user_rate = std::accumulate(rates.per_user_rate.begin(), rates.per_user_rate.end(), 0.0) /
                        static_cast<double>(rates.per_user_rate.size());

    Detector detector = make_detector(waveform, setup.geometry.n_antennas(), setup.echo.noise_power);
    if (left_basis.size() == 0)
    {
        EchoMeans means = make_echo_means(setup.target_g, waveform, setup.echo);
        pt.threshold = calibrate_threshold(means, detector, scenario.p_fa, CalibrationPath::analytic);
    }
    else
    {
        auto dims = static_cast<std::size_t>(left_basis.cols()) *
                    static_cast<std::size_t>(detector.basis.size() == 0 ? detector.l
                                                                        : detector.rank);
        pt.threshold = analytic_energy_threshold(setup.echo.noise_power, dims, scenario.p_fa);
    }
    pt.pd = fluctuating_pd(setup, detector, waveform, left_basis, pt.threshold, trials, trial_seed);
    return pt;
}

// Orthonormal basis of the presumed target span under the given model:
// one steering vector per distinct nominal direction, taken at the first
// configured range. Using the same span size for both models keeps their
// detector dimensions (and thresholds) identical, so the near/far
// comparison is decided by how much echo energy each model captures.
static cmat presumed_target_basis(const CaseSetup &setup, ChannelModel model)
{
    std::vector<SourcePoint> nominal;
    for (const SourcePoint &p : setup.target_points)
    {
        bool seen = false;
        for (const SourcePoint &q : nominal)
            seen = seen || (q.azimuth == p.azimuth && q.elevation == p.elevation);
        if (!seen)
            nominal.push_back({nominal.empty() ? p.range : nominal.front().range, p.azimuth,
                               p.elevation});
    }
    const auto n = static_cast<Eigen::Index>(setup.geometry.n_antennas());
    cmat span(n, static_cast<Eigen::Index>(nominal.size()));
    for (std::size_t s = 0; s < nominal.size(); ++s)
        span.col(static_cast<Eigen::Index>(s)) = physical_steering(setup.geometry, nominal[s], model);
    Eigen::HouseholderQR<cmat> qr(span);
    return cmat(qr.householderQ()) .leftCols(span.cols());
}

OperatingPoint evaluate_rho_point(const CaseSetup &setup, const Scenario &scenario, double rho,
                                  std::size_t trials, std::uint64_t trial_seed)
{
    WeightedDesign design = design_weighted_waveform(setup.design_channels, setup.symbols,
                                                     setup.reference, rho, setup.power);
    return evaluate_waveform(setup, scenario, design.waveform, cmat(), rho, trials, trial_seed);
}

OperatingPoint evaluate_mrt_point(const CaseSetup &setup, const Scenario &scenario,
                                  bool far_field_mismatch, std::size_t trials,
                                  std::uint64_t trial_seed)
{
    // both variants use noiseless model knowledge on both link ends, so
    // the pair isolates the wavefront assumption: the near-field system
    // precodes on the true spherical-wavefront channels and projects the
    // echo onto the exact target span; the mismatched system uses a
    // planar-wavefront reconstruction from the same UE/target angles for
    // both. The true echo mean always lies in the near-field span, so the
    // angle-only model can only lose echo energy.
    ChannelModel model = far_field_mismatch ? ChannelModel::far_field : ChannelModel::near_field;
    IsacWaveform waveform;
    if (far_field_mismatch)
    {
        double element_gain_db =
            10.0 * std::log10(static_cast<double>(setup.geometry.n_antennas()));
        ChannelSet planar = build_channels(setup.geometry, setup.true_channels.ue_points,
                                           ChannelModel::far_field, AmplitudeModel::phase_only,
                                           element_gain_db, scenario.reference_distance_m);
        waveform = mrt_waveform(planar, setup.symbols, setup.power);
    }
    else
        waveform = mrt_waveform(setup.true_channels, setup.symbols, setup.power);
    cmat left_basis = presumed_target_basis(setup, model);
    return evaluate_waveform(setup, scenario, waveform, left_basis, -1.0, trials, trial_seed);
}

TradeoffResult run_tradeoff(const Scenario &scenario, bool full)
{
    TradeoffResult result;
    result.curve.columns = {"case", "rho", "rate_bps_hz", "pd", "pd_ci95"};
    result.manifest.columns = {"case", "type", "k_users", "side_count", "n_antennas", "freq_ghz",
                               "status"};

    struct PlannedCase
    {
        std::string name;
        std::string type;
        std::size_t k_users;
        std::size_t freq_index;
        bool run;
    };
    std::vector<PlannedCase> plan;

    auto case_name = [&](std::size_t k, std::size_t fi, const std::string &suffix) {
        auto side = static_cast<std::size_t>(scenario.side_counts[fi]);
        std::ostringstream os;
        os << "K" << k << "_N" << side * side << "_f" << format_number(scenario.frequencies_ghz[fi])
           << suffix;
        return os.str();
    };
    auto allowed = [&](std::size_t fi) {
        return full || static_cast<std::size_t>(scenario.side_counts[fi]) <= desk_side_cap;
    };

    for (auto k : scenario.user_counts)
        for (std::size_t fi = 0; fi < scenario.frequencies_ghz.size(); ++fi)
            plan.push_back({case_name(static_cast<std::size_t>(k), fi, ""), "weighted",
                            static_cast<std::size_t>(k), fi, allowed(fi)});

    // MRT near/far pair at the first user count on the largest permitted array
    std::size_t mrt_fi = 0;
    for (std::size_t fi = 0; fi < scenario.frequencies_ghz.size(); ++fi)
        if (allowed(fi) && scenario.side_counts[fi] >= scenario.side_counts[mrt_fi])
            mrt_fi = fi;
    auto mrt_k = static_cast<std::size_t>(scenario.user_counts.front());
    plan.push_back({case_name(mrt_k, mrt_fi, "_mrt_near"), "mrt_near", mrt_k, mrt_fi, allowed(mrt_fi)});
    plan.push_back({case_name(mrt_k, mrt_fi, "_mrt_far"), "mrt_far", mrt_k, mrt_fi, allowed(mrt_fi)});

    const std::vector<double> rho_grid = scenario.rho_grid();
    const auto trials = static_cast<std::size_t>(scenario.trials);

    for (std::size_t ci = 0; ci < plan.size(); ++ci)
    {
        const PlannedCase &pc = plan[ci];
        auto side = static_cast<std::size_t>(scenario.side_counts[pc.freq_index]);
        result.manifest.add_row({pc.name, pc.type, format_number(static_cast<double>(pc.k_users)),
                                 format_number(static_cast<double>(side)),
                                 format_number(static_cast<double>(side * side)),
                                 format_number(scenario.frequencies_ghz[pc.freq_index]),
                                 pc.run ? "run" : "skipped_desk_cap"});
        if (!pc.run)
            continue;

        std::uint64_t case_seed = split_seed(scenario.seed, 1000 + ci);
        CaseSetup setup = build_case(scenario, pc.k_users, pc.freq_index, case_seed);
        setup.name = pc.name;

        auto emit = [&](const OperatingPoint &pt) {
            result.curve.add_row({pc.name, format_number(pt.rho), format_number(pt.mean_user_rate),
                                  format_number(pt.pd.p_hat), format_number(pt.pd.ci95_halfwidth)});
        };

        try
        {
            if (pc.type == "weighted")
            {
                for (std::size_t ri = 0; ri < rho_grid.size(); ++ri)
                    emit(evaluate_rho_point(setup, scenario, rho_grid[ri], trials,
                                            split_seed(case_seed, 100 + ri)));
            }
            else
                // shared draw stream: the near/far pair is a paired
                // comparison over identical target fluctuations
                emit(evaluate_mrt_point(setup, scenario, pc.type == "mrt_far", trials,
                                        split_seed(scenario.seed, 500)));
        }
        catch (const std::exception &e)
        {
            throw std::runtime_error("tradeoff case '" + pc.name + "': " + e.what());
        }
    }
    return result;
}

void write_tradeoff(const TradeoffResult &result, const std::string &out_dir, bool svg)
{
    std::filesystem::create_directories(out_dir);
    write_csv(result.curve, out_dir + "/tradeoff.csv");
    write_csv(result.manifest, out_dir + "/cases.csv");
    if (!svg)
        return;

    // pivot rho-indexed rate/pd columns per weighted case for plotting
    std::vector<std::string> cases;
    for (const auto &row : result.curve.rows)
        if (row[1] != "-1" && (cases.empty() || cases.back() != row[0]))
            cases.push_back(row[0]);

    Table rate, pd;
    rate.columns = {"rho"};
    pd.columns = {"rho"};
    for (const auto &c : cases)
    {
        rate.columns.push_back("rate_" + c);
        pd.columns.push_back("pd_" + c);
    }
    std::vector<std::string> rhos;
    for (const auto &row : result.curve.rows)
        if (row[0] == cases.front() && row[1] != "-1")
            rhos.push_back(row[1]);
    for (const auto &r : rhos)
    {
        std::vector<std::string> rrow{r}, prow{r};
        for (const auto &c : cases)
        {
            for (const auto &row : result.curve.rows)
                if (row[0] == c && row[1] == r)
                {
                    rrow.push_back(row[2]);
                    prow.push_back(row[3]);
                    break;
                }
        }
        if (rrow.size() == rate.columns.size())
        {
            rate.add_row(rrow);
            pd.add_row(prow);
        }
    }
    if (!rate.rows.empty())
    {
        write_svg_lineplot(rate, out_dir + "/tradeoff_rate.svg", "per-user rate vs rho", false);
        write_svg_lineplot(pd, out_dir + "/tradeoff_pd.svg", "detection probability vs rho", false);
    }
}

} // namespace elaa
