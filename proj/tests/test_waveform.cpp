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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "elaa/geometry.hpp"
#include "elaa/propagation.hpp"
#include "elaa/rng.hpp"
#include "elaa/waveform.hpp"

using namespace elaa;

namespace
{

cmat random_complex(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed)
{
    gaussian_source rng(seed);
    cmat m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c)
            m(r, c) = rng.complex_normal(1.0);
    return m;
}

ChannelSet wrap_channels(cmat h)
{
    ChannelSet set;
    set.matrix = std::move(h);
    return set;
}

double weighted_objective(const cmat &h, const cmat &s, const cmat &x0, double rho, const cmat &x)
{
    return rho * (h * x - s).squaredNorm() + (1.0 - rho) * (x - x0).squaredNorm();
}

// Steepest descent with exact line search on the quadratic objective;
// independent of the closed-form solver under test.
cmat gradient_oracle(const cmat &h, const cmat &s, const cmat &x0, double rho)
{
    cmat x = cmat::Zero(x0.rows(), x0.cols());
    for (int it = 0; it < 20000; ++it)
    {
        cmat g = rho * (h.adjoint() * (h * x - s)) + (1.0 - rho) * (x - x0);
        double gn = g.squaredNorm();
        if (gn < 1e-26)
            break;
        double curv = rho * (h * g).squaredNorm() + (1.0 - rho) * gn;
        x -= (gn / curv) * g;
    }
    return x;
}

ArrayGeometry deployment_array(double f = 7.8e9, std::size_t side = 31)
{
    return build_upa_with_aperture(f, side, 0.25, 1.243);
}

std::vector<SourcePoint> deployment_ues()
{
    double d2r = 3.141592653589793238462643 / 180.0;
    return {{30.0, -30.0 * d2r, 0.0}, {40.0, -15.0 * d2r, 0.0}, {50.0, 0.0, 0.0},
            {60.0, 20.0 * d2r, 0.0}};
}

} // namespace

TEST_CASE("radar reference block: orthogonal rows, constant modulus, clean autocorrelation")
{
    for (std::size_t l : {16u, 61u, 192u})
    {
        IsacWaveform x0 = reference_radar_waveform(4, l, 2.0);
        cmat gram = x0.matrix * x0.matrix.adjoint();
        cmat target = (static_cast<double>(l) * 2.0 / 4.0) * cmat::Identity(4, 4);
        CHECK((gram - target).norm() < 1e-9);

        double mag = std::sqrt(2.0 / 4.0);
        for (Eigen::Index r = 0; r < x0.matrix.rows(); ++r)
            for (Eigen::Index c = 0; c < x0.matrix.cols(); ++c)
                CHECK(std::abs(std::abs(x0.matrix(r, c)) - mag) < 1e-12);

        // periodic autocorrelation of each row: single mainlobe
        cvec row = x0.matrix.row(0);
        double mainlobe = std::abs(row.squaredNorm());
        for (std::size_t shift = 1; shift < l; ++shift)
        {
            std::complex<double> acc = 0.0;
            for (std::size_t i = 0; i < l; ++i)
                acc += row(static_cast<Eigen::Index>(i)) *
                       std::conj(row(static_cast<Eigen::Index>((i + shift) % l)));
            CHECK(std::abs(acc) < mainlobe / std::sqrt(static_cast<double>(l)));
        }
    }

    CHECK_THROWS_AS(reference_radar_waveform(8, 4), std::invalid_argument);
    CHECK_THROWS_AS(reference_radar_waveform(0, 4), std::invalid_argument);
}

TEST_CASE("tall chirp reference: orthogonal columns, constant modulus, power budget")
{
    IsacWaveform x0 = chirp_reference_waveform(25, 12, 3.0);
    cmat gram = x0.matrix.adjoint() * x0.matrix;
    CHECK((gram - 3.0 * cmat::Identity(12, 12)).norm() < 1e-9);
    CHECK(std::abs(x0.matrix.squaredNorm() - 12.0 * 3.0) < 1e-9);
    double mag = std::sqrt(3.0 / 25.0);
    for (Eigen::Index r = 0; r < 25; ++r)
        for (Eigen::Index c = 0; c < 12; ++c)
            CHECK(std::abs(std::abs(x0.matrix(r, c)) - mag) < 1e-12);
    CHECK_THROWS_AS(chirp_reference_waveform(4, 8), std::invalid_argument);
}

TEST_CASE("weighted design endpoints")
{
    ChannelSet h = wrap_channels(random_complex(3, 12, 11));
    SymbolBlock s = random_qpsk_symbols(3, 24, 12);
    IsacWaveform x0 = reference_radar_waveform(12, 24, 1.0);

    WeightedDesign at0 = design_weighted_waveform(h, s, x0, 0.0, 1.0);
    CHECK((at0.waveform.matrix - x0.matrix).norm() < 1e-9);

    WeightedDesign at1 = design_weighted_waveform(h, s, x0, 1.0, 1.0);
    CHECK(at1.mui_energy < 1e-9);
    CHECK_FALSE(at1.rank_deficient);

    // rank-deficient H at rho = 1: minimum-norm LS, flagged
    cmat hr = random_complex(1, 12, 13);
    cmat stacked(2, 12);
    stacked.row(0) = hr.row(0);
    stacked.row(1) = 2.0 * hr.row(0);
    WeightedDesign def =
        design_weighted_waveform(wrap_channels(stacked), random_qpsk_symbols(2, 24, 14), x0, 1.0, 1.0);
    CHECK(def.rank_deficient);
}

TEST_CASE("closed form matches the gradient-descent oracle on 20 random instances")
{
    gaussian_source pick(2024);
    for (int i = 0; i < 20; ++i)
    {
        auto k = static_cast<Eigen::Index>(1 + static_cast<int>(pick.uniform01() * 3.0));
        auto n = static_cast<Eigen::Index>(k + static_cast<int>(pick.uniform01() * (8 - k)));
        auto l = static_cast<Eigen::Index>(n + static_cast<int>(pick.uniform01() * (16 - n)));
        double rho = 0.1 + 0.8 * pick.uniform01();

        cmat hm = random_complex(k, n, 400 + static_cast<std::uint64_t>(i));
        SymbolBlock s = random_qpsk_symbols(static_cast<std::size_t>(k), static_cast<std::size_t>(l),
                                            500 + static_cast<std::uint64_t>(i));
        IsacWaveform x0 = reference_radar_waveform(static_cast<std::size_t>(n),
                                                   static_cast<std::size_t>(l), 1.0);

        WeightedDesign d = design_weighted_waveform(wrap_channels(hm), s, x0, rho, 1.0);
        cmat unscaled = d.waveform.matrix / d.power_scale;
        cmat oracle = gradient_oracle(hm, s.matrix, x0.matrix, rho);
        CHECK((unscaled - oracle).norm() < 1e-6);
    }
}

TEST_CASE("weighted objective never exceeds the endpoint objectives")
{
    cmat hm = random_complex(3, 10, 31);
    SymbolBlock s = random_qpsk_symbols(3, 16, 32);
    IsacWaveform x0 = reference_radar_waveform(10, 16, 1.0);
    ChannelSet h = wrap_channels(hm);

    cmat zf = design_weighted_waveform(h, s, x0, 1.0, 1.0).waveform.matrix;
    zf /= design_weighted_waveform(h, s, x0, 1.0, 1.0).power_scale;

    for (double rho : {0.05, 0.3, 0.5, 0.7, 0.95})
    {
        WeightedDesign d = design_weighted_waveform(h, s, x0, rho, 1.0);
        cmat x = d.waveform.matrix / d.power_scale;
        double at_min = weighted_objective(hm, s.matrix, x0.matrix, rho, x);
        CHECK(at_min <= weighted_objective(hm, s.matrix, x0.matrix, rho, x0.matrix) + 1e-9);
        CHECK(at_min <= weighted_objective(hm, s.matrix, x0.matrix, rho, zf) + 1e-9);
    }
}

TEST_CASE("power projection holds to 1e-9 relative")
{
    ChannelSet h = wrap_channels(random_complex(4, 16, 41));
    SymbolBlock s = random_qpsk_symbols(4, 32, 42);
    IsacWaveform x0 = reference_radar_waveform(16, 32, 3.0);
    for (double rho : {0.0, 0.25, 0.5, 0.9, 1.0})
    {
        IsacWaveform w = design_weighted_waveform(h, s, x0, rho, 3.0).waveform;
        double target = 32.0 * 3.0;
        CHECK(std::abs(w.matrix.squaredNorm() - target) / target < 1e-9);
    }
    IsacWaveform m = mrt_waveform(h, s, 3.0);
    CHECK(std::abs(m.matrix.squaredNorm() - 32.0 * 3.0) / (32.0 * 3.0) < 1e-9);
}

TEST_CASE("single-user MRT reaches the matched-filter SINR")
{
    ArrayGeometry g = deployment_array();
    ChannelSet h = build_channels(g, {{40.0, 0.2, 0.0}}, ChannelModel::near_field,
                                  AmplitudeModel::phase_only, 0.0, 30.0);
    SymbolBlock s = random_qpsk_symbols(1, 64, 7);
    double power = 2.5, noise = 0.3;
    IsacWaveform w = mrt_waveform(h, s, power);
    RateReport r = achievable_rates(h, w, s, noise, 4, 196);
    double expected = power * h.matrix.row(0).squaredNorm() / noise;
    CHECK(r.sinr[0] == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("near-field MRT beats the far-field-mismatched design for near-field users")
{
    ArrayGeometry g = deployment_array();
    std::vector<SourcePoint> ues = deployment_ues();
    ChannelSet truth = build_channels(g, ues, ChannelModel::near_field, AmplitudeModel::phase_only,
                                      0.0, 30.0);
    ChannelSet far = build_channels(g, ues, ChannelModel::far_field, AmplitudeModel::phase_only,
                                    0.0, 30.0);

    SymbolBlock s = random_qpsk_symbols(4, 192, 99);
    IsacWaveform near_w = mrt_waveform(truth, s, 1.0);
    IsacWaveform far_w = mrt_waveform(far, s, 1.0);

    double noise = 0.1;
    RateReport near_r = achievable_rates(truth, near_w, s, noise, 4, 196);
    RateReport far_r = achievable_rates(truth, far_w, s, noise, 4, 196);

    double near_sum = 0.0, far_sum = 0.0;
    for (std::size_t k = 0; k < 4; ++k)
    {
        near_sum += near_r.per_user_rate[k];
        far_sum += far_r.per_user_rate[k];
    }
    CHECK(near_sum > far_sum);

    double p_near = (truth.matrix * near_w.matrix).squaredNorm();
    double p_far = (truth.matrix * far_w.matrix).squaredNorm();
    CHECK(p_far / p_near < 1.0);
}

TEST_CASE("spatial nulling toward CPE directions")
{
    ArrayGeometry g = deployment_array(7.8e9, 16);

    // empty list: identity
    IsacWaveform w;
    w.total_power = 1.0;
    w.matrix = random_complex(static_cast<Eigen::Index>(g.n_antennas()), 8, 55);
    w.matrix *= std::sqrt(8.0 / w.matrix.squaredNorm());
    NullingResult same = project_null_constraints(w, {});
    CHECK((same.waveform.matrix - w.matrix).norm() == 0.0);

    // a boresight beam nulled toward boresight loses (almost) everything
    cvec bore = far_field_steering(g, 0.0, 0.0);
    IsacWaveform beam;
    beam.total_power = 1.0;
    beam.matrix = bore * random_qpsk_symbols(1, 8, 56).matrix;
    NullingResult gone = project_null_constraints(beam, {bore});
    CHECK(gone.retained_power_fraction < 1e-12);

    // two CPE directions: deep nulls, power restored
    std::vector<cvec> cpes = {far_field_steering(g, 0.5, 0.1), far_field_steering(g, -0.3, 0.0)};
    NullingResult nulled = project_null_constraints(w, cpes);
    CHECK(std::abs(nulled.waveform.matrix.squaredNorm() - 8.0) / 8.0 < 1e-9);
    for (Eigen::Index l = 0; l < nulled.waveform.matrix.cols(); ++l)
        for (const cvec &a : cpes)
        {
            double leak = std::norm(a.dot(nulled.waveform.matrix.col(l)));
            CHECK(leak < 1e-17 * nulled.waveform.matrix.col(l).squaredNorm());
        }

    // as many constraints as antennas: no null space left
    std::vector<cvec> all;
    for (std::size_t i = 0; i < g.n_antennas(); ++i)
        all.push_back(far_field_steering(g, -1.2 + 0.01 * static_cast<double>(i), 0.0));
    CHECK_THROWS_AS(project_null_constraints(w, all), std::invalid_argument);
}

TEST_CASE("pilot estimation: noiseless limit, determinism, pilot-length guard")
{
    ArrayGeometry g = deployment_array(7.8e9, 10);
    ChannelSet h = build_channels(g, deployment_ues(), ChannelModel::near_field,
                                  AmplitudeModel::phase_only, 0.0, 30.0);

    EstimatedChannels clean = estimate_channels_ls(h, 4, 200.0, 17);
    CHECK((clean.matrix - h.matrix).norm() < 1e-8);

    EstimatedChannels a = estimate_channels_ls(h, 8, 0.0, 17);
    EstimatedChannels b = estimate_channels_ls(h, 8, 0.0, 17);
    CHECK((a.matrix - b.matrix).norm() == 0.0);
    EstimatedChannels c = estimate_channels_ls(h, 8, 0.0, 18);
    CHECK((a.matrix - c.matrix).norm() > 0.0);

    CHECK_THROWS_AS(estimate_channels_ls(h, 3, 0.0, 17), std::invalid_argument);
}

TEST_CASE("pilot estimation error variance matches 1/(tau_p * snr)")
{
    ArrayGeometry g = deployment_array(7.8e9, 8); // 64 antennas keeps this quick
    ChannelSet h = build_channels(g, deployment_ues(), ChannelModel::near_field,
                                  AmplitudeModel::phase_only, 0.0, 30.0);

    const std::size_t tau_p = 4;
    const double snr_db = 0.0; // snr = 1 -> per-entry MSE 1/tau_p
    double acc = 0.0;
    const int reps = 10000;
    for (int i = 0; i < reps; ++i)
    {
        EstimatedChannels est = estimate_channels_ls(h, tau_p, snr_db, 1000 + static_cast<std::uint64_t>(i));
        acc += (est.matrix - h.matrix).squaredNorm() / static_cast<double>(h.matrix.size());
    }
    double mse = acc / reps;
    CHECK(mse == doctest::Approx(1.0 / static_cast<double>(tau_p)).epsilon(0.05));
}

TEST_CASE("rate report: prelog arithmetic, identity, cap flag")
{
    ChannelSet h = wrap_channels(random_complex(4, 12, 61));
    SymbolBlock s = random_qpsk_symbols(4, 24, 62);
    IsacWaveform x0 = reference_radar_waveform(12, 24, 1.0);
    IsacWaveform w = design_weighted_waveform(h, s, x0, 0.6, 1.0).waveform;

    RateReport r = achievable_rates(h, w, s, 0.5, 4, 196);
    CHECK(r.prelog == doctest::Approx(1.0 - 4.0 / 196.0).epsilon(1e-15));
    for (std::size_t k = 0; k < 4; ++k)
        CHECK(r.per_user_rate[k] ==
              doctest::Approx(r.prelog * std::log2(1.0 + r.sinr[k])).epsilon(1e-12));

    // zero-forcing design, zero noise: interference-free sentinel
    IsacWaveform zf = design_weighted_waveform(h, s, x0, 1.0, 1.0).waveform;
    RateReport capped = achievable_rates(h, zf, s, 0.0, 4, 196);
    CHECK(capped.capped);

    CHECK_THROWS_AS(achievable_rates(h, w, s, 0.5, 200, 196), std::invalid_argument);
}

TEST_CASE("QPSK blocks: unit average power and per-seed determinism")
{
    SymbolBlock s = random_qpsk_symbols(4, 128, 5);
    double avg = s.matrix.squaredNorm() / static_cast<double>(s.matrix.size());
    CHECK(avg == doctest::Approx(1.0).epsilon(1e-12)); // QPSK is exactly unit power
    SymbolBlock again = random_qpsk_symbols(4, 128, 5);
    CHECK((s.matrix - again.matrix).norm() == 0.0);
    CHECK((random_qpsk_symbols(4, 128, 6).matrix - s.matrix).norm() > 0.0);
}
