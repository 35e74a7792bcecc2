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

#include "elaa/waveform.hpp"

#include <cmath>
#include <stdexcept>

#include "elaa/rng.hpp"

namespace elaa
{

static constexpr double pi = 3.141592653589793238462643;

SymbolBlock random_qpsk_symbols(std::size_t n_users, std::size_t frame_length, std::uint64_t seed)
{
    if (n_users < 1 || frame_length < 1)
        throw std::invalid_argument("random_qpsk_symbols: dimensions must be positive");
    gaussian_source rng(seed);
    const double s = std::sqrt(0.5);
    SymbolBlock block;
    block.matrix.resize(static_cast<Eigen::Index>(n_users), static_cast<Eigen::Index>(frame_length));
    for (Eigen::Index k = 0; k < block.matrix.rows(); ++k)
        for (Eigen::Index l = 0; l < block.matrix.cols(); ++l)
        {
            double u = rng.uniform01();
            int q = static_cast<int>(u * 4.0) & 3;
            double re = (q & 1) ? -s : s;
            double im = (q & 2) ? -s : s;
            block.matrix(k, l) = {re, im};
        }
    return block;
}

static void project_power(cmat &x, double power)
{
    double target = power * static_cast<double>(x.cols());
    double cur = x.squaredNorm();
    if (cur <= 0.0)
        throw std::runtime_error("power projection: zero-energy waveform");
    x *= std::sqrt(target / cur);
}

IsacWaveform reference_radar_waveform(std::size_t n_antennas, std::size_t frame_length,
                                      double total_power)
{
    if (n_antennas < 1)
        throw std::invalid_argument("reference_radar_waveform: need at least one antenna");
    if (frame_length < n_antennas)
        throw std::invalid_argument("reference_radar_waveform: frame shorter than antenna count "
                                    "(orthogonal rows infeasible)");

    const auto l = static_cast<Eigen::Index>(frame_length);
    const auto n = static_cast<Eigen::Index>(n_antennas);

    // Zadoff-Chu base sequence, root 1; perfect periodic autocorrelation
    // makes distinct cyclic shifts exactly orthogonal.
    cvec base(l);
    const double lf = static_cast<double>(frame_length);
    const bool odd = (frame_length % 2) != 0;
    for (Eigen::Index i = 0; i < l; ++i)
    {
        double m = static_cast<double>(i);
        double ph = -pi * m * (odd ? m + 1.0 : m) / lf;
        base(i) = {std::cos(ph), std::sin(ph)};
    }

    IsacWaveform x0;
    x0.total_power = total_power;
    x0.matrix.resize(n, l);
    double mag = std::sqrt(total_power / static_cast<double>(n_antennas));
    for (Eigen::Index row = 0; row < n; ++row)
        for (Eigen::Index i = 0; i < l; ++i)
            x0.matrix(row, i) = mag * base((i + row) % l);
    return x0;
}

IsacWaveform chirp_reference_waveform(std::size_t n_antennas, std::size_t frame_length,
                                      double total_power, std::size_t side_count)
{
    if (n_antennas < 1 || frame_length < 1)
        throw std::invalid_argument("chirp_reference_waveform: dimensions must be positive");
    if (frame_length > n_antennas)
        throw std::invalid_argument("chirp_reference_waveform: frame longer than antenna count "
                                    "(use the row-orthogonal reference)");

    const auto l = static_cast<Eigen::Index>(frame_length);
    const auto n = static_cast<Eigen::Index>(n_antennas);
    const double lf = static_cast<double>(frame_length);
    const bool odd = (frame_length % 2) != 0;
    const bool planar = side_count > 0 && side_count * side_count == n_antennas;

    IsacWaveform x0;
    x0.total_power = total_power;
    x0.matrix.resize(n, l);
    double mag = std::sqrt(total_power / static_cast<double>(n_antennas));
    for (Eigen::Index row = 0; row < n; ++row)
        for (Eigen::Index i = 0; i < l; ++i)
        {
            double m = static_cast<double>(i);
            double ph = -pi * m * (odd ? m + 1.0 : m) / lf;
            if (planar)
            {
                // separable 2D spatial-frequency bins on the UPA grid:
                // column l probes (bx, bz) = (l mod s, l / s), sweeping
                // every azimuth frequency before each elevation step, so
                // the angular coverage barely depends on the frame length
                const auto s = static_cast<Eigen::Index>(side_count);
                double ix = static_cast<double>(row / s), iz = static_cast<double>(row % s);
                double bx = static_cast<double>(i % s), bz = static_cast<double>(i / s);
                ph -= 2.0 * pi * (ix * bx + iz * bz) / static_cast<double>(side_count);
            }
            else
                ph -= 2.0 * pi * static_cast<double>(row) * m / static_cast<double>(n_antennas);
            x0.matrix(row, i) = mag * std::complex<double>(std::cos(ph), std::sin(ph));
        }
    return x0;
}

WeightedDesign design_weighted_waveform(const ChannelSet &channels, const SymbolBlock &symbols,
                                        const IsacWaveform &reference, double rho, double power)
{
    const cmat &h = channels.matrix;
    const cmat &s = symbols.matrix;
    const cmat &x0 = reference.matrix;
    const Eigen::Index k = h.rows(), n = h.cols(), l = s.cols();
    if (k > n)
        throw std::invalid_argument("design_weighted_waveform: more users than antennas");
    if (x0.rows() != n || x0.cols() != l || s.rows() != k)
        throw std::invalid_argument("design_weighted_waveform: dimension mismatch");
    if (rho < 0.0 || rho > 1.0)
        throw std::invalid_argument("design_weighted_waveform: rho must lie in [0, 1]");

    WeightedDesign out;
    cmat x;
    if (rho == 0.0)
        x = x0;
    else if (rho == 1.0)
    {
        Eigen::CompleteOrthogonalDecomposition<cmat> cod(h);
        x = cod.solve(s); // minimum-norm least squares
        out.rank_deficient = cod.rank() < k;
    }
    else
    {
        // Woodbury form of (rho*H^H*H + (1-rho)*I)^-1 (rho*H^H*S + (1-rho)*X0)
        // via the K x K system ((1-rho)/rho*I + H*H^H).
        cmat b = rho * (h.adjoint() * s) + (1.0 - rho) * x0;
        cmat m = h * h.adjoint();
        m.diagonal().array() += (1.0 - rho) / rho;
        cmat hb = h * b;
        cmat y = m.ldlt().solve(hb);
        x = (b - h.adjoint() * y) / (1.0 - rho);
    }

    out.mui_energy = (h * x - s).squaredNorm();
    out.waveform.total_power = power;
    double pre = x.squaredNorm();
    out.waveform.matrix = std::move(x);
    project_power(out.waveform.matrix, power);
    out.power_scale = std::sqrt(out.waveform.matrix.squaredNorm() / pre);
    return out;
}

IsacWaveform mrt_waveform(const ChannelSet &channels_for_design, const SymbolBlock &symbols,
                          double power)
{
    const cmat &h = channels_for_design.matrix;
    const cmat &s = symbols.matrix;
    if (h.rows() != s.rows())
        throw std::invalid_argument("mrt_waveform: user-count mismatch");

    cmat x = cmat::Zero(h.cols(), s.cols());
    for (Eigen::Index k = 0; k < h.rows(); ++k)
    {
        double norm = h.row(k).norm();
        if (norm <= 0.0)
            throw std::invalid_argument("mrt_waveform: degenerate (zero-norm) channel row");
        x += (h.row(k).adjoint() / norm) * s.row(k);
    }
    IsacWaveform wf;
    wf.total_power = power;
    wf.matrix = std::move(x);
    project_power(wf.matrix, power);
    return wf;
}

NullingResult project_null_constraints(const IsacWaveform &waveform,
                                       const std::vector<cvec> &cpe_steering)
{
    NullingResult out;
    out.waveform = waveform;
    if (cpe_steering.empty())
        return out;

    const Eigen::Index n = waveform.matrix.rows();
    if (static_cast<Eigen::Index>(cpe_steering.size()) >= n)
        throw std::invalid_argument("project_null_constraints: null-space dimension is zero");

    cmat a(n, static_cast<Eigen::Index>(cpe_steering.size()));
    for (std::size_t j = 0; j < cpe_steering.size(); ++j)
    {
        if (cpe_steering[j].size() != n)
            throw std::invalid_argument("project_null_constraints: steering-vector length mismatch");
        a.col(static_cast<Eigen::Index>(j)) = cpe_steering[j];
    }
    Eigen::HouseholderQR<cmat> qr(a);
    cmat q = qr.householderQ() * cmat::Identity(n, a.cols());

    double before = waveform.matrix.squaredNorm();
    out.waveform.matrix -= q * (q.adjoint() * waveform.matrix);
    double after = out.waveform.matrix.squaredNorm();
    out.retained_power_fraction = (before > 0.0) ? after / before : 0.0;
    if (out.retained_power_fraction > 1e-12)
        project_power(out.waveform.matrix, waveform.total_power);
    return out;
}

EstimatedChannels estimate_channels_ls(const ChannelSet &true_channels, std::size_t pilot_length,
                                       double pilot_snr_db, std::uint64_t seed)
{
    const cmat &h = true_channels.matrix;
    const auto k = static_cast<std::size_t>(h.rows());
    if (pilot_length < k)
        throw std::invalid_argument("estimate_channels_ls: pilot length shorter than user count "
                                    "(orthogonal pilots infeasible)");

    const auto tp = static_cast<Eigen::Index>(pilot_length);
    const double snr = std::pow(10.0, pilot_snr_db / 10.0);

    // Orthogonal DFT pilots, phi^H*phi = tau_p * I over the first K columns
    cmat phi(tp, static_cast<Eigen::Index>(k));
    for (Eigen::Index t = 0; t < tp; ++t)
        for (Eigen::Index u = 0; u < static_cast<Eigen::Index>(k); ++u)
        {
            double ph = -2.0 * pi * static_cast<double>(t) * static_cast<double>(u) /
                        static_cast<double>(pilot_length);
            phi(t, u) = {std::cos(ph), std::sin(ph)};
        }

    // Uplink receive block Y = sqrt(P_p) * H^T * phi^T + W, unit noise power
    gaussian_source rng(seed);
    const double root_p = std::sqrt(snr);
    cmat y = root_p * h.transpose() * phi.transpose(); // N x tau_p
    for (Eigen::Index r = 0; r < y.rows(); ++r)
        for (Eigen::Index c = 0; c < y.cols(); ++c)
            y(r, c) += rng.complex_normal(1.0);

    EstimatedChannels est;
    est.pilot_length = pilot_length;
    est.pilot_snr_db = pilot_snr_db;
    est.matrix = (y * phi.conjugate() / (root_p * static_cast<double>(pilot_length))).transpose();
    return est;
}

RateReport achievable_rates(const ChannelSet &true_channels, const IsacWaveform &waveform,
                            const SymbolBlock &symbols, double noise_power, std::size_t tau_p,
                            std::size_t tau_c)
{
    const cmat &h = true_channels.matrix;
    const cmat &s = symbols.matrix;
    const cmat &x = waveform.matrix;
    if (h.cols() != x.rows() || s.cols() != x.cols() || s.rows() != h.rows())
        throw std::invalid_argument("achievable_rates: dimension mismatch");
    if (tau_p >= tau_c)
        throw std::invalid_argument("achievable_rates: pilot length must be below the coherence interval");

    const double lf = static_cast<double>(x.cols());
    constexpr double sinr_cap = 1e15;

    RateReport report;
    report.prelog = 1.0 - static_cast<double>(tau_p) / static_cast<double>(tau_c);
    cmat received = h * x; // K x L

    for (Eigen::Index k = 0; k < h.rows(); ++k)
    {
        std::complex<double> alpha = s.row(k).conjugate().cwiseProduct(received.row(k)).sum() /
                                     s.row(k).squaredNorm();
        double signal = std::norm(alpha) * s.row(k).squaredNorm() / lf;
        double residual = (received.row(k) - alpha * s.row(k)).squaredNorm() / lf;
        double denom = residual + noise_power;
        double sinr;
        if (denom <= 0.0)
        {
            sinr = sinr_cap;
            report.capped = true;
        }
        else
        {
            sinr = signal / denom;
            if (sinr > sinr_cap)
            {
                sinr = sinr_cap;
                report.capped = true;
            }
        }
        report.sinr.push_back(sinr);
        report.per_user_rate.push_back(report.prelog * std::log2(1.0 + sinr));
    }
    return report;
}

} // namespace elaa
