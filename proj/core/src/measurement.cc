// Copyright 2026 The twopath Authors
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

#include "twopath/measurement.h"

#include <cmath>
#include <thread>
#include <vector>

namespace twopath {

namespace {

constexpr uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

void require_plus_minus_one(const Eigensystem &eig) {
    require(!eig.degenerate(), "measure: observable must be non-degenerate");
    require(std::abs(eig.plus_value - 1) < Tolerances::herm && std::abs(eig.minus_value + 1) < Tolerances::herm,
            "measure: observable eigenvalues must be +1 and -1");
}

}  // namespace

// ---------------------------------------------------------------------------
// RandomStream

uint64_t RandomStream::mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

RandomStream RandomStream::substream(uint64_t seed, uint64_t index) {
    return RandomStream(mix64(seed ^ mix64(index + 1)));
}

uint64_t RandomStream::next_u64() {
    counter_++;
    return mix64(seed_ + counter_ * kGoldenGamma);
}

double RandomStream::next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

// ---------------------------------------------------------------------------
// Projective measurement

MeasurementRecord measure(const Eigensystem &eig, const StateVector &state, RandomStream &rng) {
    require_plus_minus_one(eig);
    double p_plus = std::norm(inner(eig.plus, state));
    if (rng.next_uniform() < p_plus) {
        return {+1, eig.plus};
    }
    return {-1, eig.minus};
}

MeasurementRecord measure(const Observable &obs, const StateVector &state, RandomStream &rng) {
    return measure(eigensystem(obs), state, rng);
}

std::string_view order_token(MeasurementOrder order) {
    return order == MeasurementOrder::PathThenWave ? "pw" : "wp";
}

PlusMinusMoments moments_from_counts(OutcomeCounts counts) {
    uint64_t n = counts.total();
    if (n == 0) {
        return {};
    }
    double dn = static_cast<double>(n);
    double mean = (static_cast<double>(counts.n_plus) - static_cast<double>(counts.n_minus)) / dn;
    if (n == 1) {
        return {mean, 0};
    }
    // Every outcome squares to one, so sum (x - mean)^2 = n (1 - mean^2).
    return {mean, dn * (1 - mean * mean) / (dn - 1)};
}

namespace {

SequentialStats stats_from_counts(MeasurementOrder order, OutcomeCounts first, OutcomeCounts second) {
    SequentialStats s;
    s.order = order;
    s.shots = first.total();
    s.first_counts = first;
    s.second_counts = second;
    PlusMinusMoments m1 = moments_from_counts(first);
    PlusMinusMoments m2 = moments_from_counts(second);
    s.first_mean = m1.mean;
    s.first_variance = m1.variance;
    s.second_mean = m2.mean;
    s.second_variance = m2.variance;
    return s;
}

void run_shots(const Eigensystem &first,
               const Eigensystem &second,
               const StateVector &prepared,
               uint64_t shots,
               RandomStream &rng,
               OutcomeCounts &first_counts,
               OutcomeCounts &second_counts) {
    for (uint64_t k = 0; k < shots; k++) {
        MeasurementRecord a = measure(first, prepared, rng);
        MeasurementRecord b = measure(second, a.post_state, rng);
        (a.outcome > 0 ? first_counts.n_plus : first_counts.n_minus)++;
        (b.outcome > 0 ? second_counts.n_plus : second_counts.n_minus)++;
    }
}

struct OrderedPair {
    Eigensystem first;
    Eigensystem second;
};

OrderedPair ordered_observables(MeasurementOrder order, PhaseAngle phi0) {
    Eigensystem p = eigensystem(path_operator());
    Eigensystem w = eigensystem(wave_operator(phi0));
    require_plus_minus_one(p);
    require_plus_minus_one(w);
    if (order == MeasurementOrder::PathThenWave) {
        return {p, w};
    }
    return {w, p};
}

}  // namespace

SequentialStats sequential_experiment(
    MeasurementOrder order, PhaseAngle phi, PhaseAngle phi0, uint64_t shots, RandomStream &rng) {
    require(shots >= 1, "sequential_experiment: shots must be >= 1");
    OrderedPair obs = ordered_observables(order, phi0);
    StateVector prepared = balanced_state(phi);
    OutcomeCounts first;
    OutcomeCounts second;
    run_shots(obs.first, obs.second, prepared, shots, rng, first, second);
    return stats_from_counts(order, first, second);
}

SequentialStats sequential_experiment_parallel(
    MeasurementOrder order, PhaseAngle phi, PhaseAngle phi0, uint64_t shots, uint64_t seed, unsigned workers) {
    require(shots >= 1, "sequential_experiment: shots must be >= 1");
    require(workers >= 1, "sequential_experiment_parallel: workers must be >= 1");
    OrderedPair obs = ordered_observables(order, phi0);
    StateVector prepared = balanced_state(phi);

    std::vector<OutcomeCounts> first(workers);
    std::vector<OutcomeCounts> second(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned i = 0; i < workers; i++) {
        uint64_t share = shots / workers + (i < shots % workers ? 1 : 0);
        threads.emplace_back([&, i, share] {
            RandomStream rng = RandomStream::substream(seed, i);
            run_shots(obs.first, obs.second, prepared, share, rng, first[i], second[i]);
        });
    }
    for (auto &t : threads) {
        t.join();
    }

    OutcomeCounts first_total;
    OutcomeCounts second_total;
    for (unsigned i = 0; i < workers; i++) {
        first_total.n_plus += first[i].n_plus;
        first_total.n_minus += first[i].n_minus;
        second_total.n_plus += second[i].n_plus;
        second_total.n_minus += second[i].n_minus;
    }
    return stats_from_counts(order, first_total, second_total);
}

UniformityResult uniformity_test(OutcomeCounts counts) {
    require(counts.total() > 0, "uniformity_test: total count must be > 0");
    double expected = static_cast<double>(counts.total()) / 2;
    double d_plus = static_cast<double>(counts.n_plus) - expected;
    double d_minus = static_cast<double>(counts.n_minus) - expected;
    double chi2 = (d_plus * d_plus + d_minus * d_minus) / expected;
    return {chi2, chi2 < kChi2Critical1Dof1Percent};
}

double variance_standard_error(double true_mean, uint64_t shots) {
    require(shots >= 2, "variance_standard_error: needs at least two shots");
    double n = static_cast<double>(shots);
    double s2 = 1 - true_mean * true_mean;
    return std::sqrt(4 * true_mean * true_mean * s2 / n + 2 * s2 * s2 / (n * (n - 1)));
}

double mean_standard_error(double true_mean, uint64_t shots) {
    require(shots >= 1, "mean_standard_error: needs at least one shot");
    return std::sqrt((1 - true_mean * true_mean) / static_cast<double>(shots));
}

}  // namespace twopath
