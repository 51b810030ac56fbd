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

#ifndef TWOPATH_MEASUREMENT_H
#define TWOPATH_MEASUREMENT_H

#include <cstdint>
#include <string_view>

#include "twopath/interferometer.h"
#include "twopath/qalgebra.h"

namespace twopath {

/// Counter-based SplitMix64 stream.
///
/// Draw k (0-based) is mix64(seed + (k + 1) * 0x9E3779B97F4A7C15), with the
/// SplitMix64 finalizer as mix64. Identical seeds give identical sequences, and
/// any draw can be computed directly from (seed, k).
class RandomStream {
   public:
    explicit RandomStream(uint64_t seed) : seed_(seed) {
    }

    /// Independent stream for parallel worker `index`.
    static RandomStream substream(uint64_t seed, uint64_t index);

    uint64_t next_u64();
    /// Uniform in [0, 1) with 53 random bits.
    double next_uniform();

    uint64_t seed() const {
        return seed_;
    }
    uint64_t counter() const {
        return counter_;
    }

    static uint64_t mix64(uint64_t z);

   private:
    uint64_t seed_;
    uint64_t counter_ = 0;
};

struct MeasurementRecord {
    double outcome = 0;
    StateVector post_state = StateVector::up();
};

/// Born-rule projective measurement of a +/-1 observable. Consumes exactly one
/// uniform draw. Throws ValidationError for degenerate observables or when the
/// eigenvalues are not +1 and -1.
MeasurementRecord measure(const Observable &obs, const StateVector &state, RandomStream &rng);

/// Same, with the eigensystem precomputed by the caller.
MeasurementRecord measure(const Eigensystem &eig, const StateVector &state, RandomStream &rng);

enum class MeasurementOrder {
    PathThenWave,
    WaveThenPath,
};

/// "pw" / "wp"
std::string_view order_token(MeasurementOrder order);

struct OutcomeCounts {
    uint64_t n_plus = 0;
    uint64_t n_minus = 0;

    uint64_t total() const {
        return n_plus + n_minus;
    }
};

struct SequentialStats {
    MeasurementOrder order = MeasurementOrder::PathThenWave;
    uint64_t shots = 0;
    double first_mean = 0;
    /// Unbiased sample variance; zero when shots == 1.
    double first_variance = 0;
    double second_mean = 0;
    double second_variance = 0;
    OutcomeCounts first_counts;
    OutcomeCounts second_counts;
};

/// Prepares the balanced state |phi> each shot, measures the first observable
/// of `order`, then the second on the post-measurement state.
/// Throws ValidationError when shots == 0.
SequentialStats sequential_experiment(
    MeasurementOrder order, PhaseAngle phi, PhaseAngle phi0, uint64_t shots, RandomStream &rng);

/// Partitions `shots` across `workers` threads, worker i drawing from
/// RandomStream::substream(seed, i), and pools the counts. Deterministic for a
/// given (seed, workers) pair, but not equal to the single-stream result.
SequentialStats sequential_experiment_parallel(
    MeasurementOrder order, PhaseAngle phi, PhaseAngle phi0, uint64_t shots, uint64_t seed, unsigned workers);

struct UniformityResult {
    double chi2 = 0;
    bool pass = false;
};

/// One-degree-of-freedom chi-square critical value at 1% significance.
inline constexpr double kChi2Critical1Dof1Percent = 6.635;

/// Pearson chi-square of two counts against a 50/50 split. Throws on zero total.
UniformityResult uniformity_test(OutcomeCounts counts);

/// Mean and unbiased variance of +/-1 outcomes from their counts.
struct PlusMinusMoments {
    double mean = 0;
    double variance = 0;
};
PlusMinusMoments moments_from_counts(OutcomeCounts counts);

/// Standard error of the unbiased sample variance of n draws of a +/-1
/// variable with mean mu: sqrt(4 mu^2 s2 / n + 2 s2^2 / (n (n - 1))), s2 = 1 - mu^2.
double variance_standard_error(double true_mean, uint64_t shots);

/// Standard error of the sample mean, sqrt((1 - mu^2) / n).
double mean_standard_error(double true_mean, uint64_t shots);

}  // namespace twopath

#endif
