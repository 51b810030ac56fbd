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

// End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "oracles.h"
#include "test_util.h"
#include "twopath/twopath.h"
#include "verify.h"

using namespace twopath;
using namespace twopath::testing;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double s2 = std::numbers::sqrt2 / 2;

struct Outcome {
    bool pass;
    std::string detail;
};

/// Running maximum of |residual| against a fixed tolerance.
struct Worst {
    double tolerance;
    double value = 0;
    void add(double r) {
        value = std::max(value, std::isnan(r) ? INFINITY : std::abs(r));
    }
    bool ok() const {
        return value < tolerance;
    }
    std::string str(const char *label) const {
        std::ostringstream s;
        s << label << " max " << value << " (tol " << tolerance << ")";
        return s.str();
    }
};

// 1. <phi|W(phi0)|phi> = cos(phi - phi0) on 1000 phases x 16 offsets.
Outcome interference_law() {
    auto g = test_rng(101);
    Worst w{1e-12};
    std::vector<PhaseAngle> grid = linspace(-pi, pi, 1000);
    for (int k = 0; k < 16; k++) {
        double phi0 = uniform_angle(g);
        for (const ScanPoint &pt : interference_scan(PhaseAngle(phi0), grid).points) {
            w.add(pt.w_expect - std::cos(pt.phi.radians() - phi0));
        }
    }
    return {w.ok(), w.str("|<W> - cos|")};
}

// 2. All four mutual expectation values vanish for 10^4 offsets.
Outcome complementarity_residuals() {
    auto g = test_rng(102);
    Worst w{1e-12};
    for (int k = 0; k < 10000; k++) {
        w.add(check_mutual_zero_expectation(path_operator(), derive_wave_eigenbasis(PhaseAngle(uniform_angle(g))))
                  .max_abs());
    }
    return {w.ok(), w.str("residual")};
}

// 3. Derived eigenbasis equals the closed form as rays and assembles to
//    cos(phi0) sigma_x + sin(phi0) sigma_y.
Outcome derived_eigenbasis() {
    auto g = test_rng(103);
    Worst op{1e-12};
    int ray_mismatches = 0;
    for (int k = 0; k < 10000; k++) {
        double phi0 = uniform_angle(g);
        EigenBasis b = derive_wave_eigenbasis(PhaseAngle(phi0));
        StateVector plus(std::polar(s2, -phi0 / 2), std::polar(s2, phi0 / 2));
        StateVector minus(-std::polar(s2, -phi0 / 2), std::polar(s2, phi0 / 2));
        if (!same_ray(b.plus(), plus) || !same_ray(b.minus(), minus)) {
            ray_mismatches++;
        }
        Matrix2 closed = std::cos(phi0) * Observable::sigma_x().matrix() + std::sin(phi0) * Observable::sigma_y().matrix();
        op.add(max_abs_diff(observable_from_eigensystem(b).matrix(), closed));
    }
    return {op.ok() && ray_mismatches == 0,
            op.str("|W - closed form|") + ", ray mismatches " + std::to_string(ray_mismatches)};
}

// 4. Delta P = 1, Delta W = |sin|, saturation; Robertson on 10^5 random triples.
Outcome uncertainty_relation() {
    auto g = test_rng(104);
    Worst dp{1e-12}, dw{1e-12}, sat{1e-10};
    for (int k = 0; k < 10000; k++) {
        double phi = uniform_angle(g);
        double phi0 = uniform_angle(g);
        UncertaintyReport r = duality_report(PhaseAngle(phi), PhaseAngle(phi0));
        dp.add(r.delta_p - 1);
        dw.add(r.delta_w - std::abs(std::sin(phi - phi0)));
        sat.add(r.product - r.bound);
    }
    int violations = 0;
    for (int k = 0; k < 100000; k++) {
        Observable a = to_observable(oracle::random_hermitian(g));
        Observable b = to_observable(oracle::random_hermitian(g));
        StateVector s = to_state(oracle::random_state(g));
        double bound = robertson_bound(a, b, s);
        if (variance(a, s) * variance(b, s) < bound * bound - 1e-10) {
            violations++;
        }
    }
    return {dp.ok() && dw.ok() && sat.ok() && violations == 0,
            dp.str("|dP - 1|") + ", " + dw.str("|dW - |sin||") + ", " + sat.str("|product - bound|") +
                ", Robertson violations " + std::to_string(violations) + "/100000"};
}

// 5. Bound and Delta W vanish at phi = phi0 + k pi.
Outcome vanishing_bound() {
    auto g = test_rng(105);
    Worst w{1e-12};
    for (int k = 0; k < 1000; k++) {
        double phi0 = uniform_angle(g);
        for (int turns = -4; turns <= 4; turns++) {
            UncertaintyReport r = duality_report(PhaseAngle(phi0 + turns * pi), PhaseAngle(phi0));
            w.add(r.bound);
            w.add(r.delta_w);
        }
    }
    return {w.ok(), w.str("bound, dW")};
}

// 6. Central finite difference (h = 1e-5) of the fringe vs Delta W, 64 points.
Outcome sensitivity_coincidence() {
    constexpr double h = 1e-5;
    auto g = test_rng(106);
    Worst w{1e-6};
    for (int k = 0; k < 4; k++) {
        PhaseAngle phi0(uniform_angle(g));
        Observable wave = wave_operator(phi0);
        for (PhaseAngle phi : linspace(-pi, pi, 64)) {
            double up = expectation(wave, balanced_state(PhaseAngle(phi.radians() + h)));
            double down = expectation(wave, balanced_state(PhaseAngle(phi.radians() - h)));
            w.add(std::abs((up - down) / (2 * h)) - duality_report(phi, phi0).delta_w);
        }
    }
    return {w.ok(), w.str("|slope - dW|")};
}

// 7. B^dagger sigma_z B = sigma_x; B Phi(phi) B |psi_-> gives a unit-visibility fringe.
Outcome beam_splitter_identity() {
    Worst id{1e-12};
    id.add(max_abs_diff(beam_splitter().conjugate(path_operator()).matrix(), Observable::sigma_x().matrix()));
    double hi = -INFINITY, lo = INFINITY;
    Worst shape{1e-12};
    for (PhaseAngle phi : linspace(-pi, pi, 10001)) {
        double z = expectation(path_operator(), mach_zehnder_output(phi));
        hi = std::max(hi, z);
        lo = std::min(lo, z);
        shape.add(z - std::cos(phi.radians()));
    }
    double visibility = (hi - lo) / 2;
    bool ok = id.ok() && shape.ok() && std::abs(visibility - 1) < 1e-9;
    std::ostringstream s;
    s << id.str("|B^+ Z B - X|") << ", visibility " << visibility << ", " << shape.str("|<Z> - cos|");
    return {ok, s.str()};
}

// 8. 10^6 shots, both orders, 16 random (phi, phi0): chi-square uniformity of
//    the second outcome and first-variance within 4 standard errors.
Outcome monte_carlo_randomization() {
    constexpr uint64_t shots = 1000000;
    constexpr uint64_t seed = 20260101;
    auto g = test_rng(108);
    RandomStream rng(seed);
    int chi2_failures = 0, variance_failures = 0;
    double worst_chi2 = 0, worst_z = 0;
    std::ostringstream rejected;
    for (int k = 0; k < 16; k++) {
        double phi = uniform_angle(g);
        double phi0 = uniform_angle(g);
        for (MeasurementOrder order : {MeasurementOrder::PathThenWave, MeasurementOrder::WaveThenPath}) {
            SequentialStats s = sequential_experiment(order, PhaseAngle(phi), PhaseAngle(phi0), shots, rng);
            UniformityResult u = uniformity_test(s.second_counts);
            chi2_failures += u.pass ? 0 : 1;
            worst_chi2 = std::max(worst_chi2, u.chi2);
            double mu = order == MeasurementOrder::PathThenWave ? 0.0 : std::cos(phi - phi0);
            double se = variance_standard_error(mu, shots);
            double dev = std::abs(s.first_variance - (1 - mu * mu));
            if (!u.pass || dev > 4 * se) {
                rejected << " [" << order_token(order) << " phi=" << phi << " phi0=" << phi0 << " chi2=" << u.chi2
                         << " z=" << dev / se << "]";
            }
            variance_failures += dev <= 4 * se ? 0 : 1;
            worst_z = std::max(worst_z, dev / se);
        }
    }

    // Determinism: same seed, same statistics bit for bit.
    auto once = [&] {
        RandomStream r(seed);
        return sequential_experiment(MeasurementOrder::WaveThenPath, PhaseAngle(0.7), PhaseAngle(-1.2), shots, r);
    };
    SequentialStats a = once();
    SequentialStats b = once();
    bool deterministic = a.first_counts.n_plus == b.first_counts.n_plus &&
                         a.second_counts.n_plus == b.second_counts.n_plus && a.first_variance == b.first_variance &&
                         a.second_mean == b.second_mean;

    std::ostringstream s;
    s << "chi2 failures " << chi2_failures << "/32 (max chi2 " << worst_chi2 << "), variance failures "
      << variance_failures << "/32 (max " << worst_z << " SE), deterministic " << (deterministic ? "yes" : "no") << rejected.str();
    return {chi2_failures == 0 && variance_failures == 0 && deterministic, s.str()};
}

// 9. The verify command exits nonzero and names the broken invariant.
Outcome fault_detection() {
    auto run = [](std::vector<std::string> args) {
        std::ostringstream out, err;
        int code = tools::run_cli(args, out, err);
        return std::pair{code, out.str()};
    };
    auto [clean_code, clean_out] = run({"verify"});
    auto [bs_code, bs_out] = run({"verify", "--inject-fault", "beam-splitter"});
    auto [basis_code, basis_out] = run({"verify", "--inject-fault", "basis"});
    bool ok = clean_code == 0 && bs_code == 1 && basis_code == 1 &&
              bs_out.find("FAIL  B^dagger sigma_z B = sigma_x") != std::string::npos &&
              basis_out.find("FAIL  Eq.3/Eq.4 complementarity") != std::string::npos;
    std::ostringstream s;
    s << "clean exit " << clean_code << ", perturbed splitter exit " << bs_code << ", non-complementary basis exit "
      << basis_code;
    return {ok, s.str()};
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria{
        {"AC1 interference law <W> = cos(phi - phi0)", interference_law},
        {"AC2 complementarity residuals vanish", complementarity_residuals},
        {"AC3 derived eigenbasis and wave operator", derived_eigenbasis},
        {"AC4 uncertainty relation and saturation", uncertainty_relation},
        {"AC5 vanishing bound at eigenstates", vanishing_bound},
        {"AC6 sensitivity coincides with Delta W", sensitivity_coincidence},
        {"AC7 beam-splitter identity and pipeline fringe", beam_splitter_identity},
        {"AC8 Monte Carlo randomization", monte_carlo_randomization},
        {"AC9 fault detection in verify", fault_detection},
    };
    int failed = 0;
    for (const auto &c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
