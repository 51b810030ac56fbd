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

#include "verify.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>

#include <fmt/format.h>

#include "twopath/twopath.h"

namespace twopath::tools {

namespace {

constexpr double pi = std::numbers::pi;
constexpr int kAngleSamples = 256;
constexpr int kRandomTriples = 10000;

double uniform(RandomStream &rng, double lo, double hi) {
    return lo + (hi - lo) * rng.next_uniform();
}

StateVector random_state(RandomStream &rng) {
    return StateVector::normalized(Complex(uniform(rng, -1, 1), uniform(rng, -1, 1)),
                                   Complex(uniform(rng, -1, 1), uniform(rng, -1, 1)));
}

Observable random_hermitian(RandomStream &rng) {
    return reconstruct({uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1)});
}

UnitaryGate splitter_for(const VerifyOptions &options) {
    if (options.fault == InjectedFault::BeamSplitter) {
        double t = pi / 4 + 0.05;
        return UnitaryGate({std::cos(t), std::sin(t), -std::sin(t), std::cos(t)});
    }
    return beam_splitter();
}

EigenBasis wave_basis_for(const VerifyOptions &options, PhaseAngle phi0) {
    if (options.fault == InjectedFault::NonComplementaryBasis) {
        double t = pi / 3;
        return EigenBasis::of(reconstruct({0, std::sin(t), 0, std::cos(t)}));
    }
    return derive_wave_eigenbasis(phi0);
}

/// Collects the maximum of a residual over samples and compares it against a tolerance.
class ResidualCheck {
   public:
    ResidualCheck(std::string name, double tolerance) : name_(std::move(name)), tolerance_(tolerance) {
    }
    void add(double residual) {
        worst_ = std::max(worst_, std::isnan(residual) ? INFINITY : std::abs(residual));
    }
    CheckResult result() const {
        return {name_, worst_ < tolerance_, fmt::format("max residual {:.3g}, tolerance {:.0e}", worst_, tolerance_)};
    }

   private:
    std::string name_;
    double tolerance_;
    double worst_ = 0;
};

CheckResult guarded(const std::string &name, const std::function<CheckResult()> &body) {
    try {
        return body();
    } catch (const std::exception &e) {
        return {name, false, fmt::format("raised: {}", e.what())};
    }
}

CheckResult check_beam_splitter_identity(const VerifyOptions &options) {
    ResidualCheck c("B^dagger sigma_z B = sigma_x", Tolerances::herm);
    UnitaryGate b = splitter_for(options);
    c.add(max_abs_diff(b.conjugate(Observable::sigma_z()).matrix(), Observable::sigma_x().matrix()));
    return c.result();
}

CheckResult check_beam_splitter_balance(const VerifyOptions &options) {
    ResidualCheck c("beam splitter balances the lower-port input", Tolerances::norm);
    UnitaryGate b = splitter_for(options);
    c.add(std::norm(inner(StateVector::up(), b.apply(StateVector::down()))) - 0.5);
    c.add(b.unitarity_residual());
    return c.result();
}

CheckResult check_pipeline_fringe(const VerifyOptions &options) {
    ResidualCheck c("pipeline B Phi(phi) B |psi_-> fringe <sigma_z> = cos(phi)", 1e-12);
    UnitaryGate b = splitter_for(options);
    double visibility = 0;
    for (PhaseAngle phi : linspace(-pi, pi, 4001)) {
        double z = expectation(Observable::sigma_z(), mach_zehnder_output(phi, b));
        c.add(z - std::cos(phi.radians()));
        visibility = std::max(visibility, std::abs(z));
    }
    c.add(visibility - 1);
    return c.result();
}

CheckResult check_mutual_zero(const VerifyOptions &options, RandomStream &rng) {
    ResidualCheck c("Eq.3/Eq.4 residuals: <w+-|P|w+-> = <p+-|W|p+-> = 0", 1e-12);
    for (int k = 0; k < kAngleSamples; k++) {
        PhaseAngle phi0(uniform(rng, -pi, pi));
        c.add(check_mutual_zero_expectation(path_operator(), wave_basis_for(options, phi0)).max_abs());
    }
    return c.result();
}

CheckResult check_unbiased(const VerifyOptions &options, RandomStream &rng) {
    ResidualCheck c("Eq.3/Eq.4 complementarity: path and wave bases mutually unbiased", Tolerances::comp);
    for (int k = 0; k < kAngleSamples; k++) {
        PhaseAngle phi0(uniform(rng, -pi, pi));
        c.add(is_complementary(EigenBasis::computational(), wave_basis_for(options, phi0)).max_deviation);
    }
    return c.result();
}

CheckResult check_eigenbasis_reconstruction(const VerifyOptions &options, RandomStream &rng) {
    ResidualCheck c("Eq.5 reconstruction: derived eigenbasis matches (+-e^{-i phi0/2}, e^{i phi0/2})/sqrt2", 1e-12);
    constexpr double s = std::numbers::sqrt2 / 2;
    for (int k = 0; k < kAngleSamples; k++) {
        double phi0 = uniform(rng, -pi, pi);
        EigenBasis basis = wave_basis_for(options, PhaseAngle(phi0));
        StateVector plus(std::polar(s, -phi0 / 2), std::polar(s, phi0 / 2));
        StateVector minus(-std::polar(s, -phi0 / 2), std::polar(s, phi0 / 2));
        c.add(1 - std::abs(inner(plus, basis.plus())));
        c.add(1 - std::abs(inner(minus, basis.minus())));
    }
    return c.result();
}

CheckResult check_wave_decomposition(const VerifyOptions &options, RandomStream &rng) {
    ResidualCheck c("Eq.8 decomposition: W = cos(phi0) sigma_x + sin(phi0) sigma_y", 1e-12);
    for (int k = 0; k < kAngleSamples; k++) {
        double phi0 = uniform(rng, -pi, pi);
        PauliCoefficients p = pauli_decompose(observable_from_eigensystem(wave_basis_for(options, PhaseAngle(phi0))));
        c.add(p.c0);
        c.add(p.cx - std::cos(phi0));
        c.add(p.cy - std::sin(phi0));
        c.add(p.cz);
    }
    return c.result();
}

CheckResult check_scan(RandomStream &rng) {
    ResidualCheck c("Eq.9 scan: <phi|W|phi> = cos(phi - phi0), <phi|P|phi> = 0", 1e-12);
    std::vector<PhaseAngle> grid = linspace(-pi, pi, 1000);
    for (int k = 0; k < 16; k++) {
        PhaseAngle phi0(uniform(rng, -pi, pi));
        for (const ScanPoint &pt : interference_scan(phi0, grid).points) {
            c.add(pt.w_expect - std::cos(pt.phi.radians() - phi0.radians()));
            c.add(pt.p_expect);
        }
    }
    return c.result();
}

CheckResult check_bound_routes(RandomStream &rng) {
    ResidualCheck c("Eq.10 bound: commutator route equals closed form", 1e-12);
    for (int k = 0; k < kRandomTriples; k++) {
        PhaseAngle phi0(uniform(rng, -pi, pi));
        StateVector s = random_state(rng);
        c.add(general_bound_rhs(phi0, s) - robertson_bound(path_operator(), wave_operator(phi0), s));
    }
    return c.result();
}

CheckResult check_robertson(RandomStream &rng) {
    // Squared form avoids square-root amplification near zero.
    ResidualCheck c("Eq.1 Robertson inequality on random (Hermitian, Hermitian, state)", 1e-10);
    for (int k = 0; k < kRandomTriples; k++) {
        Observable a = random_hermitian(rng);
        Observable b = random_hermitian(rng);
        StateVector s = random_state(rng);
        double bound = robertson_bound(a, b, s);
        double violation = bound * bound - variance(a, s) * variance(b, s);
        c.add(std::max(0.0, violation));
    }
    return c.result();
}

CheckResult check_duality(RandomStream &rng) {
    ResidualCheck c("Eq.11 saturation: Delta P = 1, Delta W = |sin(phi - phi0)|, product = bound", 1e-10);
    for (int k = 0; k < kRandomTriples; k++) {
        double phi = uniform(rng, -pi, pi);
        double phi0 = uniform(rng, -pi, pi);
        UncertaintyReport r = duality_report(PhaseAngle(phi), PhaseAngle(phi0));
        c.add(r.delta_p - 1);
        c.add(r.delta_w - std::abs(std::sin(phi - phi0)));
        c.add(r.gap);
        c.add(r.saturated ? 0 : INFINITY);
    }
    return c.result();
}

CheckResult check_vanishing_bound(RandomStream &rng) {
    ResidualCheck c("Eq.11 vanishing bound at W eigenstates phi = phi0 + k pi", 1e-12);
    for (int k = 0; k < kAngleSamples; k++) {
        double phi0 = uniform(rng, -pi, pi);
        for (int turns = -2; turns <= 2; turns++) {
            UncertaintyReport r = duality_report(PhaseAngle(phi0 + turns * pi), PhaseAngle(phi0));
            c.add(r.bound);
            c.add(r.delta_w);
        }
    }
    return c.result();
}

CheckResult check_sensitivity(RandomStream &rng) {
    ResidualCheck c("sensitivity |d<W>/dphi| coincides with Delta W (finite difference)", 1e-6);
    constexpr double h = 1e-5;
    for (int k = 0; k < 16; k++) {
        PhaseAngle phi0(uniform(rng, -pi, pi));
        Observable w = wave_operator(phi0);
        for (PhaseAngle phi : linspace(-pi, pi, 64)) {
            double up = expectation(w, balanced_state(PhaseAngle(phi.radians() + h)));
            double down = expectation(w, balanced_state(PhaseAngle(phi.radians() - h)));
            double slope = std::abs((up - down) / (2 * h));
            c.add(slope - duality_report(phi, phi0).delta_w);
        }
    }
    return c.result();
}

CheckResult check_sensitivity_coincidence(RandomStream &rng) {
    ResidualCheck c("sensitivity |sin(phi - phi0)| equals Delta W", 1e-12);
    for (int k = 0; k < kRandomTriples; k++) {
        PhaseAngle phi(uniform(rng, -pi, pi));
        PhaseAngle phi0(uniform(rng, -pi, pi));
        c.add(sensitivity(phi, phi0) - duality_report(phi, phi0).delta_w);
    }
    return c.result();
}

CheckResult check_equator(RandomStream &rng) {
    ResidualCheck c("Bloch vector of balanced states lies on the equator", Tolerances::norm);
    for (int k = 0; k < kRandomTriples; k++) {
        BlochVector v = bloch_vector(balanced_state(PhaseAngle(uniform(rng, -pi, pi))));
        c.add(v.z);
        c.add(v.norm() - 1);
    }
    return c.result();
}

CheckResult check_monte_carlo(const VerifyOptions &options, MeasurementOrder order) {
    std::string name = fmt::format("Monte Carlo randomization, order {}: chi2 uniform second outcome, "
                                   "first variance within 4 SE",
                                   order_token(order));
    RandomStream angles(RandomStream::mix64(options.seed));
    RandomStream rng(options.seed);
    int failures = 0;
    double worst_z = 0;
    double worst_chi2 = 0;
    for (int k = 0; k < 16; k++) {
        double phi = uniform(angles, -pi, pi);
        double phi0 = uniform(angles, -pi, pi);
        SequentialStats s = sequential_experiment(order, PhaseAngle(phi), PhaseAngle(phi0), options.shots, rng);
        UniformityResult u = uniformity_test(s.second_counts);
        double mu = order == MeasurementOrder::PathThenWave ? 0.0 : std::cos(phi - phi0);
        double expected = 1 - mu * mu;
        double se = options.shots >= 2 ? variance_standard_error(mu, options.shots) : 0;
        double dev = std::abs(s.first_variance - expected);
        bool var_ok = options.shots < 2 || dev <= 4 * se;
        if (!u.pass || !var_ok) {
            failures++;
        }
        worst_chi2 = std::max(worst_chi2, u.chi2);
        worst_z = std::max(worst_z, se > 0 ? dev / se : 0);
    }
    return {name, failures == 0,
            fmt::format("{} shots x 16 configurations, max chi2 {:.3g}, max variance deviation {:.3g} SE",
                        options.shots, worst_chi2, worst_z)};
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions &options) {
    RandomStream rng(options.seed);
    std::vector<CheckResult> out;
    auto run = [&](const std::string &label, const std::function<CheckResult()> &body) {
        out.push_back(guarded(label, body));
    };
    run("beam splitter identity", [&] { return check_beam_splitter_identity(options); });
    run("beam splitter balance", [&] { return check_beam_splitter_balance(options); });
    run("pipeline fringe", [&] { return check_pipeline_fringe(options); });
    run("Eq.3/Eq.4 residuals", [&] { return check_mutual_zero(options, rng); });
    run("Eq.3/Eq.4 complementarity", [&] { return check_unbiased(options, rng); });
    run("Eq.5 reconstruction", [&] { return check_eigenbasis_reconstruction(options, rng); });
    run("Eq.8 decomposition", [&] { return check_wave_decomposition(options, rng); });
    run("Eq.9 scan", [&] { return check_scan(rng); });
    run("Eq.1 Robertson", [&] { return check_robertson(rng); });
    run("Eq.10 bound", [&] { return check_bound_routes(rng); });
    run("Eq.11 saturation", [&] { return check_duality(rng); });
    run("Eq.11 vanishing bound", [&] { return check_vanishing_bound(rng); });
    run("sensitivity slope", [&] { return check_sensitivity(rng); });
    run("sensitivity coincidence", [&] { return check_sensitivity_coincidence(rng); });
    run("Bloch equator", [&] { return check_equator(rng); });
    if (options.shots > 0) {
        run("Monte Carlo pw", [&] { return check_monte_carlo(options, MeasurementOrder::PathThenWave); });
        run("Monte Carlo wp", [&] { return check_monte_carlo(options, MeasurementOrder::WaveThenPath); });
    }
    return out;
}

bool print_report(const std::vector<CheckResult> &results, std::ostream &out) {
    size_t failed = 0;
    for (const CheckResult &r : results) {
        out << (r.pass ? "PASS  " : "FAIL  ") << r.name << "  (" << r.detail << ")\n";
        if (!r.pass) {
            failed++;
        }
    }
    if (failed == 0) {
        out << "all " << results.size() << " checks passed\n";
    } else {
        out << failed << " of " << results.size() << " checks FAILED\n";
    }
    return failed == 0;
}

}  // namespace twopath::tools
