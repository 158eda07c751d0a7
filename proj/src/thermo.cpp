#include "mobius/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "mobius/oracle.hpp"

namespace mobius::thermo {

using spectrum::detail::Core;
using spectrum::detail::level_energy;
using spectrum::detail::level_g;
using spectrum::detail::make_core;

namespace {

void check_input(const ThermoInput& input) {
    if (!(input.beta > 0.0)) throw DomainError("beta", "must be > 0");
    if (input.n_max < 0) throw DomainError("n_max", "must be >= 0");
}

std::vector<double> level_energies(const ModelParams& model, double m,
                                   int n_max) {
    const auto core = make_core<double>(model, m, model.field().tau0);
    std::vector<double> out(n_max + 1);
    for (int n = 0; n <= n_max; ++n)
        out[n] = level_energy(core, double(n));
    return out;
}

double log_partition_direct(double beta, const std::vector<double>& energies) {
    double smax = -beta * energies[0];
    for (double e : energies) smax = std::max(smax, -beta * e);
    double sum = 0.0;
    for (double e : energies) sum += std::exp(-beta * e - smax);
    return smax + std::log(sum);
}

// Boltzmann-sum log Z with beta or the level energies carried as jets.
Jet2 log_partition_direct_jet(const Jet2& beta, const std::vector<Jet2>& energies) {
    double smax = -beta.f * energies[0].f;
    for (const auto& e : energies) smax = std::max(smax, -beta.f * e.f);
    Jet2 sum(0.0);
    for (const auto& e : energies) sum = sum + exp(-(beta * e) - smax);
    return smax + log(sum);
}

double dtau0_dB(const ModelParams& model) {
    const auto& c = model.constants();
    return c.e_charge / (c.hbar * c.c_light);
}

// log Z jets seeded in beta, in m, and in B (through tau0 at fixed zeta).
Jet2 lnz_beta_jet(const ModelParams& model, const ThermoInput& input) {
    if (input.method == Method::DirectSum) {
        std::vector<Jet2> energies;
        for (double e : level_energies(model, input.m, input.n_max))
            energies.emplace_back(e);
        return log_partition_direct_jet(Jet2::variable(input.beta), energies);
    }
    const auto core = make_core<double>(model, input.m, model.field().tau0);
    return detail::log_partition_closed<Jet2>(
        Jet2::variable(input.beta), Jet2(core.big_xi), Jet2(core.nu),
        Jet2(core.q_shift), core.p, input.n_max);
}

Jet2 lnz_m_jet(const ModelParams& model, const ThermoInput& input) {
    const auto core = make_core<Jet2>(model, Jet2::variable(input.m),
                                      Jet2(model.field().tau0));
    if (input.method == Method::DirectSum) {
        std::vector<Jet2> energies;
        for (int n = 0; n <= input.n_max; ++n)
            energies.push_back(level_energy(core, Jet2(double(n))));
        return log_partition_direct_jet(Jet2(input.beta), energies);
    }
    return detail::log_partition_closed<Jet2>(Jet2(input.beta), core.big_xi,
                                              core.nu, core.q_shift, core.p,
                                              input.n_max);
}

Jet2 lnz_field_jet(const ModelParams& model, const ThermoInput& input) {
    const Jet2 tau0_of_B(model.field().tau0, dtau0_dB(model), 0.0);
    const auto core = make_core<Jet2>(model, Jet2(input.m), tau0_of_B);
    if (input.method == Method::DirectSum) {
        std::vector<Jet2> energies;
        for (int n = 0; n <= input.n_max; ++n)
            energies.push_back(level_energy(core, Jet2(double(n))));
        return log_partition_direct_jet(Jet2(input.beta), energies);
    }
    return detail::log_partition_closed<Jet2>(Jet2(input.beta), core.big_xi,
                                              core.nu, core.q_shift, core.p,
                                              input.n_max);
}

} // namespace

ThermoCoefficients thermo_coefficients(const ModelParams& model, double m,
                                       int n_max) {
    if (n_max < 0) throw DomainError("n_max", "must be >= 0");
    const auto core = make_core<double>(model, m, model.field().tau0);
    ThermoCoefficients tc;
    tc.p = core.p;
    tc.q_shift = core.q_shift;
    tc.big_xi = core.big_xi;
    tc.nu = core.nu;
    tc.n_max = n_max;
    tc.g1 = level_g(core, 0.0);
    tc.g2 = level_g(core, double(n_max + 1));
    return tc;
}

double partition_direct(const ModelParams& model, const ThermoInput& input) {
    check_input(input);
    double z = 0.0;
    for (double e : level_energies(model, input.m, input.n_max))
        z += std::exp(-input.beta * e);
    return z;
}

specfun::ScaledValue partition_poisson_scaled(const ModelParams& model,
                                              const ThermoInput& input) {
    check_input(input);
    const auto core = make_core<double>(model, input.m, model.field().tau0);
    const auto parts = detail::closed_parts<double>(
        input.beta, core.big_xi, core.nu, core.q_shift, core.p, input.n_max);
    const specfun::ScaledValue terms[2] = {
        specfun::ScaledValue::from_parts(parts.A1, parts.s1),
        specfun::ScaledValue::from_parts(parts.A2, parts.s2)};
    const auto sum = specfun::scaled_sum(terms, 2);

    const double smax = std::max(terms[0].log_scale, terms[1].log_scale);
    const double gross =
        std::fabs(terms[0].mantissa) * std::exp(terms[0].log_scale - smax) +
        std::fabs(terms[1].mantissa) * std::exp(terms[1].log_scale - smax);
    const double sum_mag =
        sum.is_zero() ? 0.0
                      : std::fabs(sum.mantissa) * std::exp(sum.log_scale - smax);
    if (sum_mag <= 1e-13 * gross)
        throw NumericalInstability("partition sum lost to cancellation");
    return sum;
}

double partition_poisson(const ModelParams& model, const ThermoInput& input) {
    return partition_poisson_scaled(model, input).to_real();
}

double partition_exp_flux(const ModelParams& model, const ThermoInput& input) {
    if (model.field().flux_model != FluxModel::Exponential)
        throw DomainError("flux_model", "exponential-flux partition function "
                                        "requires flux_model = exponential");
    return partition_poisson(model, input);
}

double log_partition(const ModelParams& model, const ThermoInput& input) {
    check_input(input);
    if (input.method == Method::DirectSum)
        return log_partition_direct(input.beta,
                                    level_energies(model, input.m, input.n_max));
    const auto core = make_core<double>(model, input.m, model.field().tau0);
    return detail::log_partition_closed<double>(input.beta, core.big_xi,
                                                core.nu, core.q_shift, core.p,
                                                input.n_max);
}

double internal_energy(const ModelParams& model, const ThermoInput& input) {
    check_input(input);
    return -lnz_beta_jet(model, input).d1;
}

double free_energy(const ModelParams& model, const ThermoInput& input) {
    check_input(input);
    return -log_partition(model, input) / input.beta;
}

double entropy(const ModelParams& model, const ThermoInput& input) {
    check_input(input);
    const auto lnz = lnz_beta_jet(model, input);
    const double u = -lnz.d1;
    return model.constants().k_B * (lnz.f + input.beta * u);
}

double heat_capacity(const ModelParams& model, const ThermoInput& input) {
    check_input(input);
    const auto lnz = lnz_beta_jet(model, input);
    return model.constants().k_B * input.beta * input.beta * lnz.d2;
}

CrossChecked persistent_current(const ModelParams& model,
                                const ThermoInput& input) {
    check_input(input);
    const auto& c = model.constants();
    const double e_over_hbarc = c.e_charge / (c.hbar * c.c_light);

    CrossChecked out;
    out.analytic = e_over_hbarc / input.beta * lnz_m_jet(model, input).d1;

    auto f_of_m = [&](double m) {
        ThermoInput in = input;
        in.m = m;
        return free_energy(model, in);
    };
    out.finite_difference =
        -e_over_hbarc *
        oracle::richardson_derivative(f_of_m, input.m,
                                      oracle::DerivativeOrder::First);
    return out;
}

CrossChecked magnetization(const ModelParams& model, const ThermoInput& input) {
    check_input(input);
    const auto& c = model.constants();
    const double scale = dtau0_dB(model);
    const double B = model.field().tau0 / scale;

    CrossChecked out;
    out.analytic = lnz_field_jet(model, input).d1 / input.beta;

    auto lnz_of_B = [&](double b) {
        FieldConfig f = model.field();
        f.tau0 = b * scale;
        return log_partition(model.with_field(f), input);
    };
    out.finite_difference =
        oracle::richardson_derivative(lnz_of_B, B,
                                      oracle::DerivativeOrder::First) /
        input.beta;
    return out;
}

CrossChecked susceptibility(const ModelParams& model, const ThermoInput& input) {
    check_input(input);
    const double scale = dtau0_dB(model);
    const double B = model.field().tau0 / scale;

    CrossChecked out;
    out.analytic = lnz_field_jet(model, input).d2 / input.beta;

    auto m_of_B = [&](double b) {
        FieldConfig f = model.field();
        f.tau0 = b * scale;
        const ModelParams shifted = model.with_field(f);
        return lnz_field_jet(shifted, input).d1 / input.beta;
    };
    out.finite_difference = oracle::richardson_derivative(
        m_of_B, B, oracle::DerivativeOrder::First);
    return out;
}

ThermoProperties thermo_suite(const ModelParams& model,
                              const ThermoInput& input) {
    check_input(input);
    const auto& c = model.constants();

    ThermoProperties props;
    const auto lnz = lnz_beta_jet(model, input);
    props.Z = std::exp(lnz.f);
    props.F = -lnz.f / input.beta;
    props.U = -lnz.d1;
    props.S = c.k_B * (lnz.f + input.beta * props.U);
    props.C = c.k_B * input.beta * input.beta * lnz.d2;
    props.M = lnz_field_jet(model, input).d1 / input.beta;
    props.chi = lnz_field_jet(model, input).d2 / input.beta;
    props.I_persistent = c.e_charge / (c.hbar * c.c_light) / input.beta *
                         lnz_m_jet(model, input).d1;

    ThermoInput direct = input;
    direct.method = Method::DirectSum;
    ThermoInput poisson = input;
    poisson.method = Method::PoissonClosedForm;
    const double zd = partition_direct(model, direct);
    const double zp = partition_poisson(model, poisson);
    props.method_deviation = std::fabs(zd - zp) / zd;

    // forced identities; a violation means the evaluation itself broke
    const double s_audit = props.S - c.k_B * (lnz.f + input.beta * props.U);
    const double f_audit = props.F + lnz.f / input.beta;
    if (std::fabs(s_audit) > 1e-8 * std::max(1.0, std::fabs(props.S)) ||
        std::fabs(f_audit) > 1e-12 * std::max(1.0, std::fabs(props.F)))
        throw NumericalInstability("thermodynamic identity audit failed");
    return props;
}

} // namespace mobius::thermo
