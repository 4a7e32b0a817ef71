// Copyright 2026 The ghzw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ghzw/ghzw.h"

#include <cstring>
#include <string>
#include <vector>

#include "ghzw/analysis.hpp"
#include "ghzw/validate.hpp"

struct ghzw_density_matrix {
  ghzw::DensityMatrix value;
};

struct ghzw_protocol {
  ghzw::ProtocolUnitary value;
};

struct ghzw_simulator {
  ghzw::TeleportationSimulator value;
};

namespace {

thread_local std::string g_last_error;

class ApiError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

ghzw_status fail(ghzw_status status, const char* what) {
  g_last_error = what;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
ghzw_status guarded(Body&& body) {
  try {
    body();
    g_last_error.clear();
    return GHZW_OK;
  } catch (const ghzw::UnsupportedError& e) {
    return fail(GHZW_ERROR_UNSUPPORTED, e.what());
  } catch (const ghzw::InvariantError& e) {
    return fail(GHZW_ERROR_INVARIANT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(GHZW_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(GHZW_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(GHZW_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(GHZW_ERROR_INTERNAL, "unknown error");
  }
}

template <typename T>
void require(const T* p, const char* what) {
  if (p == nullptr) throw ApiError(std::string("null pointer: ") + what);
}

ghzw::Environment to_env(ghzw_environment env) {
  switch (env) {
    case GHZW_ENV_ZERO_TEMPERATURE:
      return ghzw::Environment::ZeroTemperature;
    case GHZW_ENV_INFINITE_TEMPERATURE:
      return ghzw::Environment::InfiniteTemperature;
    case GHZW_ENV_DEPHASING:
      return ghzw::Environment::Dephasing;
  }
  throw ApiError("unknown environment");
}

ghzw::ChannelKind to_channel(ghzw_channel channel) {
  switch (channel) {
    case GHZW_CHANNEL_GHZ:
      return ghzw::ChannelKind::Ghz;
    case GHZW_CHANNEL_W:
      return ghzw::ChannelKind::W;
    case GHZW_CHANNEL_NONE:
      break;
  }
  throw ApiError("channel must be GHZ or W");
}

ghzw::Configuration to_config(const ghzw_config* config) {
  require(config, "config");
  ghzw::Configuration out{ghzw::Scenario::InputDecoheres, to_env(config->env), std::nullopt};
  switch (config->scenario) {
    case GHZW_SCENARIO_INPUT:
      break;
    case GHZW_SCENARIO_CHANNEL:
      out.scenario = ghzw::Scenario::ChannelDecoheres;
      break;
    case GHZW_SCENARIO_BOTH:
      out.scenario = ghzw::Scenario::BothDecohere;
      break;
    default:
      throw ApiError("unknown scenario");
  }
  if (config->channel != GHZW_CHANNEL_NONE) out.channel = to_channel(config->channel);
  out.check();
  return out;
}

void emit(ghzw::DensityMatrix rho, ghzw_density_matrix** out) {
  *out = new ghzw_density_matrix{std::move(rho)};
}

}  // namespace

extern "C" {

const char* ghzw_version(void) { return "0.1.0"; }

const char* ghzw_last_error(void) { return g_last_error.c_str(); }

const char* ghzw_status_string(ghzw_status status) {
  switch (status) {
    case GHZW_OK:
      return "ok";
    case GHZW_ERROR_INVALID_ARGUMENT:
      return "invalid argument";
    case GHZW_ERROR_UNSUPPORTED:
      return "unsupported";
    case GHZW_ERROR_INVARIANT:
      return "invariant violation";
    case GHZW_ERROR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

ghzw_status ghzw_dm_ghz(ghzw_density_matrix** out) {
  return guarded([&] {
    require(out, "out");
    emit(ghzw::ghz_state(), out);
  });
}

ghzw_status ghzw_dm_w(ghzw_density_matrix** out) {
  return guarded([&] {
    require(out, "out");
    emit(ghzw::w_state(), out);
  });
}

ghzw_status ghzw_dm_input(double theta, double phi, ghzw_density_matrix** out) {
  return guarded([&] {
    require(out, "out");
    emit(ghzw::DensityMatrix::pure(ghzw::input_state(ghzw::PureStateAngles(theta, phi))), out);
  });
}

ghzw_status ghzw_dm_from_entries(int dim, const double* re, const double* im,
                                 ghzw_density_matrix** out) {
  return guarded([&] {
    require(re, "re");
    require(im, "im");
    require(out, "out");
    if (dim < 2 || dim > ghzw::kMaxDim) throw ApiError("dim must be 2, 4, 8 or 16");
    ghzw::Matrix m(dim, dim);
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < dim; ++c) m(r, c) = {re[r * dim + c], im[r * dim + c]};
    }
    emit(ghzw::DensityMatrix(std::move(m)), out);
  });
}

void ghzw_dm_destroy(ghzw_density_matrix* rho) { delete rho; }

int ghzw_dm_dim(const ghzw_density_matrix* rho) { return rho ? rho->value.dim() : 0; }

ghzw_status ghzw_dm_entry(const ghzw_density_matrix* rho, int row, int col, double* re,
                          double* im) {
  return guarded([&] {
    require(rho, "rho");
    require(re, "re");
    require(im, "im");
    const int dim = rho->value.dim();
    if (row < 0 || col < 0 || row >= dim || col >= dim) throw ApiError("entry index out of range");
    const ghzw::Complex v = rho->value(row, col);
    *re = v.real();
    *im = v.imag();
  });
}

ghzw_status ghzw_dm_partial_trace(const ghzw_density_matrix* rho, const int* keep,
                                  size_t keep_count, ghzw_density_matrix** out) {
  return guarded([&] {
    require(rho, "rho");
    require(out, "out");
    if (keep_count > 0) require(keep, "keep");
    emit(ghzw::partial_trace(rho->value, std::span<const int>(keep, keep_count)), out);
  });
}

ghzw_status ghzw_dm_fidelity(const ghzw_density_matrix* rho, double theta, double phi,
                             double* out) {
  return guarded([&] {
    require(rho, "rho");
    require(out, "out");
    *out = ghzw::fidelity_against_pure(ghzw::input_state(ghzw::PureStateAngles(theta, phi)),
                                       rho->value);
  });
}

ghzw_status ghzw_evolve_rk4(const ghzw_density_matrix* rho0, ghzw_environment env, double gamma,
                            double t, int steps, ghzw_density_matrix** out) {
  return guarded([&] {
    require(rho0, "rho0");
    require(out, "out");
    emit(ghzw::evolve_rk4(rho0->value, to_env(env), gamma, t, steps), out);
  });
}

ghzw_status ghzw_closed_single_qubit(const ghzw_density_matrix* rho0, ghzw_environment env,
                                     double gt, ghzw_density_matrix** out) {
  return guarded([&] {
    require(rho0, "rho0");
    require(out, "out");
    emit(ghzw::closed_single_qubit(rho0->value, to_env(env), gt), out);
  });
}

ghzw_status ghzw_closed_channel(ghzw_channel channel, ghzw_environment env, double gt,
                                ghzw_density_matrix** out) {
  return guarded([&] {
    require(out, "out");
    emit(ghzw::ClosedFormChannel{to_channel(channel), to_env(env)}(gt), out);
  });
}

ghzw_status ghzw_protocol_create(ghzw_channel channel, ghzw_protocol** out) {
  return guarded([&] {
    require(out, "out");
    *out = new ghzw_protocol{ghzw::protocol_unitary(to_channel(channel))};
  });
}

void ghzw_protocol_destroy(ghzw_protocol* protocol) { delete protocol; }

ghzw_status ghzw_protocol_entry(const ghzw_protocol* protocol, int row, int col, double* re,
                                double* im) {
  return guarded([&] {
    require(protocol, "protocol");
    require(re, "re");
    require(im, "im");
    const int dim = protocol->value.u.dim();
    if (row < 0 || col < 0 || row >= dim || col >= dim) throw ApiError("entry index out of range");
    const ghzw::Complex v = protocol->value.u(row, col);
    *re = v.real();
    *im = v.imag();
  });
}

ghzw_status ghzw_teleport(const ghzw_protocol* protocol, const ghzw_density_matrix* rho_in,
                          const ghzw_density_matrix* rho_channel, ghzw_density_matrix** out) {
  return guarded([&] {
    require(protocol, "protocol");
    require(rho_in, "rho_in");
    require(rho_channel, "rho_channel");
    require(out, "out");
    emit(ghzw::teleport_output(rho_in->value, rho_channel->value, protocol->value), out);
  });
}

const char* ghzw_w_complement_assignment(void) {
  static const std::string text = ghzw::describe(ghzw::kWComplementCorrections);
  return text.c_str();
}

ghzw_status ghzw_fidelity_closed(const ghzw_config* config, double theta, double gt,
                                 double* out) {
  return guarded([&] {
    require(out, "out");
    *out = ghzw::fidelity_closed(to_config(config), theta, gt);
  });
}

ghzw_status ghzw_fidelity_simulated(const ghzw_config* config, double theta, double phi,
                                    double gt, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = ghzw::fidelity_simulated(to_config(config), theta, phi, gt);
  });
}

ghzw_status ghzw_simulator_create(const ghzw_config* config, double gt, ghzw_simulator** out) {
  return guarded([&] {
    require(out, "out");
    *out = new ghzw_simulator{ghzw::TeleportationSimulator(to_config(config), gt)};
  });
}

void ghzw_simulator_destroy(ghzw_simulator* sim) { delete sim; }

ghzw_status ghzw_simulator_fidelity(const ghzw_simulator* sim, double theta, double phi,
                                    double* out) {
  return guarded([&] {
    require(sim, "sim");
    require(out, "out");
    *out = sim->value.fidelity(theta, phi);
  });
}

ghzw_status ghzw_average_fidelity_closed(const ghzw_config* config, double gt, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = ghzw::average_fidelity_closed(to_config(config), gt);
  });
}

ghzw_status ghzw_average_fidelity_quadrature(const ghzw_config* config, double gt, int n_nodes,
                                             double* out) {
  return guarded([&] {
    require(out, "out");
    *out = ghzw::average_fidelity_quadrature(to_config(config), gt, n_nodes);
  });
}

ghzw_status ghzw_average_fidelity_simulated(const ghzw_config* config, double gt, int n_nodes,
                                            double* out) {
  return guarded([&] {
    require(out, "out");
    *out = ghzw::average_fidelity_simulated(to_config(config), gt, n_nodes);
  });
}

ghzw_status ghzw_critical_time_find(const ghzw_config* config, ghzw_critical_time* out) {
  return guarded([&] {
    require(out, "out");
    const ghzw::CriticalTime ct = ghzw::critical_time(to_config(config));
    out->is_finite = ct.is_finite() ? 1 : 0;
    out->gt_c = ct.is_finite() ? ct.value() : 0.0;
  });
}

ghzw_status ghzw_monotonicity_switch(ghzw_channel channel, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = ghzw::monotonicity_switch(to_channel(channel));
  });
}

ghzw_status ghzw_robustness_crossover(ghzw_environment env, double gt, ghzw_crossover* out) {
  return guarded([&] {
    require(out, "out");
    const ghzw::CrossoverInterval c = ghzw::robustness_crossover(to_env(env), gt);
    out->theta_low = c.theta_low;
    out->theta_high = c.theta_high;
    out->empty = c.empty ? 1 : 0;
    out->w_wins_inside = c.w_wins_inside ? 1 : 0;
  });
}

ghzw_status ghzw_validate(const ghzw_validate_options* options, ghzw_check_callback callback,
                          void* user_data, ghzw_validate_summary* out) {
  return guarded([&] {
    require(out, "out");
    ghzw::ValidationOptions opts;
    if (options) {
      if (options->override_count > 0) require(options->overrides, "overrides");
      for (size_t i = 0; i < options->override_count; ++i) {
        const ghzw_tolerance_override& o = options->overrides[i];
        require(o.check_prefix, "check_prefix");
        opts.tolerance_overrides[o.check_prefix] = o.tolerance;
      }
      if (options->inject_ghz_correction_fault) {
        opts.ghz_fault = ghzw::GhzCircuitFault::DropConditionalZFromQubit3;
      }
    }
    const ghzw::CheckSink sink = [&](const ghzw::CheckResult& r) {
      if (!callback) return;
      const ghzw_check_result c{r.name.c_str(), r.passed ? 1 : 0, r.measured, r.tolerance,
                                r.detail.c_str()};
      callback(&c, user_data);
    };
    const ghzw::ValidationSummary summary = ghzw::run_validation(opts, sink);
    out->passed = summary.passed;
    out->failed = summary.failed;
    std::memset(out->first_failure, 0, sizeof(out->first_failure));
    if (summary.first_failure) {
      std::strncpy(out->first_failure, summary.first_failure->c_str(),
                   sizeof(out->first_failure) - 1);
    }
  });
}

}  // extern "C"
