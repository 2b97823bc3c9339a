#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "vmsrom/fom.hpp"

namespace vmsrom {

// One pipeline run described by a single JSON document. The same file drives
// every subcommand: `fom` consumes the flow and discretization fields, `pod`
// the basis fields, `rom` the variant fields; `compare` takes several files.
//
// Required keys: mesh, nu, inlet_velocity, dt, t_end, n_modes, output_dir.
// Optional keys (with defaults): stride (1), c_inv (36), ramp_steps (10),
// variant ("consistent"), with_supremizers (true), serial (false),
// label (derived from variant and n_modes).
// Unknown keys are errors: silent typos must not change a scientific run.
struct RunConfig {
  std::string mesh_path;
  double nu = 0.0;              // kinematic viscosity
  double inlet_velocity = 0.0;  // peak of the parabolic inlet profile
  double dt = 0.0;
  double t_end = 0.0;
  int stride = 1;      // record every stride-th step
  double c_inv = 36.0; // inverse-inequality constant of the stabilization
  int ramp_steps = 10; // Dirichlet lift ramped linearly over this many steps
  int n_modes = 0;     // reduced modes per field
  std::string variant = "consistent";  // or "non-consistent"
  bool with_supremizers = true;
  std::string output_dir;
  bool serial = false;  // pin single-threaded execution for byte-stable reruns
  std::string label;    // series label in CSV output; empty = derived
};

// Parse and validate a config document; `origin` names the source in
// diagnostics. Throws ConfigError on unknown keys, missing required keys,
// type mismatches, or out-of-range values.
RunConfig parse_config_text(const std::string& text, const std::string& origin);
RunConfig parse_config_file(const std::string& path);

// Effective series label: the explicit one, or "<variant>-N<n_modes>".
std::string effective_label(const RunConfig& cfg);

// Canonical form: every field explicit, defaults resolved, keys sorted.
nlohmann::json canonical_json(const RunConfig& cfg);

// FNV-1a (64-bit) over the canonical serialized form. Stamped on every
// artifact this run produces.
std::uint64_t config_hash(const RunConfig& cfg);

// The combination (variant "non-consistent", with_supremizers false) yields a
// reduced saddle system whose pressure modes are uncontrolled; it is refused
// unless the caller passed an explicit override flag. Call where a reduced
// model is about to be built.
void require_solvable_variant(const RunConfig& cfg, bool allow_singular);

// Time-stepper settings implied by the config (tolerances keep defaults).
SolverConfig solver_config(const RunConfig& cfg);

}  // namespace vmsrom
