#pragma once

#include <string>

#include "embeam/beam_element.hpp"
#include "embeam/newton.hpp"
#include "embeam/solid_element.hpp"

namespace embeam {

/// Run configuration parsed from a flat key = value text file.
struct ConfigDocument {
  std::string mesh_file;  // resolved against the config file's directory
  SolidMaterial solid_material;
  BeamMaterial beam_material;
  double kappa = 0.0;  // 0 means "use the default 100 * solid_youngs"
  int n_gauss_mortar = 6;
  NewtonSettings newton;
  std::string output_dir = "output";
  int output_every = 1;

  double effective_kappa() const {
    return kappa > 0.0 ? kappa : 100.0 * solid_material.youngs_modulus;
  }
};

/// Parse and validate a config file. Unknown keys and malformed values are
/// parse errors with the offending line number.
ConfigDocument load_config(const std::string& path);

}  // namespace embeam
