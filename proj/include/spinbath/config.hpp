#pragma once

#include <string>
#include <vector>

#include "spinbath/models.hpp"
#include "spinbath/spectral.hpp"

namespace spinbath {

enum class Model { Heisenberg, Ising, FullyConnected };
enum class PictureMode { Effh, Polaron, RcBench };
enum class BathKind { Brownian, SuperOhmic };

struct ExperimentConfig {
  Model model = Model::Heisenberg;
  SchemeKind scheme = SchemeKind::Global;
  PictureMode picture = PictureMode::Effh;
  std::vector<std::string> observables;  // subset of S_x..corr_z, sorted

  std::vector<int> sizes;
  double delta = 0.0;
  double jx = 0.0, jy = 0.0, jz = 0.0;
  double j = 0.0;  // fully-connected all-to-all scale

  BathKind bath_type = BathKind::Brownian;
  double omega = 0.0;    // Brownian peak frequency
  double gamma = 0.0;    // Brownian width
  double omega_c = 0.0;  // super-Ohmic cutoff

  std::vector<double> coupling;  // lambda grid (Brownian) or alpha grid
  std::vector<double> temperatures;

  int rc_levels = 8;
};

const char* model_name(Model m);
const char* picture_name(PictureMode p);
const char* bath_kind_name(BathKind b);

// Strict INI-style parser: sections [run]/[chain]/[bath]/[grid]/[rc], one
// key = value per line, '#' comments. Unknown sections or keys, duplicate
// keys, and schema violations all fail with file/line diagnostics.
ExperimentConfig parse_config(const std::string& path);

// Semantic checks shared by parse_config and library callers.
void validate(const ExperimentConfig& cfg);

// Resolved key = value dump, suitable for re-parsing.
std::string dump_config(const ExperimentConfig& cfg);

// Bath for one grid point: the swept value is lambda (Brownian) or alpha.
SpectralDensity bath_at(const ExperimentConfig& cfg, double coupling);

}  // namespace spinbath
