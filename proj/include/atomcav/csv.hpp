#ifndef ATOMCAV_CSV_HPP
#define ATOMCAV_CSV_HPP

#include <string>
#include <vector>

#include "atomcav/dde.hpp"
#include "atomcav/experiments.hpp"
#include "atomcav/fullarray.hpp"
#include "atomcav/intensity.hpp"
#include "atomcav/residue.hpp"
#include "atomcav/spectral.hpp"

namespace atomcav {

// All CSV emission goes through here: '.' decimal, 17 significant digits
// (lossless for 64-bit floats), header row, deterministic bytes.

std::string format_double(double v);

void write_trajectory_csv(const std::string& path, const AmplitudeTrajectory& traj);
AmplitudeTrajectory read_trajectory_csv(const std::string& path);

void write_spectrum_csv(const std::string& path, const SpectralResponse& resp);
SpectralResponse read_spectrum_csv(const std::string& path);

void write_poles_csv(const std::string& path, const PoleSet& poles);
PoleSet read_poles_csv(const std::string& path);

void write_reconstruction_csv(const std::string& path, const Reconstruction& rec);

void write_sweep_csv(const std::string& path, const SweepResult& sweep);

void write_intensity_csv(const std::string& path, const IntensityMap& map);
// Little-endian 64-bit dims (nt, nx) followed by row-major f64 values.
void write_intensity_bin(const std::string& path, const IntensityMap& map);
IntensityMap read_intensity_bin(const std::string& path);

void write_fullarray_csv(const std::string& path, const FullArrayTrajectory& full);

} // namespace atomcav

#endif
