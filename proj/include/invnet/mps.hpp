#ifndef INVNET_MPS_HPP
#define INVNET_MPS_HPP

#include <filesystem>

#include "invnet/model.hpp"

namespace invnet {

/// Writes the model in fixed-form MPS (ROWS/COLUMNS/RHS/RANGES/BOUNDS, with
/// INTORG/INTEND markers for binaries).
void write_mps(const Model& model, const std::filesystem::path& path);

/// Parses a fixed-form MPS file produced by write_mps (or compatible).
Model read_mps(const std::filesystem::path& path);

}  // namespace invnet

#endif
