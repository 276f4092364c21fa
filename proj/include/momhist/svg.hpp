#pragma once

#include <string>

#include "momhist/levelset.hpp"

namespace momhist::svg {

/// Standalone SVG of the level-set polygons over (t0, h) axes, one colour and
/// label per shape. Throws std::invalid_argument for an empty catalog.
std::string level_set_map(const Catalog& c);

/// Bar chart of a grid's counts, bars drawn on the true bin edges.
std::string histogram(const Shape& s, const BinGrid& g, const std::string& title);

/// Writes text to path, throwing std::runtime_error when the file cannot be written.
void write_file(const std::string& path, const std::string& text);

}  // namespace momhist::svg
