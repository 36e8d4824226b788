#pragma once

#include <string>

#include "qtangle/state.hpp"

namespace qtangle {

// FNV-1a over the canonical 17-significant-digit rendering of the
// amplitudes; stable across platforms for identical doubles.
std::string state_digest(const PureState& state);

}  // namespace qtangle
