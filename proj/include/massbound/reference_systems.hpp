#pragma once

#include <string>
#include <vector>

#include "massbound/errors.hpp"
#include "massbound/modal.hpp"

namespace massbound {

// The two built-in five-mass reference chains used by the reproduction run.
// Both share the spring ladder k_i = 1000 * i, i = 1..5.
inline MassStiffnessSystem reference_system(const std::string& name) {
    const std::vector<double> springs{1000.0, 2000.0, 3000.0, 4000.0, 5000.0};
    if (name == "M1") return build_chain(std::vector<double>{15, 21, 24, 27, 30}, springs);
    if (name == "M2") return build_chain(std::vector<double>{30, 170, 180, 190, 200}, springs);
    throw InvalidArgument("unknown system \"" + name + "\" (expected M1 or M2)");
}

}  // namespace massbound
