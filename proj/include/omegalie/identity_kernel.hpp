#pragma once

// Residuals of the GA(1,5)-identity on structure constants.
//
// A slot map sends argument position j of the double bracket
// [[x_.,x_.,x_.],x_.,x_.] to the index variable it reads, so
// ((x_{s0} x_{s1} x_{s2}) x_{s3} x_{s4}) with 0-based s.
//
// identity_residuals_serial evaluates the defining sum directly and is kept
// as the reference. identity_residuals_parallel first tabulates
// P[a][b][c][d][e][p] = sum_m C^m_{abc} C^p_{mde} and then adds table
// entries, splitting both phases over the (i, k, l) prefix with OpenMP.
// Both report violations in the same lexicographic order.

#include "omegalie/structure_tensor.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace omegalie {

using SlotMap = std::array<std::uint8_t, 5>;

// slot j reads x_{rho(j+1)}
std::vector<SlotMap> slot_maps(std::span<const Perm5> elements);
// five rotations of each of the four seed sequences
std::vector<SlotMap> family_slot_maps();

CheckReport identity_residuals_serial(const StructureTensor& c, std::span<const SlotMap> maps,
                                      std::size_t limit = default_violation_limit);
CheckReport identity_residuals_parallel(const StructureTensor& c, std::span<const SlotMap> maps,
                                        std::size_t limit = default_violation_limit);

} // namespace omegalie
