#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "insdel/gf.hpp"

namespace insdel::detail {

using Matrix = std::vector<std::vector<FieldElement>>;

/// Reduces `m` to reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(const Field& f, Matrix& m, std::size_t cols);

/// Some solution of A x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<FieldElement>> solve(const Field& f, Matrix a,
                                               const std::vector<FieldElement>& b,
                                               std::size_t cols);

/// A nonzero vector in the right kernel of `a`, or nullopt if the kernel is trivial.
std::optional<std::vector<FieldElement>> kernel_vector(const Field& f, Matrix a, std::size_t cols);

}  // namespace insdel::detail
