#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qpseudo/qmatrix.hpp"

namespace qps {

/// [[0, 1], [0, 0]].
QMatrix nilpotent2();
/// diag(1, 0).
QMatrix proj2();
/// diag(j, k); S-spectrum is the unit sphere of imaginary units.
QMatrix diagjk();
/// diag(1 + j/2, 3 - (i + j)/(2 sqrt 2)); normal, disconnected real slice at eps = 1/4.
QMatrix disc_normal();
/// Truncation of x -> (x2, x3 + 2x1, x4 + 2x2, ...) to n x n (superdiagonal 1, subdiagonal 2).
QMatrix hyponormal_truncation(std::size_t n = 12);

/// Resolves `nilpotent2`, `proj2`, `diagjk`, `disc-normal`, `hypo12` and
/// `leftmult:<q>:<n>` (q in "a+bi+cj+dk" form). Throws ParseError otherwise.
QMatrix named_matrix(std::string_view name);
bool is_named_matrix(std::string_view name);
std::vector<std::string> named_matrix_names();

}  // namespace qps
