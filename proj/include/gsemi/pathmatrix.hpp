#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "gsemi/semimodule.hpp"

namespace gsemi {

/// Two-row matrix of run lengths: top row = Down runs (sums to alpha),
/// bottom row = Right runs (sums to beta). Classes are matrices modulo
/// cyclic column permutation.
struct PathMatrix {
    std::vector<Int> top;
    std::vector<Int> bottom;

    std::size_t columns() const { return top.size(); }

    friend bool operator==(const PathMatrix&, const PathMatrix&) = default;
};

enum class Step { Down, Right };

/// Staircase from (0,alpha) to (beta,0), weakly below the diagonal
/// alpha*x + beta*y <= alpha*beta at every vertex.
struct LatticePath {
    NumericalSemigroup gamma;
    std::vector<Step> steps;
};

// Matrix of a canonical lean set; {0} maps to the single column ((alpha),(beta)).
PathMatrix lean_to_matrix(const LeanSet& lean);

struct MatrixDecode {
    LeanSet lean;
    std::size_t rotation = 0; // left rotation applied before decoding
};

// Decodes a matrix by finding the unique cyclic rotation whose turning
// points lie strictly below the diagonal. Throws std::invalid_argument on a
// malformed matrix and internal_consistency_error if the number of valid
// rotations is not exactly one.
MatrixDecode matrix_to_lean(const NumericalSemigroup& gamma, const PathMatrix& m);

// Left rotation of columns by k.
PathMatrix rotate(const PathMatrix& m, std::size_t k);

// Equality modulo cyclic column permutation.
bool matrix_equiv(const PathMatrix& m1, const PathMatrix& m2);

LatticePath lean_to_path(const LeanSet& lean);

// Inverse of lean_to_path; throws std::invalid_argument if the step sequence
// is malformed or crosses the diagonal.
LeanSet path_to_lean(const LatticePath& path);

// Visits every isomorphism class exactly once, by depth-first generation of
// below-diagonal paths with Down ordered before Right.
void for_each_class(const NumericalSemigroup& gamma,
                    const std::function<void(const LeanSet&)>& fn);

std::vector<LeanSet> enumerate_classes(const NumericalSemigroup& gamma);

// (1/(alpha+beta)) * C(alpha+beta, alpha), the expected class count.
Int class_count(const NumericalSemigroup& gamma);

// ASCII rendering: lattice points '.', path edges '|' and '-',
// ES-turning points '*', endpoints 'o'.
std::string render_path_ascii(const LeanSet& lean);

// Minimal SVG rendering of the same picture.
std::string render_path_svg(const LeanSet& lean);

} // namespace gsemi
