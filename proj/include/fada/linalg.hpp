#ifndef FADA_LINALG_HPP
#define FADA_LINALG_HPP

#include <optional>
#include <span>
#include <vector>

#include "fada/scalar.hpp"

namespace fada {

using ScalarMatrix = std::vector<std::vector<Scalar>>;
using QMatrix = std::vector<std::vector<mpq_class>>;

// One solution of A x = b (free variables set to zero), or nullopt when the
// system is inconsistent. Exact elimination over the scalar field.
std::optional<std::vector<Scalar>> solve(ScalarMatrix A, std::vector<Scalar> b);
// Inverse of a square matrix, nullopt when singular.
std::optional<ScalarMatrix> inverse(const ScalarMatrix& A);
int rank(ScalarMatrix A);
int rank(QMatrix A);

// Value of a hyperbolic scalar at point = (beta, x_1, ..., x_n).
mpq_class evaluate(const Scalar& s, std::span<const mpq_class> point);

}  // namespace fada

#endif  // FADA_LINALG_HPP
