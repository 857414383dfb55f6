#pragma once

#include <cstdint>
#include <random>

#include "fracpos/linalg.hpp"

namespace fracpos {

using Rng = std::mt19937_64;

/// n×n matrix with iid standard complex Gaussian entries.
ComplexMatrix ginibre(int rows, int cols, Rng& rng);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
ComplexMatrix haar_unitary(int n, Rng& rng);

/// n×r matrix with orthonormal columns, Haar on the Stiefel manifold.
ComplexMatrix random_stiefel(int n, int r, Rng& rng);

/// Hermitian matrix (G + G^*)/2 with G Ginibre.
ComplexMatrix random_hermitian(int dim, Rng& rng);

BipartiteVector random_unit_vector(BipartiteDims dims, Rng& rng);

/// Orthonormal Q factor of x with a real positive R diagonal.
ComplexMatrix orthonormalize(const ComplexMatrix& x);

}  // namespace fracpos
