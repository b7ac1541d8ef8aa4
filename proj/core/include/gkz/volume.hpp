#pragma once

#include "gkz/intmatrix.hpp"

namespace gkz {

// Normalized lattice volume of conv(columns of A) inside the hyperplane
// {1} x Z^(d-1), computed by an incremental placing triangulation in column
// order. Throws DegenerateConfiguration when the hull has dimension < d-1.
BigInt normalized_volume(const IntMatrix& A);

}  // namespace gkz
