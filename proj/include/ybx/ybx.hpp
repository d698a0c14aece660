#pragma once

// Umbrella header: exact linear algebra, structure-constant algebras and
// identity checks, Yang-Baxter operator families, the quantum-gate family,
// and the symbolic tensor product.

#include "algebra.hpp"
#include "algebra_io.hpp"
#include "field.hpp"
#include "free_algebra.hpp"
#include "gates.hpp"
#include "matrix.hpp"
#include "report.hpp"
#include "scalar.hpp"
#include "tensor_product.hpp"
#include "yang_baxter.hpp"
