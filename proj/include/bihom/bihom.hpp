#pragma once

// Umbrella header.

#include "rational.hpp"
#include "monomial.hpp"
#include "partitions.hpp"
#include "polynomial.hpp"
#include "exact_matrix.hpp"
#include "genfun.hpp"
#include "transfer.hpp"
#include "spectral.hpp"
#include "serialization.hpp"
