#pragma once

// Umbrella header: ground states of Lap(u) - u + u^p = 0, the scalar
// consistency analysis of the globally coupled problem
// Lap(A) - A + A^p - k A int A^2 = 0, and numerical certification.

#include "gcs/coupling.hpp"
#include "gcs/errors.hpp"
#include "gcs/ground_state.hpp"
#include "gcs/io.hpp"
#include "gcs/ode.hpp"
#include "gcs/quadrature.hpp"
#include "gcs/rational.hpp"
#include "gcs/roots.hpp"
#include "gcs/solve.hpp"
#include "gcs/verification.hpp"
