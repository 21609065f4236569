#pragma once

// Umbrella header for the massbound library.

#include "massbound/bounds.hpp"
#include "massbound/cholesky.hpp"
#include "massbound/errors.hpp"
#include "massbound/estimation.hpp"
#include "massbound/io.hpp"
#include "massbound/matrix.hpp"
#include "massbound/modal.hpp"
#include "massbound/reference_systems.hpp"
#include "massbound/reproduce.hpp"
#include "massbound/svd.hpp"
#include "massbound/svg.hpp"
#include "massbound/sym_eigen.hpp"
