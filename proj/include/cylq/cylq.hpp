#pragma once

// Umbrella header for the cylinder quantum dynamics library.

#include "cylq/closed_forms.hpp"
#include "cylq/config.hpp"
#include "cylq/csv.hpp"
#include "cylq/errors.hpp"
#include "cylq/hermite.hpp"
#include "cylq/jacobi_eigen.hpp"
#include "cylq/oracle.hpp"
#include "cylq/perturbation.hpp"
#include "cylq/quadrature.hpp"
#include "cylq/render.hpp"
#include "cylq/series.hpp"
#include "cylq/sho_basis.hpp"
#include "cylq/spin.hpp"
#include "cylq/spinless.hpp"
#include "cylq/spinor_profile.hpp"
#include "cylq/version.hpp"
