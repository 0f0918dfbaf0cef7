#ifndef PTCS_PTCS_HPP
#define PTCS_PTCS_HPP

// Umbrella header for the whole library.

#include "ptcs/error.hpp"
#include "ptcs/results.hpp"
#include "ptcs/specfun.hpp"
#include "ptcs/bessel.hpp"
#include "ptcs/quad.hpp"
#include "ptcs/grid.hpp"
#include "ptcs/spt.hpp"
#include "ptcs/epscs.hpp"
#include "ptcs/identity.hpp"
#include "ptcs/laghankel.hpp"
#include "ptcs/report.hpp"
#include "ptcs/verify.hpp"

#endif  // PTCS_PTCS_HPP
