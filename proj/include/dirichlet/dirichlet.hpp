#ifndef DIRICHLET_DIRICHLET_HPP
#define DIRICHLET_DIRICHLET_HPP

// Everything except the JSON views (report.hpp) and the acceptance suite.

#include "dirichlet/bounds.hpp"
#include "dirichlet/error.hpp"
#include "dirichlet/estimate.hpp"
#include "dirichlet/frequency.hpp"
#include "dirichlet/io.hpp"
#include "dirichlet/neder.hpp"
#include "dirichlet/perron.hpp"
#include "dirichlet/quadrature.hpp"
#include "dirichlet/random.hpp"
#include "dirichlet/riesz.hpp"
#include "dirichlet/series.hpp"

#endif
