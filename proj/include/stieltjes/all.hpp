#ifndef STIELTJES_ALL_HPP
#define STIELTJES_ALL_HPP

// Umbrella header: pulls in the whole header-only library.

#include "stieltjes/numkernel.hpp"
#include "stieltjes/series.hpp"
#include "stieltjes/quadrature.hpp"
#include "stieltjes/zetacore.hpp"
#include "stieltjes/stieltjes.hpp"
#include "stieltjes/verify.hpp"

#endif
