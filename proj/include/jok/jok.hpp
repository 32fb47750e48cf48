// Umbrella header.
#pragma once

#include "jok/algebra.hpp"
#include "jok/correspondence.hpp"
#include "jok/crosscheck.hpp"
#include "jok/errors.hpp"
#include "jok/json_io.hpp"
#include "jok/orbits.hpp"
#include "jok/peirce.hpp"
#include "jok/polynomial.hpp"
#include "jok/rng.hpp"
#include "jok/spectral.hpp"
#include "jok/verify.hpp"
