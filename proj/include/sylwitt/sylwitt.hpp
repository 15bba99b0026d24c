#pragma once

#include "sylwitt/electroweak.hpp"
#include "sylwitt/finite_difference.hpp"
#include "sylwitt/kernels.hpp"
#include "sylwitt/linalg.hpp"
#include "sylwitt/minkowski.hpp"
#include "sylwitt/sampling.hpp"
#include "sylwitt/time_reps.hpp"
#include "sylwitt/transmutators.hpp"
#include "sylwitt/verify.hpp"
