#pragma once

#include "hmix/census.hpp"
#include "hmix/eisenstein.hpp"
#include "hmix/error.hpp"
#include "hmix/multigraph.hpp"
#include "hmix/spectral.hpp"
#include "hmix/switching.hpp"
