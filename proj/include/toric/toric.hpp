#pragma once

#include "toric/codes.hpp"
#include "toric/configuration.hpp"
#include "toric/errors.hpp"
#include "toric/evaluation.hpp"
#include "toric/gf.hpp"
#include "toric/graphs.hpp"
#include "toric/groebner.hpp"
#include "toric/hilbert.hpp"
#include "toric/ideals.hpp"
#include "toric/io.hpp"
#include "toric/linalg.hpp"
#include "toric/mpoly.hpp"
#include "toric/toricset.hpp"
#include "toric/verify.hpp"
#include "toric/zlat.hpp"
