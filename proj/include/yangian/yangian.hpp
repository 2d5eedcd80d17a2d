#pragma once

#include "acceptance.hpp"
#include "cartan.hpp"
#include "coxeter.hpp"
#include "criteria.hpp"
#include "errors.hpp"
#include "explicit_reps.hpp"
#include "json_io.hpp"
#include "laurent.hpp"
#include "pole_engine.hpp"
#include "q_cartan.hpp"
#include "rational.hpp"
#include "spectral.hpp"
#include "sparse.hpp"
#include "upoly.hpp"
