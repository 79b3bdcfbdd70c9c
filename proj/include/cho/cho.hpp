#pragma once

#include "cho/analysis.hpp"
#include "cho/boundstate.hpp"
#include "cho/diagonalize.hpp"
#include "cho/error.hpp"
#include "cho/io.hpp"
#include "cho/linalg.hpp"
#include "cho/model.hpp"
#include "cho/spectrum.hpp"
