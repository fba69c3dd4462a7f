#pragma once

#include "hypertoric/analysis.hpp"
#include "hypertoric/error.hpp"
#include "hypertoric/gale.hpp"
#include "hypertoric/int_matrix.hpp"
#include "hypertoric/integer.hpp"
#include "hypertoric/intlinalg.hpp"
#include "hypertoric/sharp.hpp"
#include "hypertoric/terminalize.hpp"
