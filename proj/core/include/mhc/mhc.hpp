#pragma once

#include "mhc/algebra.hpp"
#include "mhc/analysis.hpp"
#include "mhc/automaton.hpp"
#include "mhc/error.hpp"
#include "mhc/props.hpp"
#include "mhc/random.hpp"
#include "mhc/state_id.hpp"
#include "mhc/symbol.hpp"
#include "mhc/textio.hpp"
#include "mhc/trace.hpp"
