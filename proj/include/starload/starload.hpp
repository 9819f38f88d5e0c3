#pragma once

#include "closedform.hpp"
#include "config.hpp"
#include "emit.hpp"
#include "model.hpp"
#include "presets.hpp"
#include "reference_tables.hpp"
#include "replay.hpp"
#include "report.hpp"
#include "searchopt.hpp"
#include "speedup.hpp"
