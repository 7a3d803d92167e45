#pragma once

#include "oligoforge/codegen.hpp"
#include "oligoforge/enumeration.hpp"
#include "oligoforge/errors.hpp"
#include "oligoforge/folding.hpp"
#include "oligoforge/power_series.hpp"
#include "oligoforge/report.hpp"
#include "oligoforge/seqcore.hpp"
