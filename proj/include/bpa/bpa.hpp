#pragma once

// Umbrella header for the barred-preferential-arrangement toolkit.

#include "bpa/arrangement.hpp"
#include "bpa/asymptotics.hpp"
#include "bpa/bignat.hpp"
#include "bpa/bijections.hpp"
#include "bpa/cache.hpp"
#include "bpa/enumerate.hpp"
#include "bpa/errors.hpp"
#include "bpa/exact.hpp"
#include "bpa/format.hpp"
#include "bpa/real.hpp"
#include "bpa/report.hpp"
#include "bpa/sequence_table.hpp"
#include "bpa/series.hpp"
#include "bpa/verify.hpp"
