#pragma once

// Convenience umbrella: pulls in the whole library.

#include "framepair/core.hpp"
#include "framepair/measure_grid.hpp"
#include "framepair/family.hpp"
#include "framepair/operators.hpp"
#include "framepair/vspace.hpp"
#include "framepair/partner.hpp"
#include "framepair/classify.hpp"
#include "framepair/pair.hpp"
#include "framepair/gallery.hpp"
#include "framepair/io.hpp"
#include "framepair/report.hpp"
#include "framepair/scenarios.hpp"
