#pragma once

#include "teichcurve/beltrami.hpp"
#include "teichcurve/bers_map.hpp"
#include "teichcurve/boundary_maps.hpp"
#include "teichcurve/errors.hpp"
#include "teichcurve/metrics.hpp"
#include "teichcurve/series.hpp"
#include "teichcurve/variation.hpp"
