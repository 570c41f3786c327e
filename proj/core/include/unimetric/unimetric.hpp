#pragma once

// Umbrella header: uniformity metrics for learned representations.

#include "unimetric/csv.hpp"
#include "unimetric/embedding.hpp"
#include "unimetric/errors.hpp"
#include "unimetric/experiments.hpp"
#include "unimetric/linalg.hpp"
#include "unimetric/metrics.hpp"
#include "unimetric/rng.hpp"
#include "unimetric/synthetic.hpp"
#include "unimetric/transforms.hpp"
