#pragma once

#include "hlz/foundations.hpp"
#include "hlz/rearrangement.hpp"
#include "hlz/lorentz_norms.hpp"
#include "hlz/hilbert_ops.hpp"
#include "hlz/search_config.hpp"
#include "hlz/weight_classes.hpp"
#include "hlz/experiments.hpp"
