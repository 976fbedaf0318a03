#pragma once

// Umbrella header: one-mode bosonic Gaussian channel toolkit.

#include "gck/canonical.hpp"
#include "gck/capacity.hpp"
#include "gck/channel.hpp"
#include "gck/degradability.hpp"
#include "gck/dilation.hpp"
#include "gck/error.hpp"
#include "gck/mat.hpp"
#include "gck/tolerance.hpp"
