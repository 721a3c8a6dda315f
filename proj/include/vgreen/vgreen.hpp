#pragma once

#include "vgreen/closedform.hpp"
#include "vgreen/closedform_is.hpp"
#include "vgreen/closedform_t.hpp"
#include "vgreen/combinatorics.hpp"
#include "vgreen/elements.hpp"
#include "vgreen/enumerate.hpp"
#include "vgreen/errors.hpp"
#include "vgreen/green.hpp"
#include "vgreen/structure_maps.hpp"
#include "vgreen/text.hpp"
#include "vgreen/variant.hpp"
