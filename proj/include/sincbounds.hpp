#pragma once

#include "sincbounds/bounds.hpp"
#include "sincbounds/constants.hpp"
#include "sincbounds/dd.hpp"
#include "sincbounds/enclosure.hpp"
#include "sincbounds/extended_param.hpp"
#include "sincbounds/format.hpp"
#include "sincbounds/inverse_bounds.hpp"
#include "sincbounds/kernel.hpp"
#include "sincbounds/means.hpp"
#include "sincbounds/roots.hpp"
#include "sincbounds/si.hpp"
#include "sincbounds/verifier/probes.hpp"
#include "sincbounds/verifier/registry.hpp"
#include "sincbounds/verifier/sharpness.hpp"
