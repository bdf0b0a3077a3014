#ifndef PATCHANT_PATCHANT_HPP
#define PATCHANT_PATCHANT_HPP

#include "patchant/constants.hpp"
#include "patchant/error.hpp"
#include "patchant/farfield.hpp"
#include "patchant/model.hpp"
#include "patchant/radiometry.hpp"
#include "patchant/report.hpp"
#include "patchant/spec_io.hpp"
#include "patchant/synthesis.hpp"
#include "patchant/units.hpp"

#endif
