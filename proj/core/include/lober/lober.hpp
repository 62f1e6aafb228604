#pragma once

#include "lober/classes.hpp"
#include "lober/densify.hpp"
#include "lober/errors.hpp"
#include "lober/fixtures.hpp"
#include "lober/geometry.hpp"
#include "lober/intersect.hpp"
#include "lober/io.hpp"
#include "lober/parallel.hpp"
#include "lober/winding.hpp"
