#pragma once

#include "errors.hpp"
#include "json_io.hpp"
#include "orbifold.hpp"
#include "path_algebra.hpp"
#include "poly.hpp"
#include "poly_matrix.hpp"
#include "projective.hpp"
#include "quiver.hpp"
#include "random.hpp"
#include "random_quiver.hpp"
#include "rational.hpp"
#include "resolution.hpp"
#include "stability.hpp"
