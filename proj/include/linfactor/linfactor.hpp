#pragma once

#include "linfactor/construct.hpp"
#include "linfactor/distribution.hpp"
#include "linfactor/error.hpp"
#include "linfactor/explicit.hpp"
#include "linfactor/ext.hpp"
#include "linfactor/factor.hpp"
#include "linfactor/field.hpp"
#include "linfactor/field_spec.hpp"
#include "linfactor/linearized.hpp"
#include "linfactor/numtheory.hpp"
#include "linfactor/poly.hpp"
#include "linfactor/poly_text.hpp"
#include "linfactor/polyarith.hpp"
