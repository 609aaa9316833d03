#pragma once

#include "sta/blade.hpp"
#include "sta/field.hpp"
#include "sta/json_io.hpp"
#include "sta/linalg.hpp"
#include "sta/matrix.hpp"
#include "sta/multivector.hpp"
#include "sta/planewave.hpp"
#include "sta/scalar.hpp"
#include "sta/random.hpp"
#include "sta/spinor.hpp"
#include "sta/verify.hpp"
