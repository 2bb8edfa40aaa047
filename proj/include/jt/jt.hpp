#pragma once

#include "jt/field.hpp"
#include "jt/exactnum.hpp"
#include "jt/gfp.hpp"
#include "jt/tensorspace.hpp"
#include "jt/full_model.hpp"
#include "jt/decomp.hpp"
#include "jt/gens.hpp"
#include "jt/verify.hpp"
