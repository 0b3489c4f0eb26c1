#pragma once

#include "errors.hpp"
#include "padic.hpp"
#include "polynomial.hpp"
#include "quadform.hpp"
#include "rational.hpp"
#include "sqrt_ext.hpp"
#include "volumes.hpp"
#include "zeta.hpp"
