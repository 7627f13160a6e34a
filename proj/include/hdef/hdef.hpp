#pragma once

#include "hdef/scalar.hpp"
#include "hdef/poly.hpp"
#include "hdef/inner_product.hpp"
#include "hdef/weyl.hpp"
#include "hdef/series.hpp"
#include "hdef/hermite.hpp"
#include "hdef/matrix.hpp"
#include "hdef/deformation.hpp"
#include "hdef/ncqm.hpp"
#include "hdef/lie.hpp"
#include "hdef/dictionary.hpp"
