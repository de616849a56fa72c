#pragma once

#include "bvl/beauville.hpp"
#include "bvl/catalog.hpp"
#include "bvl/certificate.hpp"
#include "bvl/conjugacy.hpp"
#include "bvl/counting.hpp"
#include "bvl/group.hpp"
#include "bvl/numtheory.hpp"
#include "bvl/permutation.hpp"
#include "bvl/triple.hpp"
