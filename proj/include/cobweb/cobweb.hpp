#pragma once

#include "cobweb/admissibility.hpp"
#include "cobweb/error.hpp"
#include "cobweb/fnomial.hpp"
#include "cobweb/gfp.hpp"
#include "cobweb/incidence.hpp"
#include "cobweb/numeric.hpp"
#include "cobweb/packing.hpp"
#include "cobweb/partitions.hpp"
#include "cobweb/poset.hpp"
#include "cobweb/prefab.hpp"
#include "cobweb/sequence.hpp"
#include "cobweb/series.hpp"
