#pragma once

#include "rhomatch/certify.hpp"
#include "rhomatch/eigen.hpp"
#include "rhomatch/enumerate.hpp"
#include "rhomatch/families.hpp"
#include "rhomatch/format.hpp"
#include "rhomatch/graph.hpp"
#include "rhomatch/graph6.hpp"
#include "rhomatch/matching.hpp"
#include "rhomatch/quotient.hpp"
#include "rhomatch/report.hpp"
#include "rhomatch/sweeps.hpp"
#include "rhomatch/symmatrix.hpp"
#include "rhomatch/thresholds.hpp"
#include "rhomatch/verify.hpp"
