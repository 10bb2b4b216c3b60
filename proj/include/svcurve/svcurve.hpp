#pragma once

#include "bounds.hpp"
#include "branch.hpp"
#include "classicality.hpp"
#include "curve.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "gf.hpp"
#include "parser.hpp"
#include "report.hpp"
#include "series.hpp"
#include "univar.hpp"
