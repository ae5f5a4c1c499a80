#pragma once

#include "bundles.hpp"
#include "errors.hpp"
#include "expr.hpp"
#include "graded.hpp"
#include "kunneth.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "spaces.hpp"
#include "sw.hpp"
#include "verify.hpp"
