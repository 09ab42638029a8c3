#pragma once

#include "gsm/error.hpp"
#include "gsm/clifford.hpp"
#include "gsm/multi_index.hpp"
#include "gsm/function_algebra.hpp"
#include "gsm/parallel.hpp"
#include "gsm/sampling.hpp"
#include "gsm/quadrature.hpp"
#include "gsm/ck_extension.hpp"
#include "gsm/bargmann.hpp"
#include "gsm/report.hpp"
#include "gsm/suites.hpp"
