#pragma once

#include "qeuler/int_poly.hpp"
#include "qeuler/laurent_xy.hpp"
#include "qeuler/numeric.hpp"
#include "qeuler/poly_q.hpp"
#include "qeuler/q_euler.hpp"
#include "qeuler/rat_q.hpp"
#include "qeuler/rational.hpp"
#include "qeuler/real.hpp"
#include "qeuler/report.hpp"
#include "qeuler/verify.hpp"
#include "qeuler/zeta.hpp"
