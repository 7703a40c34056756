#pragma once

#include "dqf/algebra.hpp"
#include "dqf/dualfactor.hpp"
#include "dqf/error.hpp"
#include "dqf/expr.hpp"
#include "dqf/factorize.hpp"
#include "dqf/json.hpp"
#include "dqf/kinematics.hpp"
#include "dqf/poly.hpp"
#include "dqf/realfactor.hpp"
#include "dqf/tolerance.hpp"
