#pragma once

#include "pinniped/errors.hpp"
#include "pinniped/numerics.hpp"
#include "pinniped/limb_kinematics.hpp"
#include "pinniped/robot_model.hpp"
#include "pinniped/gait_synthesis.hpp"
#include "pinniped/analysis.hpp"
