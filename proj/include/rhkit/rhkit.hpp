#pragma once

#include "rhkit/eos.hpp"
#include "rhkit/error.hpp"
#include "rhkit/kinematics.hpp"
#include "rhkit/linalg.hpp"
#include "rhkit/riemann.hpp"
#include "rhkit/shock.hpp"
#include "rhkit/state.hpp"
#include "rhkit/tensors.hpp"
