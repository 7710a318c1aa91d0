#pragma once

#include "spinpa/error.hpp"
#include "spinpa/groups.hpp"
#include "spinpa/numerics.hpp"
#include "spinpa/qit_bridge.hpp"
#include "spinpa/spin_core.hpp"
#include "spinpa/subfactor.hpp"
#include "spinpa/tangle_ops.hpp"
