#pragma once

#include "cft/fenwick/base.hpp"
#include "cft/fenwick/classical.hpp"
#include "cft/fenwick/common.hpp"
#include "cft/fenwick/level.hpp"
#include "cft/fenwick/naive.hpp"
#include "cft/fenwick/paths.hpp"
#include "cft/fenwick/variant.hpp"
