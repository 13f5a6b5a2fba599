#pragma once

#include "oberforge/construct.hpp"
#include "oberforge/factor.hpp"
#include "oberforge/group.hpp"
#include "oberforge/json_io.hpp"
#include "oberforge/search.hpp"
#include "oberforge/starter.hpp"
