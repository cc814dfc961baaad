#pragma once

#include "ribbon/cayley.hpp"
#include "ribbon/classify.hpp"
#include "ribbon/error.hpp"
#include "ribbon/group.hpp"
#include "ribbon/io.hpp"
#include "ribbon/iso.hpp"
#include "ribbon/map.hpp"
#include "ribbon/surface.hpp"
