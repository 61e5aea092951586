#pragma once

#include "ribbon/arp_io.hpp"
#include "ribbon/arrow_presentation.hpp"
#include "ribbon/canonical.hpp"
#include "ribbon/duality.hpp"
#include "ribbon/minor_ops.hpp"
#include "ribbon/minor_search.hpp"
#include "ribbon/predicates.hpp"
#include "ribbon/verify.hpp"
