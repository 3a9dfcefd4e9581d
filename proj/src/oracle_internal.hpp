#pragma once

#include "sfill/oracle.hpp"

namespace sfill::detail {

// Called for every visited set in addition to the census tally.
using LeafHook = void (*)(void* ctx, int worker, const AcyclicVisit& v);

CensusReport census_with_hook(int n, int d, int jobs, const Budget& budget, LeafHook hook, void* ctx);

}  // namespace sfill::detail
