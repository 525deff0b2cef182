#pragma once

#include "hooklab/cores.hpp"
#include "hooklab/hook_expansions.hpp"
#include "hooklab/macdonald.hpp"
#include "hooklab/partition.hpp"
#include "hooklab/rational.hpp"
#include "hooklab/series.hpp"
