#ifndef BREUIL_BREUIL_HPP
#define BREUIL_BREUIL_HPP

#include "breuil/base_algebra.hpp"
#include "breuil/chain_ring.hpp"
#include "breuil/characters.hpp"
#include "breuil/rank1.hpp"
#include "breuil/fl_rank1.hpp"
#include "breuil/report.hpp"
#include "breuil/brmod.hpp"
#include "breuil/brmod_json.hpp"
#include "breuil/gee331.hpp"
#include "breuil/sweep.hpp"

#endif  // BREUIL_BREUIL_HPP
