#ifndef PUSHCAT_PUSHOUT_HPP
#define PUSHCAT_PUSHOUT_HPP

#include "pushcat/pushout/dwyer_pushout.hpp"
#include "pushcat/pushout/mapspace.hpp"
#include "pushcat/pushout/verify.hpp"

#endif  // PUSHCAT_PUSHOUT_HPP
