#ifndef PUSHCAT_SSET_HPP
#define PUSHCAT_SSET_HPP

#include "pushcat/sset/cylinder.hpp"
#include "pushcat/sset/homology.hpp"
#include "pushcat/sset/nerve.hpp"
#include "pushcat/sset/simplicial_set.hpp"
#include "pushcat/sset/smith.hpp"

#endif  // PUSHCAT_SSET_HPP
