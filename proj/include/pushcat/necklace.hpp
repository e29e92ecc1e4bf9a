#ifndef PUSHCAT_NECKLACE_HPP
#define PUSHCAT_NECKLACE_HPP

#include "pushcat/necklace/necklace.hpp"
#include "pushcat/necklace/nerve_pushout.hpp"
#include "pushcat/necklace/segal.hpp"
#include "pushcat/necklace/word_oracle.hpp"

#endif  // PUSHCAT_NECKLACE_HPP
