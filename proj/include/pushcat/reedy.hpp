#ifndef PUSHCAT_REEDY_HPP
#define PUSHCAT_REEDY_HPP

#include "pushcat/reedy/complement.hpp"
#include "pushcat/reedy/extension.hpp"
#include "pushcat/reedy/square.hpp"
#include "pushcat/reedy/structure.hpp"

#endif  // PUSHCAT_REEDY_HPP
