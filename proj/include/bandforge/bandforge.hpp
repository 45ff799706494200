#ifndef BANDFORGE_BANDFORGE_HPP_
#define BANDFORGE_BANDFORGE_HPP_

#include "band.hpp"
#include "classify.hpp"
#include "conjugacy.hpp"
#include "errors.hpp"
#include "factor.hpp"
#include "fdtc.hpp"
#include "lcf.hpp"
#include "positivity.hpp"
#include "svg.hpp"
#include "tables.hpp"

#endif  // BANDFORGE_BANDFORGE_HPP_
