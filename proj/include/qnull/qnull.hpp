#ifndef QNULL_QNULL_HPP
#define QNULL_QNULL_HPP

#include "qnull/certio.hpp"
#include "qnull/coordbridge.hpp"
#include "qnull/cpoly.hpp"
#include "qnull/groebner.hpp"
#include "qnull/ncpoly.hpp"
#include "qnull/nullsatz.hpp"
#include "qnull/parse.hpp"
#include "qnull/quaternion.hpp"
#include "qnull/rational.hpp"

#endif  // QNULL_QNULL_HPP
