#ifndef QRAC_QRAC_HPP
#define QRAC_QRAC_HPP

#include "matrix.hpp"
#include "eig.hpp"
#include "encoding.hpp"
#include "channels.hpp"
#include "protocol.hpp"
#include "seesaw.hpp"
#include "threshold.hpp"
#include "sweep.hpp"

#endif
