#pragma once

#include "vtcode/analysis.hpp"
#include "vtcode/channel.hpp"
#include "vtcode/core.hpp"
#include "vtcode/decoder.hpp"
#include "vtcode/oracle.hpp"
#include "vtcode/simulation.hpp"
#include "vtcode/vt_code.hpp"
