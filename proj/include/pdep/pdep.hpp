#pragma once

#include "pdep/armstrong.hpp"
#include "pdep/core_model.hpp"
#include "pdep/decide.hpp"
#include "pdep/engine.hpp"
#include "pdep/errors.hpp"
#include "pdep/fd_closure.hpp"
#include "pdep/oracle.hpp"
#include "pdep/parser.hpp"
#include "pdep/scc.hpp"
#include "pdep/team.hpp"
#include "pdep/uind.hpp"
