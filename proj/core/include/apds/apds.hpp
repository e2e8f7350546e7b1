#pragma once

#include "apds/atom.hpp"
#include "apds/certify.hpp"
#include "apds/complement.hpp"
#include "apds/decide.hpp"
#include "apds/error.hpp"
#include "apds/normalize.hpp"
#include "apds/oracle.hpp"
#include "apds/proof.hpp"
#include "apds/proof_io.hpp"
#include "apds/rule.hpp"
#include "apds/saturate.hpp"
#include "apds/symbol.hpp"
#include "apds/system.hpp"
