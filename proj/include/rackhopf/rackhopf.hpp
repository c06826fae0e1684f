#pragma once

#include "rackhopf/errors.hpp"
#include "rackhopf/exact/cyclotomic.hpp"
#include "rackhopf/exact/matrix.hpp"
#include "rackhopf/exact/smith.hpp"
#include "rackhopf/exact/support.hpp"
#include "rackhopf/rack/perm.hpp"
#include "rackhopf/rack/finite_group.hpp"
#include "rackhopf/rack/rack.hpp"
#include "rackhopf/rack/catalog.hpp"
#include "rackhopf/braiding/cocycle.hpp"
#include "rackhopf/braiding/orbits.hpp"
#include "rackhopf/nichols/symmetrizer.hpp"
#include "rackhopf/nichols/minimal.hpp"
#include "rackhopf/group/presentation.hpp"
#include "rackhopf/group/todd_coxeter.hpp"
#include "rackhopf/group/covering.hpp"
#include "rackhopf/hopf/datum.hpp"
#include "rackhopf/hopf/slice.hpp"
#include "rackhopf/io/json.hpp"
