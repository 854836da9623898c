#pragma once

#include "ringlab/element_set.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/literal.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/report.hpp"
#include "ringlab/multiplicative_set.hpp"
#include "ringlab/hom.hpp"
#include "ringlab/module.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/s_bezout.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/nonnil.hpp"
#include "ringlab/zext.hpp"
#include "ringlab/harness.hpp"
#include "ringlab/dsl.hpp"
