#pragma once

#include "twoabs/budget.hpp"
#include "twoabs/constructions.hpp"
#include "twoabs/error.hpp"
#include "twoabs/homs.hpp"
#include "twoabs/instance_file.hpp"
#include "twoabs/localization.hpp"
#include "twoabs/module.hpp"
#include "twoabs/predicates.hpp"
#include "twoabs/ring.hpp"
#include "twoabs/subset.hpp"
#include "twoabs/verdict.hpp"
#include "twoabs/verifier/catalog.hpp"
#include "twoabs/verifier/family.hpp"
#include "twoabs/verifier/instance.hpp"
#include "twoabs/verifier/canned_examples.hpp"
#include "twoabs/verifier/statements.hpp"
#include "twoabs/verifier/sweep.hpp"
