#pragma once

// Finite commutative ring workbench: rings as explicit operation tables,
// complete ideal lattices, ideal-expansion functions, delta-J
// classification, transfer constructions (quotient, localization,
// idealization, subring), a corpus generator, the named verification
// checks, and a counterexample search language.

#include "deltaj/error.hpp"
#include "deltaj/ring.hpp"
#include "deltaj/ideal.hpp"
#include "deltaj/lattice.hpp"
#include "deltaj/hom.hpp"
#include "deltaj/module.hpp"
#include "deltaj/idealize.hpp"
#include "deltaj/localize.hpp"
#include "deltaj/expansion.hpp"
#include "deltaj/classify.hpp"
#include "deltaj/ring_spec.hpp"
#include "deltaj/corpus.hpp"
#include "deltaj/report.hpp"
#include "deltaj/checks.hpp"
#include "deltaj/search.hpp"
#include "deltaj/cli.hpp"
