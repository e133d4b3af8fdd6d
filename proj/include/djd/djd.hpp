#ifndef DJD_DJD_HPP
#define DJD_DJD_HPP

// Umbrella header: exact symbolic engine for the Drinfeld double of the
// Jordan plane, its Hopf structure, representation theory, the quotient map
// to U(sl2), the localization into a Weyl algebra, and the verification
// suites over all of it.

#include "djd/algebras.hpp"
#include "djd/distinguished.hpp"
#include "djd/element.hpp"
#include "djd/engine.hpp"
#include "djd/hopf.hpp"
#include "djd/json_io.hpp"
#include "djd/monomial.hpp"
#include "djd/parse.hpp"
#include "djd/presentation.hpp"
#include "djd/report.hpp"
#include "djd/reps.hpp"
#include "djd/rng.hpp"
#include "djd/scalar.hpp"
#include "djd/sl2_map.hpp"
#include "djd/suites.hpp"
#include "djd/tensor.hpp"
#include "djd/weyl_map.hpp"

#endif // DJD_DJD_HPP
