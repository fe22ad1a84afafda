#pragma once

#include "maxvar/stepfn.hpp"

namespace maxvar {

// Two unit bumps chi_[-c,-1] + chi_[1,c]; requires c in (1, 3).
StepFunction two_bump(const Rational& c);

// Bumps with a low plateau between them:
// chi_[-3/2,-1] + (2/5) chi_[-1/2,1/2] + chi_[1,3/2].
StepFunction plateau_bump();

// Four bumps around a unit vanishing interval:
// chi_[-5/2,-2] + chi_[-3/2,-1] + chi_[1,2] + chi_[3,7/2].
StepFunction four_bump();

// Resolve a CLI builtin name ("example-1-6" needs the parameter c).
StepFunction builtin_function(const std::string& name, const Rational& c);

}  // namespace maxvar
