#ifndef WEYL_WEYL_HPP
#define WEYL_WEYL_HPP

#include <weyl/cpoly.hpp>
#include <weyl/errors.hpp>
#include <weyl/gaussian.hpp>
#include <weyl/hermite_oracle.hpp>
#include <weyl/poly_realization.hpp>
#include <weyl/rational.hpp>
#include <weyl/ratpoly.hpp>
#include <weyl/report.hpp>
#include <weyl/runner.hpp>
#include <weyl/special_sequences.hpp>
#include <weyl/text.hpp>
#include <weyl/weyl_algebra.hpp>

#endif
