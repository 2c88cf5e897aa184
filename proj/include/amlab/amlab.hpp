#ifndef AMLAB_AMLAB_HPP
#define AMLAB_AMLAB_HPP

#include "amlab/error.hpp"
#include "amlab/gf.hpp"
#include "amlab/poly1.hpp"
#include "amlab/poly2.hpp"
#include "amlab/rational.hpp"
#include "amlab/text.hpp"
#include "amlab/grp.hpp"
#include "amlab/curve.hpp"
#include "amlab/ascover.hpp"
#include "amlab/zeta.hpp"
#include "amlab/pipeline.hpp"

#endif  // AMLAB_AMLAB_HPP
