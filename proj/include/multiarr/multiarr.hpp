#pragma once

#include "multiarr/field.hpp"
#include "multiarr/hpoly.hpp"
#include "multiarr/linalg.hpp"
#include "multiarr/poly_det.hpp"
#include "multiarr/arrangement.hpp"
#include "multiarr/derivation.hpp"
#include "multiarr/rank2.hpp"
#include "multiarr/euler.hpp"
#include "multiarr/freeness.hpp"
#include "multiarr/ifm.hpp"
#include "multiarr/arrangement_io.hpp"
#include "multiarr/certificate_io.hpp"
#include "multiarr/catalogue.hpp"
#include "multiarr/reproduce.hpp"
