#pragma once

#include "hurwitz/chamber.hpp"
#include "hurwitz/class_algebra.hpp"
#include "hurwitz/closed_forms.hpp"
#include "hurwitz/engine.hpp"
#include "hurwitz/fourier_motzkin.hpp"
#include "hurwitz/interpolate.hpp"
#include "hurwitz/linear_solve.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/poly.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/set_partition.hpp"
#include "hurwitz/trees.hpp"
