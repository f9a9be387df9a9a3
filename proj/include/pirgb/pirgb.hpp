#pragma once

#include <pirgb/ring.hpp>
#include <pirgb/monomial.hpp>
#include <pirgb/element.hpp>
#include <pirgb/order.hpp>
#include <pirgb/poly.hpp>
#include <pirgb/division.hpp>
#include <pirgb/groebner.hpp>
#include <pirgb/syzygy.hpp>
#include <pirgb/resolution.hpp>
#include <pirgb/oracle.hpp>
#include <pirgb/problem.hpp>
