#ifndef CHAINLINES_CHAINLINES_HPP
#define CHAINLINES_CHAINLINES_HPP

#include <chainlines/chain_intersection.hpp>
#include <chainlines/chow_ring.hpp>
#include <chainlines/criteria.hpp>
#include <chainlines/errors.hpp>
#include <chainlines/finite_geometry.hpp>
#include <chainlines/variety_io.hpp>

#endif  // CHAINLINES_CHAINLINES_HPP
