/* ddbcn: data-driven analysis and control of Boolean control networks
 * Copyright (C) 2026  ddbcn contributors
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/*!
  \file synthesis.hpp
  \brief state-feedback synthesis for safe control and output regulation

  A feedback synthesized here only uses (input, state) pairs whose successor
  was observed, so it behaves identically on every network compatible with
  the data.
*/

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "analysis.hpp"
#include "bcn.hpp"
#include "data.hpp"
#include "errors.hpp"

namespace ddbcn
{

struct safe_control_result
{
  bool solvable = false;
  std::optional<feedback_matrix> feedback;
  std::vector<std::size_t> unsafe_states;
  std::vector<std::size_t> safe_states;
  /*! input keeping a safe state inside the safe set (indexed by state - 1) */
  std::vector<std::optional<std::size_t>> stay_inputs;
  /*! input moving an unsafe state one layer closer to the safe set */
  std::vector<std::optional<std::size_t>> approach_inputs;
  /*! safe states for which no data transition stays safe */
  std::vector<std::size_t> missing_stay;
  /*! backward layers from the safe set */
  basin_result certificate;
};

/*! \brief decides informativity for safe control w.r.t. `unsafe` and builds K

  A safe state must have an observed transition back into the safe set,
  and the data must certify that every state reaches the safe set. K is
  only materialized when both hold.
*/
inline safe_control_result safe_control( const data_set& ds, std::span<const std::size_t> unsafe )
{
  const auto n = ds.states();
  const auto is_unsafe = detail::membership( n, unsafe, "unsafe" );

  safe_control_result r;
  r.unsafe_states = detail::sorted_unique( unsafe );
  for ( std::size_t j = 1u; j <= n; ++j )
    if ( !is_unsafe[j] )
      r.safe_states.push_back( j );
  if ( r.safe_states.empty() )
    throw empty_safe_set();

  r.stay_inputs.assign( n, std::nullopt );
  for ( std::size_t k = 1u; k <= ds.samples(); ++k )
  {
    const auto from = ds.xp().index( k );
    const auto to = ds.xf().index( k );
    if ( !is_unsafe[from] && !is_unsafe[to] && !r.stay_inputs[from - 1u] )
      r.stay_inputs[from - 1u] = ds.up().index( k );
  }
  for ( auto j : r.safe_states )
    if ( !r.stay_inputs[j - 1u] )
      r.missing_stay.push_back( j );

  r.certificate = basin( ds, r.safe_states );
  r.approach_inputs = r.certificate.inputs;

  r.solvable = r.missing_stay.empty() && r.certificate.covers( n );
  if ( r.solvable )
  {
    std::vector<std::size_t> k( n );
    for ( std::size_t j = 1u; j <= n; ++j )
    {
      const auto& stay = r.stay_inputs[j - 1u];
      const auto& approach = r.approach_inputs[j - 1u];
      if ( stay.has_value() == approach.has_value() )
        throw error( "safe control: state " + std::to_string( j ) + " needs exactly one assigned input" );
      k[j - 1u] = stay ? *stay : *approach;
    }
    r.feedback.emplace( ds.inputs(), std::move( k ) );
  }
  return r;
}

/*! \brief checks K against the data alone for safe control

  Every closed-loop column must be known, safe states must step into the
  safe set, and every state must hit the safe set within N steps.
*/
inline bool feedback_valid_on_data_safe( const knowledge_mask& mask, const feedback_matrix& k, std::span<const std::size_t> unsafe )
{
  const auto n = mask.dims().states;
  if ( k.states() != n || k.inputs() != mask.dims().inputs )
    throw dimension_mismatch( "feedback matrix must be M x N" );
  const auto is_unsafe = detail::membership( n, unsafe, "unsafe" );
  std::vector<std::size_t> next( n + 1u );
  for ( std::size_t j = 1u; j <= n; ++j )
  {
    auto s = mask.successor( k.input( j ), j );
    if ( !s )
      return false;
    if ( !is_unsafe[j] && is_unsafe[*s] )
      return false;
    next[j] = *s;
  }
  for ( std::size_t j = 1u; j <= n; ++j )
  {
    auto x = j;
    for ( std::size_t t = 0u; t < n && is_unsafe[x]; ++t )
      x = next[x];
    if ( is_unsafe[x] )
      return false;
  }
  return true;
}

struct regulation_result
{
  bool solvable = false;
  std::optional<feedback_matrix> feedback;
  std::size_t y_star = 1u;
  /*! X^d(y*) */
  std::vector<std::size_t> target_states;
  /*! every simple cycle inside X^d(y*) */
  cycle_set cycles;
  std::vector<std::size_t> cycle_nodes;
  /*! backward layers from the cycle nodes */
  basin_result certificate;
  /*! index into `cycles.cycles` whose edge input a cycle state uses */
  std::vector<std::optional<std::size_t>> chosen_cycle;
};

/*! \brief checks K against the data alone for output regulation to y_star

  Every closed-loop column must be known, and the periodic orbit every state
  falls into must consist of states observed with output y_star.
*/
inline bool feedback_valid_on_data_regulation( const knowledge_mask& mask, const feedback_matrix& k, std::size_t y_star )
{
  const auto n = mask.dims().states;
  if ( k.states() != n || k.inputs() != mask.dims().inputs )
    throw dimension_mismatch( "feedback matrix must be M x N" );
  std::vector<std::size_t> next( n + 1u );
  for ( std::size_t j = 1u; j <= n; ++j )
  {
    auto s = mask.successor( k.input( j ), j );
    if ( !s )
      return false;
    next[j] = *s;
  }
  for ( std::size_t j = 1u; j <= n; ++j )
  {
    auto x = j;
    for ( std::size_t t = 0u; t < n; ++t )
      x = next[x];
    /* x now lies on the periodic orbit */
    auto y = x;
    do
    {
      if ( mask.output( y ) != y_star )
        return false;
      y = next[y];
    } while ( y != x );
  }
  return true;
}

/*! \brief decides informativity for output regulation to y_star and builds K

  Solvable iff the data show at least one cycle inside X^d(y*) and every
  state is certified to reach the union of those cycles. A state lying on
  several cycles takes the edge of the first enumerated one.
*/
inline regulation_result output_regulation( const data_set& ds, std::size_t y_star, std::size_t cycle_cap = default_cycle_cap )
{
  const auto n = ds.states();
  regulation_result r;
  r.y_star = y_star;
  r.target_states = target_states( ds, y_star );
  r.chosen_cycle.assign( n, std::nullopt );

  std::vector<std::optional<std::size_t>> k( n );
  if ( !r.target_states.empty() )
  {
    r.cycles = cycles_within( ds, r.target_states, cycle_cap );
    for ( std::size_t c = 0u; c < r.cycles.cycles.size(); ++c )
    {
      const auto& cyc = r.cycles.cycles[c];
      for ( std::size_t e = 0u; e < cyc.nodes.size(); ++e )
      {
        const auto s = cyc.nodes[e];
        if ( r.chosen_cycle[s - 1u] )
          continue;
        r.chosen_cycle[s - 1u] = c;
        k[s - 1u] = cyc.edge_inputs[e];
      }
    }
  }
  for ( std::size_t j = 1u; j <= n; ++j )
    if ( r.chosen_cycle[j - 1u] )
      r.cycle_nodes.push_back( j );

  r.certificate = basin( ds, r.cycle_nodes );
  r.solvable = !r.cycles.cycles.empty() && r.certificate.covers( n );
  if ( r.solvable )
  {
    std::vector<std::size_t> cols( n );
    for ( std::size_t j = 1u; j <= n; ++j )
      cols[j - 1u] = k[j - 1u] ? *k[j - 1u] : r.certificate.inputs[j - 1u].value();
    r.feedback.emplace( ds.inputs(), std::move( cols ) );
    if ( !feedback_valid_on_data_regulation( ds.mask(), *r.feedback, y_star ) )
      throw error( "output regulation: assembled feedback fails the data-level check" );
  }
  return r;
}

} // namespace ddbcn
