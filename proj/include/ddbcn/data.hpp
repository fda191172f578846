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
  \file data.hpp
  \brief experiment traces, data matrices and what they reveal about the network

  Each experiment contributes T_i columns to the data matrices
  X_p = [x(0) ... x(T_i - 1)], X_f = [x(1) ... x(T_i)], U_p and Y_p, and the
  experiments are concatenated in order. No column ever spans two
  experiments.
*/

#pragma once

#include <cstddef>
#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bcn.hpp"
#include "errors.hpp"
#include "logic.hpp"

namespace ddbcn
{

/*! \brief one experiment; `outputs` is empty for output-free data */
struct experiment_trace
{
  std::vector<canonical_vector> states;
  std::vector<canonical_vector> inputs;
  std::vector<canonical_vector> outputs;
};

/*! \brief builds a trace from 1-based indices */
inline experiment_trace make_trace( const dimensions& dims, std::span<const std::size_t> x, std::span<const std::size_t> u,
                                    std::span<const std::size_t> y = {} )
{
  experiment_trace tr;
  for ( auto v : x )
    tr.states.emplace_back( dims.states, v );
  for ( auto v : u )
    tr.inputs.emplace_back( dims.inputs, v );
  for ( auto v : y )
    tr.outputs.emplace_back( dims.outputs, v );
  return tr;
}

inline experiment_trace make_trace( const dimensions&, const trajectory& traj, std::span<const canonical_vector> inputs )
{
  return experiment_trace{ traj.states, std::vector<canonical_vector>( inputs.begin(), inputs.end() ), traj.outputs };
}

/*! \brief the set B_d in digested form

  Column c = (i-1)N + j is known iff some data column has (u, x) = (i, j);
  the recorded successor is then the only one any compatible network may
  have there. Likewise for the output of every state seen in X_p.
*/
class knowledge_mask
{
public:
  knowledge_mask( dimensions dims, std::vector<std::optional<std::size_t>> successors, std::vector<std::optional<std::size_t>> outputs )
      : dims_( dims ), successors_( std::move( successors ) ), outputs_( std::move( outputs ) )
  {
  }

  const dimensions& dims() const noexcept { return dims_; }

  bool known( std::size_t input, std::size_t state ) const { return successors_.at( column( input, state ) - 1u ).has_value(); }

  std::optional<std::size_t> successor( std::size_t input, std::size_t state ) const { return successors_.at( column( input, state ) - 1u ); }

  std::optional<std::size_t> output( std::size_t state ) const { return outputs_.at( state - 1u ); }

  std::size_t known_columns() const
  {
    return static_cast<std::size_t>( std::count_if( successors_.begin(), successors_.end(), []( const auto& s ) { return s.has_value(); } ) );
  }

  /*! \brief unknown columns of L as (input, state) pairs, in column order */
  std::vector<state_input> free_columns() const
  {
    std::vector<state_input> out;
    for ( std::size_t i = 1u; i <= dims_.inputs; ++i )
      for ( std::size_t j = 1u; j <= dims_.states; ++j )
        if ( !known( i, j ) )
          out.push_back( { j, i } );
    return out;
  }

  /*! \brief states whose output was never observed */
  std::vector<std::size_t> free_outputs() const
  {
    std::vector<std::size_t> out;
    for ( std::size_t j = 1u; j <= dims_.states; ++j )
      if ( !outputs_[j - 1u] )
        out.push_back( j );
    return out;
  }

  /*! \brief true iff (L, H) agrees with every known column and output */
  bool compatible( const bcn& net ) const
  {
    if ( net.dims() != dims_ )
      return false;
    for ( std::size_t i = 1u; i <= dims_.inputs; ++i )
      for ( std::size_t j = 1u; j <= dims_.states; ++j )
        if ( auto s = successor( i, j ); s && *s != net.successor( i, j ) )
          return false;
    for ( std::size_t j = 1u; j <= dims_.states; ++j )
      if ( outputs_[j - 1u] && *outputs_[j - 1u] != net.output( j ) )
        return false;
    return true;
  }

private:
  std::size_t column( std::size_t input, std::size_t state ) const
  {
    if ( input < 1u || input > dims_.inputs || state < 1u || state > dims_.states )
      throw index_out_of_range( "(input, state) = (" + std::to_string( input ) + "," + std::to_string( state ) + ")" );
    return ( input - 1u ) * dims_.states + state;
  }

  dimensions dims_;
  std::vector<std::optional<std::size_t>> successors_;
  std::vector<std::optional<std::size_t>> outputs_;
};

class data_set
{
public:
  const dimensions& dims() const noexcept { return dims_; }
  std::size_t states() const noexcept { return dims_.states; }
  std::size_t inputs() const noexcept { return dims_.inputs; }
  std::size_t outputs() const noexcept { return dims_.outputs; }

  /*! \brief number of data columns T */
  std::size_t samples() const noexcept { return xp_.cols(); }

  bool has_outputs() const noexcept { return yp_.has_value(); }

  const std::vector<experiment_trace>& traces() const noexcept { return traces_; }
  const logical_matrix& xp() const noexcept { return xp_; }
  const logical_matrix& xf() const noexcept { return xf_; }
  const logical_matrix& up() const noexcept { return up_; }

  const logical_matrix& yp() const
  {
    if ( !yp_ )
      throw missing_outputs();
    return *yp_;
  }

  const knowledge_mask& mask() const noexcept { return mask_; }

private:
  friend data_set assemble( const dimensions&, std::vector<experiment_trace> );

  data_set( dimensions dims, std::vector<experiment_trace> traces, logical_matrix xp, logical_matrix xf, logical_matrix up,
            std::optional<logical_matrix> yp, knowledge_mask mask )
      : dims_( dims ), traces_( std::move( traces ) ), xp_( std::move( xp ) ), xf_( std::move( xf ) ), up_( std::move( up ) ),
        yp_( std::move( yp ) ), mask_( std::move( mask ) )
  {
  }

  dimensions dims_;
  std::vector<experiment_trace> traces_;
  logical_matrix xp_;
  logical_matrix xf_;
  logical_matrix up_;
  std::optional<logical_matrix> yp_;
  knowledge_mask mask_;
};

namespace detail
{

inline knowledge_mask build_mask( const dimensions& dims, const logical_matrix& xp, const logical_matrix& xf, const logical_matrix& up,
                                  const logical_matrix* yp )
{
  std::vector<std::optional<std::size_t>> succ( dims.states * dims.inputs );
  std::vector<std::optional<std::size_t>> out( dims.states );
  for ( std::size_t k = 1u; k <= xp.cols(); ++k )
  {
    const auto j = xp.index( k );
    const auto i = up.index( k );
    auto& s = succ[( i - 1u ) * dims.states + j - 1u];
    if ( s && *s != xf.index( k ) )
      throw inconsistent_data( "input " + std::to_string( i ) + " in state " + std::to_string( j ) + " leads to both " +
                               std::to_string( *s ) + " and " + std::to_string( xf.index( k ) ) + " (column " + std::to_string( k ) + ")" );
    s = xf.index( k );
    if ( yp )
    {
      auto& o = out[j - 1u];
      if ( o && *o != yp->index( k ) )
        throw inconsistent_data( "state " + std::to_string( j ) + " observed with outputs " + std::to_string( *o ) + " and " +
                                 std::to_string( yp->index( k ) ) );
      o = yp->index( k );
    }
  }
  return knowledge_mask( dims, std::move( succ ), std::move( out ) );
}

} // namespace detail

/*! \brief concatenates the experiments into X_p, X_f, U_p (and Y_p)

  Either every trace carries outputs or none does. Throws
  `inconsistent_data` when the traces cannot come from a single
  deterministic network.
*/
inline data_set assemble( const dimensions& dims, std::vector<experiment_trace> traces )
{
  if ( traces.empty() )
    throw invalid_argument( "no experiments" );
  if ( dims.states == 0u || dims.inputs == 0u || dims.outputs == 0u )
    throw invalid_argument( "dimensions must be positive" );

  const bool with_outputs = !traces.front().outputs.empty();
  std::vector<std::size_t> xp, xf, up, yp;
  for ( std::size_t e = 0u; e < traces.size(); ++e )
  {
    const auto& tr = traces[e];
    const auto where = " in experiment " + std::to_string( e + 1u );
    if ( tr.inputs.empty() )
      throw invalid_argument( "empty input sequence" + where );
    if ( tr.states.size() != tr.inputs.size() + 1u )
      throw dimension_mismatch( "expected " + std::to_string( tr.inputs.size() + 1u ) + " states, got " + std::to_string( tr.states.size() ) + where );
    if ( with_outputs != !tr.outputs.empty() )
      throw invalid_argument( "either all experiments carry outputs or none" );
    if ( with_outputs && tr.outputs.size() != tr.inputs.size() )
      throw dimension_mismatch( "expected " + std::to_string( tr.inputs.size() ) + " outputs, got " + std::to_string( tr.outputs.size() ) + where );
    for ( const auto& x : tr.states )
      if ( x.dim() != dims.states )
        throw dimension_mismatch( "state of dimension " + std::to_string( x.dim() ) + where );
    for ( const auto& u : tr.inputs )
      if ( u.dim() != dims.inputs )
        throw dimension_mismatch( "input of dimension " + std::to_string( u.dim() ) + where );
    for ( const auto& y : tr.outputs )
      if ( y.dim() != dims.outputs )
        throw dimension_mismatch( "output of dimension " + std::to_string( y.dim() ) + where );

    for ( std::size_t t = 0u; t < tr.inputs.size(); ++t )
    {
      xp.push_back( tr.states[t].index() );
      xf.push_back( tr.states[t + 1u].index() );
      up.push_back( tr.inputs[t].index() );
      if ( with_outputs )
        yp.push_back( tr.outputs[t].index() );
    }
  }

  logical_matrix xp_m( dims.states, std::move( xp ) );
  logical_matrix xf_m( dims.states, std::move( xf ) );
  logical_matrix up_m( dims.inputs, std::move( up ) );
  std::optional<logical_matrix> yp_m;
  if ( with_outputs )
    yp_m.emplace( dims.outputs, std::move( yp ) );
  auto mask = detail::build_mask( dims, xp_m, xf_m, up_m, yp_m ? &*yp_m : nullptr );
  return data_set( dims, std::move( traces ), std::move( xp_m ), std::move( xf_m ), std::move( up_m ), std::move( yp_m ), std::move( mask ) );
}

/*! \brief true iff U_p * X_p has no zero row, i.e. every (input, state) pair was observed */
inline bool is_informative_for_identifiability( const data_set& ds )
{
  const auto kr = boolean_matrix( khatri_rao( ds.up(), ds.xp() ) );
  for ( std::size_t r = 1u; r <= kr.rows(); ++r )
    if ( kr.row_is_zero( r ) )
      return false;
  return true;
}

/*! \brief recovers (L, H) from informative data

  L = X_f (.)_B (U_p * X_p)^T. H is read off the data column by column,
  which coincides with Y_p X_p^# whenever X_p has full row rank. Without
  output measurements H is returned as the trivial 1 x N matrix.
*/
inline bcn identify( const data_set& ds )
{
  if ( !is_informative_for_identifiability( ds ) )
    throw not_informative( "some (input, state) pair never appears in the data" );

  const auto l = boolean_product( boolean_matrix( ds.xf() ), boolean_matrix( khatri_rao( ds.up(), ds.xp() ) ).transpose() );
  const auto n = ds.states();
  if ( !ds.has_outputs() )
    return bcn( { n, ds.inputs(), 1u }, l.to_logical(), logical_matrix( 1u, std::vector<std::size_t>( n, 1u ) ) );

  std::vector<std::size_t> h( n, 0u );
  for ( std::size_t k = 1u; k <= ds.samples(); ++k )
    h[ds.xp().index( k ) - 1u] = ds.yp().index( k );
  return bcn( ds.dims(), l.to_logical(), logical_matrix( ds.outputs(), std::move( h ) ) );
}

/*! \brief L_tot^d = X_f (.)_B X_p^T; entry (i, j) is set iff the data show j -> i */
inline boolean_matrix l_tot_d( const data_set& ds )
{
  return boolean_product( boolean_matrix( ds.xf() ), boolean_matrix( ds.xp() ).transpose() );
}

} // namespace ddbcn
