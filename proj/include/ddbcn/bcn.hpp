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
  \file bcn.hpp
  \brief Boolean control networks in algebraic form

  A BCN with N states, M inputs and P outputs is the pair (L, H) with
  x(t+1) = L |x u(t) |x x(t) and y(t) = H x(t). Column (i-1)N + j of L is the
  successor of state delta_N^j under input delta_M^i, so L splits into the M
  subsystem blocks L_1, ..., L_M.
*/

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "logic.hpp"

namespace ddbcn
{

struct dimensions
{
  std::size_t states = 1u;  /*!< N */
  std::size_t inputs = 1u;  /*!< M */
  std::size_t outputs = 1u; /*!< P */

  bool operator==( const dimensions& ) const = default;
};

/*! \brief autonomous Boolean network x(t+1) = L x(t) */
class bn
{
public:
  explicit bn( logical_matrix l ) : l_( std::move( l ) )
  {
    if ( l_.rows() != l_.cols() )
      throw dimension_mismatch( "Boolean network matrix must be square" );
  }

  std::size_t states() const noexcept { return l_.rows(); }
  const logical_matrix& matrix() const noexcept { return l_; }
  std::size_t successor( std::size_t j ) const { return l_.index( j ); }

  bool operator==( const bn& ) const = default;

private:
  logical_matrix l_;
};

/*! \brief state feedback u = K x; column j is the input applied in state j */
class feedback_matrix
{
public:
  explicit feedback_matrix( logical_matrix k ) : k_( std::move( k ) ) {}

  feedback_matrix( std::size_t inputs, std::vector<std::size_t> columns ) : k_( inputs, std::move( columns ) ) {}

  std::size_t inputs() const noexcept { return k_.rows(); }
  std::size_t states() const noexcept { return k_.cols(); }
  std::size_t input( std::size_t state ) const { return k_.index( state ); }
  const logical_matrix& matrix() const noexcept { return k_; }

  bool operator==( const feedback_matrix& ) const = default;

private:
  logical_matrix k_;
};

class bcn
{
public:
  bcn( dimensions dims, logical_matrix l, logical_matrix h ) : dims_( dims ), l_( std::move( l ) ), h_( std::move( h ) )
  {
    if ( dims_.states == 0u || dims_.inputs == 0u || dims_.outputs == 0u )
      throw invalid_argument( "BCN dimensions must be positive" );
    if ( l_.rows() != dims_.states || l_.cols() != dims_.states * dims_.inputs )
      throw dimension_mismatch( "L must be N x NM" );
    if ( h_.rows() != dims_.outputs || h_.cols() != dims_.states )
      throw dimension_mismatch( "H must be P x N" );
  }

  const dimensions& dims() const noexcept { return dims_; }
  std::size_t states() const noexcept { return dims_.states; }
  std::size_t inputs() const noexcept { return dims_.inputs; }
  std::size_t outputs() const noexcept { return dims_.outputs; }

  const logical_matrix& transition_matrix() const noexcept { return l_; }
  const logical_matrix& output_matrix() const noexcept { return h_; }

  /*! \brief index of the successor of state j under input i */
  std::size_t successor( std::size_t input, std::size_t state ) const
  {
    check_input( input );
    check_state( state );
    return l_.index( ( input - 1u ) * dims_.states + state );
  }

  std::size_t output( std::size_t state ) const
  {
    check_state( state );
    return h_.index( state );
  }

  /*! \brief the subsystem block L_i */
  logical_matrix block( std::size_t input ) const
  {
    check_input( input );
    const auto first = l_.indices().begin() + static_cast<std::ptrdiff_t>( ( input - 1u ) * dims_.states );
    return logical_matrix( dims_.states, std::vector<std::size_t>( first, first + static_cast<std::ptrdiff_t>( dims_.states ) ) );
  }

  bool operator==( const bcn& ) const = default;

private:
  void check_state( std::size_t j ) const
  {
    if ( j < 1u || j > dims_.states )
      throw index_out_of_range( "state " + std::to_string( j ) + " of " + std::to_string( dims_.states ) );
  }
  void check_input( std::size_t i ) const
  {
    if ( i < 1u || i > dims_.inputs )
      throw index_out_of_range( "input " + std::to_string( i ) + " of " + std::to_string( dims_.inputs ) );
  }

  dimensions dims_;
  logical_matrix l_;
  logical_matrix h_;
};

struct step_result
{
  canonical_vector next;
  canonical_vector output;
};

/*! \brief one update: x(t+1) = L |x u |x x and y(t) = H x(t) */
inline step_result step( const bcn& net, const canonical_vector& x, const canonical_vector& u )
{
  if ( x.dim() != net.states() || u.dim() != net.inputs() )
    throw dimension_mismatch( "step expects x in L_N and u in L_M" );
  return { canonical_vector{ net.states(), net.successor( u.index(), x.index() ) }, canonical_vector{ net.outputs(), net.output( x.index() ) } };
}

struct trajectory
{
  std::vector<canonical_vector> states;  /*!< x(0), ..., x(T) */
  std::vector<canonical_vector> outputs; /*!< y(0), ..., y(T-1) */
};

/*! \brief iterates `step`; y(T) is not reported */
inline trajectory simulate( const bcn& net, const canonical_vector& x0, std::span<const canonical_vector> inputs )
{
  if ( x0.dim() != net.states() )
    throw dimension_mismatch( "initial state dimension" );
  trajectory tr;
  tr.states.reserve( inputs.size() + 1u );
  tr.outputs.reserve( inputs.size() );
  tr.states.push_back( x0 );
  for ( const auto& u : inputs )
  {
    auto r = step( net, tr.states.back(), u );
    tr.outputs.push_back( r.output );
    tr.states.push_back( r.next );
  }
  return tr;
}

/*! \brief L_tot = L_1 v ... v L_M */
inline boolean_matrix l_tot( const bcn& net )
{
  boolean_matrix r( net.states(), net.states() );
  for ( std::size_t i = 1u; i <= net.inputs(); ++i )
    for ( std::size_t j = 1u; j <= net.states(); ++j )
      r.set( net.successor( i, j ), j );
  return r;
}

/*! \brief closed loop under u = K x, by column selection */
inline bn closed_loop( const bcn& net, const feedback_matrix& k )
{
  if ( k.inputs() != net.inputs() || k.states() != net.states() )
    throw dimension_mismatch( "feedback matrix must be M x N" );
  std::vector<std::size_t> cols( net.states() );
  for ( std::size_t j = 1u; j <= net.states(); ++j )
    cols[j - 1u] = net.successor( k.input( j ), j );
  return bn( logical_matrix( net.states(), std::move( cols ) ) );
}

/*! \brief closed loop as L_K = L |x K |x Phi_N */
inline bn closed_loop_stp( const bcn& net, const feedback_matrix& k )
{
  if ( k.inputs() != net.inputs() || k.states() != net.states() )
    throw dimension_mismatch( "feedback matrix must be M x N" );
  return bn( stp( stp( net.transition_matrix(), k.matrix() ), power_reducing_matrix( net.states() ) ) );
}

struct state_input
{
  std::size_t state = 1u;
  std::size_t input = 1u;
  bool operator==( const state_input& ) const = default;
  auto operator<=>( const state_input& ) const = default;
};

/*! \brief all (state, input) pairs with L u x = x, sorted by state then input */
inline std::vector<state_input> model_equilibria( const bcn& net )
{
  std::vector<state_input> out;
  for ( std::size_t j = 1u; j <= net.states(); ++j )
    for ( std::size_t i = 1u; i <= net.inputs(); ++i )
      if ( net.successor( i, j ) == j )
        out.push_back( { j, i } );
  return out;
}

/*! \brief states reachable from `from` in the digraph of L_tot, sorted */
inline std::vector<std::size_t> model_reachable_set( const bcn& net, std::size_t from )
{
  const auto g = to_digraph( l_tot( net ) );
  if ( from < 1u || from > g.nodes )
    throw index_out_of_range( "state " + std::to_string( from ) );
  std::vector<bool> seen( g.nodes + 1u, false );
  std::vector<std::size_t> queue{ from };
  seen[from] = true;
  for ( std::size_t head = 0u; head < queue.size(); ++head )
    for ( auto s : g.successors[queue[head] - 1u] )
      if ( !seen[s] )
      {
        seen[s] = true;
        queue.push_back( s );
      }
  std::sort( queue.begin(), queue.end() );
  return queue;
}

/*! \brief BCN with every column of L and H drawn uniformly */
template<typename Rng>
bcn random_bcn( dimensions dims, Rng& rng )
{
  std::uniform_int_distribution<std::size_t> state_dist( 1u, dims.states );
  std::uniform_int_distribution<std::size_t> output_dist( 1u, dims.outputs );
  std::vector<std::size_t> l( dims.states * dims.inputs );
  for ( auto& c : l )
    c = state_dist( rng );
  std::vector<std::size_t> h( dims.states );
  for ( auto& c : h )
    c = output_dist( rng );
  return bcn( dims, logical_matrix( dims.states, std::move( l ) ), logical_matrix( dims.outputs, std::move( h ) ) );
}

inline bcn random_bcn( dimensions dims, std::uint64_t seed )
{
  std::mt19937_64 rng( seed );
  return random_bcn( dims, rng );
}

} // namespace ddbcn
