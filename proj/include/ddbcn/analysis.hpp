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
  \file analysis.hpp
  \brief questions that the data answer for every compatible network

  Everything here looks only at transitions that actually appear in the
  data. Whenever several data columns could serve as a witness, the one with
  the smallest column index k is used.
*/

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "data.hpp"
#include "errors.hpp"
#include "logic.hpp"

namespace ddbcn
{

namespace detail
{

inline std::vector<bool> membership( std::size_t n, std::span<const std::size_t> set, const char* what )
{
  std::vector<bool> in( n + 1u, false );
  for ( auto s : set )
  {
    if ( s < 1u || s > n )
      throw index_out_of_range( std::string( what ) + " state " + std::to_string( s ) );
    in[s] = true;
  }
  return in;
}

inline std::vector<std::size_t> sorted_unique( std::span<const std::size_t> set )
{
  std::vector<std::size_t> v( set.begin(), set.end() );
  std::sort( v.begin(), v.end() );
  v.erase( std::unique( v.begin(), v.end() ), v.end() );
  return v;
}

} // namespace detail

/*! \brief layered backward search from a target set

  `layers[0]` is the target. A state r lands in layer d when some data
  column moves r into layer d-1 and r sits in no earlier layer; `inputs[r-1]`
  then holds the input of the first such column and `witness[r-1]` its
  index k.
*/
struct basin_result
{
  std::vector<std::size_t> target;
  std::vector<std::vector<std::size_t>> layers;
  std::vector<std::size_t> basin;
  std::vector<std::optional<std::size_t>> layer_of;
  std::vector<std::optional<std::size_t>> inputs;
  std::vector<std::optional<std::size_t>> witness;

  bool covers( std::size_t n ) const noexcept { return basin.size() == n; }

  std::vector<std::size_t> outside() const
  {
    std::vector<std::size_t> out;
    for ( std::size_t j = 1u; j <= layer_of.size(); ++j )
      if ( !layer_of[j - 1u] )
        out.push_back( j );
    return out;
  }
};

/*! \brief basin of attraction of `target` as certified by the data

  An empty target is accepted and yields an empty basin.
*/
inline basin_result basin( const data_set& ds, std::span<const std::size_t> target )
{
  const auto n = ds.states();
  detail::membership( n, target, "target" );

  basin_result r;
  r.target = detail::sorted_unique( target );
  r.layer_of.assign( n, std::nullopt );
  r.inputs.assign( n, std::nullopt );
  r.witness.assign( n, std::nullopt );
  for ( auto s : r.target )
    r.layer_of[s - 1u] = 0u;

  std::vector<std::size_t> previous = r.target;
  while ( !previous.empty() )
  {
    r.layers.push_back( previous );
    const auto d = r.layers.size();
    std::vector<std::size_t> current;
    for ( std::size_t k = 1u; k <= ds.samples(); ++k )
    {
      const auto from = ds.xp().index( k );
      const auto to = ds.xf().index( k );
      if ( r.layer_of[to - 1u] != d - 1u || r.layer_of[from - 1u] )
        continue;
      r.layer_of[from - 1u] = d;
      r.inputs[from - 1u] = ds.up().index( k );
      r.witness[from - 1u] = k;
      current.push_back( from );
    }
    std::sort( current.begin(), current.end() );
    previous = std::move( current );
  }

  for ( std::size_t j = 1u; j <= n; ++j )
    if ( r.layer_of[j - 1u] )
      r.basin.push_back( j );
  return r;
}

/*! \brief true iff every compatible network can reach `target` from every state

  Evaluated as positivity of 1_target^T (I v L_tot^d v ... v (L_tot^d)^{N-1}).
*/
inline bool informative_for_reachability( const data_set& ds, std::span<const std::size_t> target )
{
  if ( target.empty() )
    throw invalid_argument( "empty target set" );
  const auto n = ds.states();
  detail::membership( n, target, "target" );
  const auto reach = or_of_powers( l_tot_d( ds ), n - 1u );
  for ( std::size_t j = 1u; j <= n; ++j )
  {
    bool hit = false;
    for ( auto t : target )
      hit = hit || reach.get( t, j );
    if ( !hit )
      return false;
  }
  return true;
}

/*! \brief states that are equilibria of every compatible network, with the input that fixes them */
inline std::vector<state_input> data_equilibria( const data_set& ds )
{
  std::vector<std::optional<std::size_t>> input( ds.states() );
  for ( std::size_t k = 1u; k <= ds.samples(); ++k )
  {
    const auto j = ds.xp().index( k );
    if ( j == ds.xf().index( k ) && !input[j - 1u] )
      input[j - 1u] = ds.up().index( k );
  }
  std::vector<state_input> out;
  for ( std::size_t j = 1u; j <= ds.states(); ++j )
    if ( input[j - 1u] )
      out.push_back( { j, *input[j - 1u] } );
  return out;
}

/*! \brief X^d(y*): states observed at least once while emitting y_star */
inline std::vector<std::size_t> target_states( const data_set& ds, std::size_t y_star )
{
  const auto& yp = ds.yp();
  if ( y_star < 1u || y_star > ds.outputs() )
    throw index_out_of_range( "output " + std::to_string( y_star ) );
  std::vector<std::size_t> out;
  for ( std::size_t k = 1u; k <= ds.samples(); ++k )
    if ( yp.index( k ) == y_star )
      out.push_back( ds.xp().index( k ) );
  return detail::sorted_unique( out );
}

struct cycle
{
  /*! distinct states; consecutive entries and the closing pair are data transitions */
  std::vector<std::size_t> nodes;
  /*! edge_inputs[e] drives nodes[e] to nodes[(e + 1) % size] */
  std::vector<std::size_t> edge_inputs;
};

struct cycle_set
{
  std::vector<cycle> cycles;
};

inline constexpr std::size_t default_cycle_cap = 1'000'000u;

/*! \brief enumerates every simple cycle of a digraph with Johnson's algorithm

  Nodes are 0-based here. Cycles come out grouped by their smallest node, in
  increasing order, each listed from that node. Throws `cap_exceeded` once
  more than `cap` cycles are found.
*/
inline std::vector<std::vector<std::size_t>> simple_cycles( const std::vector<std::vector<std::size_t>>& adjacency,
                                                            std::size_t cap = default_cycle_cap )
{
  const auto n = adjacency.size();
  std::vector<std::vector<std::size_t>> found;

  std::vector<bool> blocked( n, false );
  std::vector<std::vector<std::size_t>> blocked_by( n );
  std::vector<bool> in_component( n, false );
  std::vector<std::size_t> path;

  /* strongly connected component of `root` within the nodes >= root (Tarjan) */
  auto component_of = [&]( std::size_t root ) {
    std::vector<std::size_t> index( n, SIZE_MAX ), low( n, 0u );
    std::vector<bool> on_stack( n, false );
    std::vector<std::size_t> stack;
    std::vector<std::size_t> result;
    std::size_t counter = 0u;
    std::function<void( std::size_t )> visit = [&]( std::size_t v ) {
      index[v] = low[v] = counter++;
      stack.push_back( v );
      on_stack[v] = true;
      for ( auto w : adjacency[v] )
      {
        if ( w < root )
          continue;
        if ( index[w] == SIZE_MAX )
        {
          visit( w );
          low[v] = std::min( low[v], low[w] );
        }
        else if ( on_stack[w] )
          low[v] = std::min( low[v], index[w] );
      }
      if ( low[v] == index[v] )
      {
        std::vector<std::size_t> scc;
        std::size_t w;
        do
        {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          scc.push_back( w );
        } while ( w != v );
        if ( std::find( scc.begin(), scc.end(), root ) != scc.end() )
          result = std::move( scc );
      }
    };
    visit( root );
    return result;
  };

  std::function<void( std::size_t )> unblock = [&]( std::size_t u ) {
    blocked[u] = false;
    while ( !blocked_by[u].empty() )
    {
      const auto w = blocked_by[u].back();
      blocked_by[u].pop_back();
      if ( blocked[w] )
        unblock( w );
    }
  };

  std::function<bool( std::size_t, std::size_t )> circuit = [&]( std::size_t v, std::size_t start ) {
    bool closed = false;
    path.push_back( v );
    blocked[v] = true;
    for ( auto w : adjacency[v] )
    {
      if ( !in_component[w] )
        continue;
      if ( w == start )
      {
        if ( found.size() >= cap )
          throw cap_exceeded( cap );
        found.push_back( path );
        closed = true;
      }
      else if ( !blocked[w] && circuit( w, start ) )
        closed = true;
    }
    if ( closed )
      unblock( v );
    else
      for ( auto w : adjacency[v] )
        if ( in_component[w] && std::find( blocked_by[w].begin(), blocked_by[w].end(), v ) == blocked_by[w].end() )
          blocked_by[w].push_back( v );
    path.pop_back();
    return closed;
  };

  for ( std::size_t s = 0u; s < n; ++s )
  {
    const auto scc = component_of( s );
    const bool self_loop = std::find( adjacency[s].begin(), adjacency[s].end(), s ) != adjacency[s].end();
    if ( scc.size() < 2u && !self_loop )
      continue;
    std::fill( in_component.begin(), in_component.end(), false );
    for ( auto v : scc )
    {
      in_component[v] = true;
      blocked[v] = false;
      blocked_by[v].clear();
    }
    circuit( s, s );
  }
  return found;
}

/*! \brief all simple cycles of the data-transition graph restricted to `node_set`

  An edge a -> b exists when a data column moves a to b with both ends in
  `node_set`; its input is taken from the first such column.
*/
inline cycle_set cycles_within( const data_set& ds, std::span<const std::size_t> node_set, std::size_t cap = default_cycle_cap )
{
  const auto n = ds.states();
  detail::membership( n, node_set, "node set" );
  const auto nodes = detail::sorted_unique( node_set );

  std::vector<std::size_t> local( n + 1u, SIZE_MAX );
  for ( std::size_t l = 0u; l < nodes.size(); ++l )
    local[nodes[l]] = l;

  std::vector<std::vector<std::size_t>> adjacency( nodes.size() );
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_input;
  for ( std::size_t k = 1u; k <= ds.samples(); ++k )
  {
    const auto a = ds.xp().index( k );
    const auto b = ds.xf().index( k );
    if ( local[a] == SIZE_MAX || local[b] == SIZE_MAX )
      continue;
    if ( edge_input.emplace( std::pair{ a, b }, ds.up().index( k ) ).second )
      adjacency[local[a]].push_back( local[b] );
  }
  for ( auto& succ : adjacency )
    std::sort( succ.begin(), succ.end() );

  cycle_set result;
  for ( const auto& c : simple_cycles( adjacency, cap ) )
  {
    cycle out;
    for ( auto v : c )
      out.nodes.push_back( nodes[v] );
    for ( std::size_t e = 0u; e < out.nodes.size(); ++e )
      out.edge_inputs.push_back( edge_input.at( { out.nodes[e], out.nodes[( e + 1u ) % out.nodes.size()] } ) );
    result.cycles.push_back( std::move( out ) );
  }
  return result;
}

} // namespace ddbcn
