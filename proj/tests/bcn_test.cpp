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

#include <gtest/gtest.h>

#include <random>

#include <ddbcn/bcn.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ddbcn;

TEST( Step, ReadsTheMatchingColumnOfL )
{
  const auto net1 = test::example1_model();
  EXPECT_EQ( step( net1, { 7u, 6u }, { 3u, 2u } ).next, canonical_vector( 7u, 5u ) );
  /* same column through the algebra: L |x u |x x */
  EXPECT_EQ( stp( stp( net1.transition_matrix(), logical_matrix( 3u, { 2 } ) ), canonical_vector{ 7u, 6u } ), canonical_vector( 7u, 5u ) );

  const auto net2 = test::example2_model();
  const auto r = step( net2, { 6u, 5u }, { 3u, 3u } );
  EXPECT_EQ( r.next, canonical_vector( 6u, 4u ) );
  EXPECT_EQ( r.output, canonical_vector( 2u, 1u ) );

  const bcn trivial( { 1u, 1u, 1u }, logical_matrix( 1u, { 1 } ), logical_matrix( 1u, { 1 } ) );
  EXPECT_EQ( step( trivial, { 1u, 1u }, { 1u, 1u } ).next, canonical_vector( 1u, 1u ) );

  EXPECT_THROW( step( net2, { 7u, 1u }, { 3u, 1u } ), dimension_mismatch );
}

TEST( Bcn, ConstructorChecksShapes )
{
  EXPECT_THROW( bcn( { 2u, 2u, 1u }, logical_matrix( 2u, { 1, 2, 1 } ), logical_matrix( 1u, { 1, 1 } ) ), dimension_mismatch );
  EXPECT_THROW( bcn( { 2u, 1u, 2u }, logical_matrix( 2u, { 1, 2 } ), logical_matrix( 1u, { 1, 1 } ) ), dimension_mismatch );
}

TEST( Step, BlockConsistency )
{
  std::mt19937_64 rng( 1u );
  for ( int rep = 0; rep < 20; ++rep )
  {
    const auto net = random_bcn( { 5u, 3u, 2u }, rng );
    for ( std::size_t i = 1u; i <= 3u; ++i )
    {
      const auto block = net.block( i );
      for ( std::size_t j = 1u; j <= 5u; ++j )
        ASSERT_EQ( step( net, { 5u, j }, { 3u, i } ).next, block.column( j ) );
    }
  }
}

TEST( Simulate, ReproducesExampleOneStateSequence )
{
  const auto net = test::example1_model();
  std::vector<canonical_vector> u;
  for ( auto i : test::example1_u )
    u.emplace_back( 3u, i );
  const auto tr = simulate( net, { 7u, 1u }, u );
  ASSERT_EQ( tr.states.size(), test::example1_x.size() );
  for ( std::size_t t = 0u; t < tr.states.size(); ++t )
    EXPECT_EQ( tr.states[t].index(), test::example1_x[t] ) << t;
  EXPECT_EQ( tr.outputs.size(), u.size() );
}

TEST( Simulate, ZeroLengthAndReplay )
{
  const auto net = test::example2_model();
  const auto empty = simulate( net, { 6u, 3u }, {} );
  EXPECT_EQ( empty.states, std::vector<canonical_vector>{ canonical_vector( 6u, 3u ) } );
  EXPECT_TRUE( empty.outputs.empty() );

  std::mt19937_64 rng( 2u );
  for ( int rep = 0; rep < 20; ++rep )
  {
    const auto model = random_bcn( { 8u, 2u, 3u }, rng );
    std::vector<canonical_vector> u;
    for ( int t = 0; t < 30; ++t )
      u.emplace_back( 2u, 1u + rng() % 2u );
    const auto tr = simulate( model, { 8u, 1u + rng() % 8u }, u );
    for ( std::size_t t = 0u; t < u.size(); ++t )
    {
      const auto s = step( model, tr.states[t], u[t] );
      ASSERT_EQ( s.next, tr.states[t + 1u] );
      ASSERT_EQ( s.output, tr.outputs[t] );
    }
  }
}

TEST( LTot, OrOfBlocks )
{
  const auto lt = l_tot( test::example2_model() );
  EXPECT_EQ( lt.column_support( 1u ), ( std::vector<std::size_t>{ 1u, 2u, 5u } ) );

  const bcn single( { 3u, 1u, 1u }, logical_matrix( 3u, { 2, 3, 1 } ), logical_matrix( 1u, { 1, 1, 1 } ) );
  EXPECT_EQ( l_tot( single ), boolean_matrix( single.transition_matrix() ) );

  std::mt19937_64 rng( 3u );
  const auto net = random_bcn( { 6u, 3u, 1u }, rng );
  const auto r = l_tot( net );
  for ( std::size_t j = 1u; j <= 6u; ++j )
  {
    const auto ones = r.column_support( j ).size();
    EXPECT_GE( ones, 1u );
    EXPECT_LE( ones, 3u );
  }
}

TEST( ClosedLoop, ExampleTwoFeedback )
{
  const auto net = test::example2_model();
  const feedback_matrix k( 3u, test::example2_k );
  EXPECT_EQ( closed_loop( net, k ).successor( 5u ), 4u );
  EXPECT_THROW( closed_loop( net, feedback_matrix( 2u, { 1, 1, 1, 1, 1, 1 } ) ), dimension_mismatch );
}

TEST( ClosedLoop, ConstantFeedbackSelectsSubsystem )
{
  const auto net = test::example1_model();
  for ( std::size_t i = 1u; i <= 3u; ++i )
  {
    const feedback_matrix k( 3u, std::vector<std::size_t>( 7u, i ) );
    EXPECT_EQ( closed_loop( net, k ).matrix(), net.block( i ) );
    EXPECT_EQ( closed_loop_stp( net, k ).matrix(), net.block( i ) );
  }
}

TEST( ClosedLoop, ColumnSelectionMatchesStpFormula )
{
  std::mt19937_64 rng( 4u );
  for ( int rep = 0; rep < 100; ++rep )
  {
    const dimensions dims{ 1u + rng() % 7u, 1u + rng() % 4u, 1u };
    const auto net = random_bcn( dims, rng );
    const feedback_matrix k( test::random_logical( rng, dims.inputs, dims.states ) );
    ASSERT_EQ( closed_loop( net, k ), closed_loop_stp( net, k ) );
  }
  /* and once through the dense Kronecker definition */
  const auto net = test::example2_model();
  const feedback_matrix k( 3u, test::example2_k );
  const auto dense = stp( stp( to_dense( net.transition_matrix() ), to_dense( k.matrix() ) ), to_dense( power_reducing_matrix( 6u ) ) );
  EXPECT_EQ( dense, to_dense( closed_loop( net, k ).matrix() ) );
}

TEST( ModelEquilibria, ExampleOne )
{
  std::vector<std::size_t> states;
  for ( const auto& e : model_equilibria( test::example1_model() ) )
    states.push_back( e.state );
  states.erase( std::unique( states.begin(), states.end() ), states.end() );
  EXPECT_EQ( states, ( std::vector<std::size_t>{ 2u, 3u, 6u, 7u } ) );

  const bcn id( { 4u, 1u, 1u }, logical_matrix::identity( 4u ), logical_matrix( 1u, { 1, 1, 1, 1 } ) );
  EXPECT_EQ( model_equilibria( id ).size(), 4u );
}

TEST( ModelEquilibria, DiagonalOfLTotAndExhaustiveScan )
{
  std::mt19937_64 rng( 5u );
  for ( int rep = 0; rep < 50; ++rep )
  {
    const auto net = random_bcn( { 6u, 3u, 1u }, rng );
    std::vector<state_input> scan;
    for ( std::size_t j = 1u; j <= 6u; ++j )
      for ( std::size_t i = 1u; i <= 3u; ++i )
        if ( step( net, { 6u, j }, { 3u, i } ).next.index() == j )
          scan.push_back( { j, i } );
    const auto eq = model_equilibria( net );
    ASSERT_EQ( eq, scan );

    const auto lt = l_tot( net );
    for ( std::size_t j = 1u; j <= 6u; ++j )
    {
      const bool listed = std::any_of( eq.begin(), eq.end(), [j]( auto e ) { return e.state == j; } );
      ASSERT_EQ( listed, lt.get( j, j ) );
    }
  }
}

TEST( ModelReachableSet, ClosureProperties )
{
  EXPECT_EQ( model_reachable_set( test::example1_model(), 1u ).size(), 7u );

  const bcn id( { 4u, 1u, 1u }, logical_matrix::identity( 4u ), logical_matrix( 1u, { 1, 1, 1, 1 } ) );
  EXPECT_EQ( model_reachable_set( id, 3u ), std::vector<std::size_t>{ 3u } );

  std::mt19937_64 rng( 6u );
  for ( int rep = 0; rep < 30; ++rep )
  {
    const auto net = random_bcn( { 9u, 2u, 1u }, rng );
    const auto reach = model_reachable_set( net, 1u );
    const auto lt = l_tot( net );
    for ( auto s : reach )
      for ( auto t : lt.column_support( s ) )
        ASSERT_TRUE( std::binary_search( reach.begin(), reach.end(), t ) );
  }
}

TEST( Reachability, GlobalReachabilityIffLTotIrreducible )
{
  /* exhaustive over N <= 3, M <= 2 and sampled at N = 4 */
  for ( std::size_t n = 1u; n <= 3u; ++n )
    for ( std::size_t m = 1u; m <= 2u; ++m )
    {
      const auto cols = n * m;
      std::size_t total = 1u;
      for ( std::size_t c = 0u; c < cols; ++c )
        total *= n;
      for ( std::size_t code = 0u; code < total; ++code )
      {
        std::vector<std::size_t> l( cols );
        auto x = code;
        for ( auto& c : l )
        {
          c = x % n + 1u;
          x /= n;
        }
        const bcn net( { n, m, 1u }, logical_matrix( n, l ), logical_matrix( 1u, std::vector<std::size_t>( n, 1u ) ) );
        bool all = true;
        for ( std::size_t s = 1u; s <= n; ++s )
          all = all && model_reachable_set( net, s ).size() == n;
        ASSERT_EQ( all, is_irreducible( l_tot( net ) ) );
      }
    }
  std::mt19937_64 rng( 7u );
  for ( int rep = 0; rep < 2000; ++rep )
  {
    const auto net = random_bcn( { 4u, 2u, 1u }, rng );
    bool all = true;
    for ( std::size_t s = 1u; s <= 4u; ++s )
      all = all && model_reachable_set( net, s ).size() == 4u;
    ASSERT_EQ( all, is_irreducible( l_tot( net ) ) );
  }
}

TEST( RandomBcn, SeededGeneratorIsReproducible )
{
  EXPECT_EQ( random_bcn( { 5u, 2u, 2u }, 42u ), random_bcn( { 5u, 2u, 2u }, 42u ) );
}
