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
  \file verify.hpp
  \brief materializing networks compatible with the data and checking feedbacks on them

  The checks here never consult the data-level certificates. They build
  concrete networks, close the loop and simulate.
*/

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "analysis.hpp"
#include "bcn.hpp"
#include "data.hpp"
#include "errors.hpp"

namespace ddbcn
{

/*! \brief the set B_d of networks reproducing the data

  Known columns of L and known outputs are fixed; the free ones may take
  any value. For output-free data H is not constrained by anything and is
  pinned to delta_P^1 instead of being enumerated.
*/
class compatible_family
{
public:
  explicit compatible_family( const data_set& ds, std::uint64_t seed = 0u )
      : mask_( ds.mask() ), free_columns_( mask_.free_columns() ), seed_( seed ), with_outputs_( ds.has_outputs() )
  {
    if ( with_outputs_ )
      free_outputs_ = mask_.free_outputs();
  }

  const knowledge_mask& mask() const noexcept { return mask_; }
  const dimensions& dims() const noexcept { return mask_.dims(); }
  const std::vector<state_input>& free_columns() const noexcept { return free_columns_; }
  const std::vector<std::size_t>& free_outputs() const noexcept { return free_outputs_; }
  std::uint64_t seed() const noexcept { return seed_; }

  /*! \brief N^{#free columns} P^{#free outputs}, or nullopt if it overflows 64 bits */
  std::optional<std::uint64_t> size() const
  {
    std::uint64_t s = 1u;
    auto mul = [&s]( std::uint64_t f ) {
      if ( f != 0u && s > std::numeric_limits<std::uint64_t>::max() / f )
        return false;
      s *= f;
      return true;
    };
    for ( std::size_t c = 0u; c < free_columns_.size(); ++c )
      if ( !mul( dims().states ) )
        return std::nullopt;
    for ( std::size_t c = 0u; c < free_outputs_.size(); ++c )
      if ( !mul( dims().outputs ) )
        return std::nullopt;
    return s;
  }

  /*! \brief the member obtained by filling the free columns and outputs in order */
  bcn complete( std::span<const std::size_t> column_values, std::span<const std::size_t> output_values ) const
  {
    if ( column_values.size() != free_columns_.size() || output_values.size() != free_outputs_.size() )
      throw dimension_mismatch( "completion needs one value per free column and free output" );
    const auto& d = dims();
    std::vector<std::size_t> l( d.states * d.inputs );
    for ( std::size_t i = 1u; i <= d.inputs; ++i )
      for ( std::size_t j = 1u; j <= d.states; ++j )
        if ( auto s = mask_.successor( i, j ) )
          l[( i - 1u ) * d.states + j - 1u] = *s;
    for ( std::size_t c = 0u; c < free_columns_.size(); ++c )
      l[( free_columns_[c].input - 1u ) * d.states + free_columns_[c].state - 1u] = column_values[c];

    std::vector<std::size_t> h( d.states, 1u );
    if ( with_outputs_ )
      for ( std::size_t j = 1u; j <= d.states; ++j )
        if ( auto o = mask_.output( j ) )
          h[j - 1u] = *o;
    for ( std::size_t c = 0u; c < free_outputs_.size(); ++c )
      h[free_outputs_[c] - 1u] = output_values[c];
    return bcn( d, logical_matrix( d.states, std::move( l ) ), logical_matrix( d.outputs, std::move( h ) ) );
  }

private:
  knowledge_mask mask_;
  std::vector<state_input> free_columns_;
  std::vector<std::size_t> free_outputs_;
  std::uint64_t seed_;
  bool with_outputs_;
};

/*! \brief the member whose unknown transitions all become self-loops and unknown outputs delta_P^1 */
inline bcn self_loop_completion( const compatible_family& fam )
{
  std::vector<std::size_t> cols;
  for ( const auto& c : fam.free_columns() )
    cols.push_back( c.state );
  return fam.complete( cols, std::vector<std::size_t>( fam.free_outputs().size(), 1u ) );
}

/*! \brief every member of B_d if there are at most `budget`, else `budget` seeded samples

  The sampled batch always starts with the self-loop completion.
*/
inline std::vector<bcn> enumerate_or_sample( const compatible_family& fam, std::size_t budget )
{
  if ( budget == 0u )
    throw invalid_argument( "sampling budget must be positive" );
  const auto& d = fam.dims();
  const auto nc = fam.free_columns().size();
  const auto no = fam.free_outputs().size();
  std::vector<bcn> models;

  const auto size = fam.size();
  if ( size && *size <= budget )
  {
    std::vector<std::size_t> cols( nc, 1u ), outs( no, 1u );
    models.reserve( static_cast<std::size_t>( *size ) );
    for ( ;; )
    {
      models.push_back( fam.complete( cols, outs ) );
      /* mixed-radix increment, columns first */
      std::size_t pos = 0u;
      for ( ; pos < nc + no; ++pos )
      {
        auto& digit = pos < nc ? cols[pos] : outs[pos - nc];
        const auto radix = pos < nc ? d.states : d.outputs;
        if ( digit < radix )
        {
          ++digit;
          break;
        }
        digit = 1u;
      }
      if ( pos == nc + no )
        break;
    }
    return models;
  }

  std::mt19937_64 rng( fam.seed() );
  std::uniform_int_distribution<std::size_t> state_dist( 1u, d.states );
  std::uniform_int_distribution<std::size_t> output_dist( 1u, d.outputs );
  models.reserve( budget );
  models.push_back( self_loop_completion( fam ) );
  std::vector<std::size_t> cols( nc ), outs( no );
  while ( models.size() < budget )
  {
    for ( auto& c : cols )
      c = state_dist( rng );
    for ( auto& o : outs )
      o = output_dist( rng );
    models.push_back( fam.complete( cols, outs ) );
  }
  return models;
}

/*! \brief the compatible network that is hardest to control away from `avoid`

  Free transitions out of states in `avoid` become self-loops, so a region
  the data cannot certify to escape turns into a trap. Free transitions out
  of the remaining (good) states are sent into `avoid`, preferring a state
  from which the data certify no way back to a good state that can remain
  good forever. Unknown outputs are set to a value different from `y_star`
  whenever P >= 2.
*/
inline bcn adversarial_completion( const compatible_family& fam, std::span<const std::size_t> avoid,
                                   std::optional<std::size_t> y_star = std::nullopt )
{
  const auto& mask = fam.mask();
  const auto n = fam.dims().states;
  const auto m = fam.dims().inputs;
  const auto bad = detail::membership( n, avoid, "avoid" );

  /* good states able to stay good forever on observed transitions */
  std::vector<bool> viable( n + 1u, false );
  for ( std::size_t j = 1u; j <= n; ++j )
    viable[j] = !bad[j];
  for ( bool changed = true; changed; )
  {
    changed = false;
    for ( std::size_t j = 1u; j <= n; ++j )
    {
      if ( !viable[j] )
        continue;
      bool keeps = false;
      for ( std::size_t i = 1u; i <= m && !keeps; ++i )
        if ( auto s = mask.successor( i, j ) )
          keeps = viable[*s];
      if ( !keeps )
      {
        viable[j] = false;
        changed = true;
      }
    }
  }

  /* states from which the data show a way into the viable set */
  std::vector<bool> escapes = viable;
  for ( bool changed = true; changed; )
  {
    changed = false;
    for ( std::size_t j = 1u; j <= n; ++j )
    {
      if ( escapes[j] )
        continue;
      for ( std::size_t i = 1u; i <= m; ++i )
        if ( auto s = mask.successor( i, j ); s && escapes[*s] )
        {
          escapes[j] = true;
          changed = true;
          break;
        }
    }
  }

  std::optional<std::size_t> sink;
  for ( std::size_t j = 1u; j <= n && !sink; ++j )
    if ( bad[j] && !escapes[j] )
      sink = j;
  for ( std::size_t j = 1u; j <= n && !sink; ++j )
    if ( bad[j] )
      sink = j;

  std::vector<std::size_t> cols;
  for ( const auto& c : fam.free_columns() )
    cols.push_back( bad[c.state] || !sink ? c.state : *sink );

  std::size_t other_output = 1u;
  if ( y_star && fam.dims().outputs >= 2u )
    other_output = *y_star == 1u ? 2u : 1u;
  return fam.complete( cols, std::vector<std::size_t>( fam.free_outputs().size(), other_output ) );
}

struct counterexample
{
  bcn model;
  std::size_t x0 = 1u;
  std::vector<std::size_t> trace;
};

struct verdict
{
  bool pass = true;
  std::size_t models_checked = 0u;
  std::optional<counterexample> failure;
  std::uint64_t seed = 0u;
};

namespace detail
{

inline std::vector<std::size_t> orbit( const bn& loop, std::size_t x0, std::size_t steps )
{
  std::vector<std::size_t> tr{ x0 };
  for ( std::size_t t = 0u; t < steps; ++t )
    tr.push_back( loop.successor( tr.back() ) );
  return tr;
}

} // namespace detail

/*! \brief closed-loop simulation of K on each model for safe control

  From every initial state the trajectory has to enter the safe set within N
  steps and never leave it again; in particular trajectories starting safe
  stay safe.
*/
inline verdict check_safe_control( std::span<const bcn> models, const feedback_matrix& k, std::span<const std::size_t> unsafe )
{
  verdict v;
  for ( const auto& model : models )
  {
    ++v.models_checked;
    const auto n = model.states();
    const auto is_unsafe = detail::membership( n, unsafe, "unsafe" );
    const auto loop = closed_loop( model, k );
    for ( std::size_t x0 = 1u; x0 <= n; ++x0 )
    {
      /* entering by step N and staying through step 2N covers the whole future orbit */
      auto tr = detail::orbit( loop, x0, 2u * n );
      std::size_t entry = 0u;
      while ( entry < tr.size() && is_unsafe[tr[entry]] )
        ++entry;
      bool ok = entry <= n;
      for ( std::size_t t = entry; ok && t < tr.size(); ++t )
        ok = !is_unsafe[tr[t]];
      if ( !ok )
      {
        v.pass = false;
        v.failure = counterexample{ model, x0, std::move( tr ) };
        return v;
      }
    }
  }
  return v;
}

/*! \brief closed-loop simulation of K on each model for output regulation

  From every initial state the trajectory must settle within N steps on a
  periodic orbit whose outputs all equal y_star.
*/
inline verdict check_output_regulation( std::span<const bcn> models, const feedback_matrix& k, std::size_t y_star )
{
  verdict v;
  for ( const auto& model : models )
  {
    ++v.models_checked;
    const auto n = model.states();
    const auto loop = closed_loop( model, k );
    for ( std::size_t x0 = 1u; x0 <= n; ++x0 )
    {
      auto tr = detail::orbit( loop, x0, n );
      const auto start = tr.back();
      auto x = start;
      bool ok = true;
      do
      {
        ok = ok && model.output( x ) == y_star;
        x = loop.successor( x );
        tr.push_back( x );
      } while ( x != start );
      if ( !ok )
      {
        v.pass = false;
        v.failure = counterexample{ model, x0, std::move( tr ) };
        return v;
      }
    }
  }
  return v;
}

/*! \brief sampled (or enumerated) members plus the adversarial completion, checked for safe control */
inline verdict verify_safe_control( const data_set& ds, const feedback_matrix& k, std::span<const std::size_t> unsafe, std::size_t budget,
                                    std::uint64_t seed )
{
  const compatible_family fam( ds, seed );
  auto models = enumerate_or_sample( fam, budget );
  models.push_back( adversarial_completion( fam, unsafe ) );
  auto v = check_safe_control( models, k, unsafe );
  v.seed = seed;
  return v;
}

/*! \brief sampled (or enumerated) members plus the adversarial completion, checked for output regulation */
inline verdict verify_output_regulation( const data_set& ds, const feedback_matrix& k, std::size_t y_star, std::size_t budget,
                                         std::uint64_t seed )
{
  const compatible_family fam( ds, seed );
  auto models = enumerate_or_sample( fam, budget );
  const auto good = target_states( ds, y_star );
  std::vector<bool> is_good( ds.states() + 1u, false );
  for ( auto g : good )
    is_good[g] = true;
  std::vector<std::size_t> avoid;
  for ( std::size_t j = 1u; j <= ds.states(); ++j )
    if ( !is_good[j] )
      avoid.push_back( j );
  models.push_back( adversarial_completion( fam, avoid, y_star ) );
  auto v = check_output_regulation( models, k, y_star );
  v.seed = seed;
  return v;
}

} // namespace ddbcn
