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
  \file io.hpp
  \brief JSON model/trace files and machine-readable reports

  Model file:  {"N":6,"M":3,"P":2,"L":[...N*M indices...],"H":[...N indices...]}
  Trace file:  {"N":6,"M":3,"P":2,"experiments":[{"x":[...],"u":[...],"y":[...]}]}

  All indices are 1-based. "y" (and then "P") may be omitted from a trace
  file when no outputs were measured.
*/

#pragma once

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "analysis.hpp"
#include "bcn.hpp"
#include "data.hpp"
#include "errors.hpp"
#include "synthesis.hpp"
#include "verify.hpp"

namespace ddbcn
{

using json = nlohmann::json;

/*! \brief malformed or unreadable input file */
class parse_error : public error
{
public:
  explicit parse_error( const std::string& what ) : error( "parse error: " + what ) {}
};

namespace detail
{

inline std::size_t positive( const json& j, const char* key )
{
  if ( !j.contains( key ) || !j.at( key ).is_number_integer() || j.at( key ).get<long long>() < 1 )
    throw parse_error( std::string( "\"" ) + key + "\" must be a positive integer" );
  return j.at( key ).get<std::size_t>();
}

inline std::vector<std::size_t> index_list( const json& j, const char* key )
{
  if ( !j.contains( key ) || !j.at( key ).is_array() )
    throw parse_error( std::string( "\"" ) + key + "\" must be an array of indices" );
  std::vector<std::size_t> out;
  for ( const auto& v : j.at( key ) )
  {
    if ( !v.is_number_integer() || v.get<long long>() < 1 )
      throw parse_error( std::string( "\"" ) + key + "\" holds a non-positive or non-integer entry" );
    out.push_back( v.get<std::size_t>() );
  }
  return out;
}

inline json optional_list( const std::vector<std::optional<std::size_t>>& v )
{
  json out = json::array();
  for ( const auto& x : v )
    out.push_back( x ? json( *x ) : json( nullptr ) );
  return out;
}

} // namespace detail

inline json read_json_file( const std::string& path )
{
  std::ifstream in( path );
  if ( !in )
    throw parse_error( "cannot open " + path );
  try
  {
    return json::parse( in );
  }
  catch ( const json::exception& e )
  {
    throw parse_error( path + ": " + e.what() );
  }
}

inline void write_text_file( const std::string& path, const std::string& text )
{
  std::ofstream out( path );
  if ( !out )
    throw parse_error( "cannot write " + path );
  out << text;
}

/* models */

inline bcn model_from_json( const json& j )
{
  const dimensions dims{ detail::positive( j, "N" ), detail::positive( j, "M" ), detail::positive( j, "P" ) };
  auto l = detail::index_list( j, "L" );
  auto h = detail::index_list( j, "H" );
  if ( l.size() != dims.states * dims.inputs )
    throw parse_error( "\"L\" must have N*M entries" );
  if ( h.size() != dims.states )
    throw parse_error( "\"H\" must have N entries" );
  return bcn( dims, logical_matrix( dims.states, std::move( l ) ), logical_matrix( dims.outputs, std::move( h ) ) );
}

inline json to_json( const bcn& net )
{
  const auto l = net.transition_matrix().indices();
  const auto h = net.output_matrix().indices();
  return json{ { "N", net.states() },
               { "M", net.inputs() },
               { "P", net.outputs() },
               { "L", std::vector<std::size_t>( l.begin(), l.end() ) },
               { "H", std::vector<std::size_t>( h.begin(), h.end() ) } };
}

/* traces */

struct trace_file
{
  dimensions dims;
  std::vector<experiment_trace> experiments;
};

inline trace_file traces_from_json( const json& j )
{
  if ( !j.contains( "experiments" ) || !j.at( "experiments" ).is_array() || j.at( "experiments" ).empty() )
    throw parse_error( "\"experiments\" must be a non-empty array" );
  bool any_outputs = false;
  for ( const auto& e : j.at( "experiments" ) )
    any_outputs = any_outputs || e.contains( "y" );

  trace_file tf;
  tf.dims.states = detail::positive( j, "N" );
  tf.dims.inputs = detail::positive( j, "M" );
  tf.dims.outputs = any_outputs || j.contains( "P" ) ? detail::positive( j, "P" ) : 1u;
  try
  {
    for ( const auto& e : j.at( "experiments" ) )
    {
      const auto x = detail::index_list( e, "x" );
      const auto u = detail::index_list( e, "u" );
      const auto y = e.contains( "y" ) ? detail::index_list( e, "y" ) : std::vector<std::size_t>{};
      tf.experiments.push_back( make_trace( tf.dims, x, u, y ) );
    }
  }
  catch ( const index_out_of_range& e )
  {
    throw parse_error( e.what() );
  }
  return tf;
}

inline data_set read_data_set( const std::string& path )
{
  auto tf = traces_from_json( read_json_file( path ) );
  return assemble( tf.dims, std::move( tf.experiments ) );
}

inline json traces_to_json( const dimensions& dims, const std::vector<experiment_trace>& experiments, bool with_outputs )
{
  json ex = json::array();
  for ( const auto& e : experiments )
  {
    json je;
    auto idx = []( const std::vector<canonical_vector>& v ) {
      std::vector<std::size_t> out;
      for ( const auto& c : v )
        out.push_back( c.index() );
      return out;
    };
    je["x"] = idx( e.states );
    je["u"] = idx( e.inputs );
    if ( with_outputs )
      je["y"] = idx( e.outputs );
    ex.push_back( std::move( je ) );
  }
  json j{ { "N", dims.states }, { "M", dims.inputs } };
  if ( with_outputs )
    j["P"] = dims.outputs;
  j["experiments"] = std::move( ex );
  return j;
}

/* reports */

inline json to_json( const basin_result& b )
{
  return json{ { "target", b.target },
               { "layers", b.layers },
               { "basin", b.basin },
               { "outside", b.outside() },
               { "inputs", detail::optional_list( b.inputs ) } };
}

inline json to_json( const cycle_set& c )
{
  json out = json::array();
  for ( const auto& cyc : c.cycles )
    out.push_back( json{ { "nodes", cyc.nodes }, { "inputs", cyc.edge_inputs } } );
  return out;
}

inline json to_json( const std::vector<state_input>& pairs )
{
  json out = json::array();
  for ( const auto& p : pairs )
    out.push_back( json{ { "state", p.state }, { "input", p.input } } );
  return out;
}

inline json feedback_json( const std::optional<feedback_matrix>& k )
{
  if ( !k )
    return nullptr;
  const auto idx = k->matrix().indices();
  return std::vector<std::size_t>( idx.begin(), idx.end() );
}

inline json to_json( const safe_control_result& r )
{
  return json{ { "solvable", r.solvable },
               { "K", feedback_json( r.feedback ) },
               { "certificate",
                 { { "unsafe", r.unsafe_states },
                   { "safe", r.safe_states },
                   { "stay_inputs", detail::optional_list( r.stay_inputs ) },
                   { "approach_inputs", detail::optional_list( r.approach_inputs ) },
                   { "missing_stay", r.missing_stay },
                   { "basin", to_json( r.certificate ) } } } };
}

inline json to_json( const regulation_result& r )
{
  return json{ { "solvable", r.solvable },
               { "K", feedback_json( r.feedback ) },
               { "certificate",
                 { { "y_star", r.y_star },
                   { "target_states", r.target_states },
                   { "cycles", to_json( r.cycles ) },
                   { "cycle_nodes", r.cycle_nodes },
                   { "chosen_cycle", detail::optional_list( r.chosen_cycle ) },
                   { "basin", to_json( r.certificate ) } } } };
}

inline json to_json( const verdict& v )
{
  json ce = nullptr;
  if ( v.failure )
    ce = json{ { "model", to_json( v.failure->model ) }, { "x0", v.failure->x0 }, { "trace", v.failure->trace } };
  return json{ { "pass", v.pass }, { "models_checked", v.models_checked }, { "counterexample", ce }, { "seed", v.seed } };
}

/* human-readable output */

/*! \brief L~ = [L~_1 | ... | L~_M] with `*` where the data leave the column free */
inline std::string format_partial_model( const knowledge_mask& mask )
{
  const auto& d = mask.dims();
  std::ostringstream os;
  os << "L~ = [";
  for ( std::size_t i = 1u; i <= d.inputs; ++i )
  {
    if ( i > 1u )
      os << " |";
    for ( std::size_t j = 1u; j <= d.states; ++j )
    {
      os << ' ';
      if ( auto s = mask.successor( i, j ) )
        os << "d" << d.states << "^" << *s;
      else
        os << '*';
    }
  }
  os << " ]\n";
  return os.str();
}

inline std::string format_states( const std::vector<std::size_t>& states )
{
  std::ostringstream os;
  os << '{';
  for ( std::size_t i = 0u; i < states.size(); ++i )
    os << ( i ? ", " : "" ) << states[i];
  os << '}';
  return os.str();
}

inline std::string format_feedback( const std::optional<feedback_matrix>& k )
{
  if ( !k )
    return "none";
  std::ostringstream os;
  os << '[';
  for ( std::size_t j = 1u; j <= k->states(); ++j )
    os << ( j > 1u ? " " : "" ) << "d" << k->inputs() << "^" << k->input( j );
  os << ']';
  return os.str();
}

} // namespace ddbcn
