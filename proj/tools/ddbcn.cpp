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

/* ddbcn command-line front end

   exit codes: 0 success, 1 unsolvable / not informative, 2 input error,
   3 verification failure */

#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <ddbcn/ddbcn.hpp>

namespace
{

using namespace ddbcn;

constexpr int exit_ok = 0;
constexpr int exit_unsolvable = 1;
constexpr int exit_input = 2;
constexpr int exit_verification = 3;

struct run_config
{
  std::string model_path;
  std::string trace_path;
  std::string out_path;
  std::string format = "json";

  std::size_t x0 = 1u;
  std::vector<std::size_t> inputs;
  std::optional<std::size_t> length;
  std::uint64_t seed = 0u;

  std::vector<std::size_t> target;
  std::vector<std::size_t> unsafe;
  std::size_t y_star = 1u;
  std::optional<std::size_t> budget;
};

void emit( const run_config& cfg, const std::string& text )
{
  if ( cfg.out_path.empty() )
    std::cout << text;
  else
    write_text_file( cfg.out_path, text );
}

void emit( const run_config& cfg, const json& j, const std::string& human )
{
  emit( cfg, cfg.format == "json" ? j.dump( 2 ) + "\n" : human );
}

/* simulate */

int cmd_simulate( const run_config& cfg )
{
  const auto net = model_from_json( read_json_file( cfg.model_path ) );
  std::vector<canonical_vector> u;
  if ( cfg.length )
  {
    std::mt19937_64 rng( cfg.seed );
    std::uniform_int_distribution<std::size_t> d( 1u, net.inputs() );
    for ( std::size_t t = 0u; t < *cfg.length; ++t )
      u.emplace_back( net.inputs(), d( rng ) );
  }
  else
    for ( auto i : cfg.inputs )
      u.emplace_back( net.inputs(), i );

  const auto traj = simulate( net, canonical_vector{ net.states(), cfg.x0 }, u );
  const std::vector<experiment_trace> ex{ make_trace( net.dims(), traj, u ) };
  emit( cfg, traces_to_json( net.dims(), ex, true ).dump() + "\n" );
  return exit_ok;
}

/* analyze */

int analyze_identifiability( const run_config& cfg, const data_set& ds )
{
  const bool informative = is_informative_for_identifiability( ds );
  const auto known = ds.mask().known_columns();
  const auto total = ds.states() * ds.inputs();
  std::ostringstream h;
  h << "informative for identifiability: " << ( informative ? "yes" : "no" ) << "\n"
    << "observed (input, state) pairs: " << known << " of " << total << "\n";
  emit( cfg, json{ { "informative", informative }, { "known_columns", known }, { "total_columns", total } }, h.str() );
  return exit_ok;
}

int analyze_identify( const run_config& cfg, const data_set& ds )
{
  const auto net = identify( ds );
  std::ostringstream h;
  h << format_partial_model( ds.mask() );
  h << "H = [";
  for ( std::size_t j = 1u; j <= net.states(); ++j )
    h << ( j > 1u ? " " : "" ) << "d" << net.outputs() << "^" << net.output( j );
  h << "]\n";
  emit( cfg, to_json( net ), h.str() );
  return exit_ok;
}

int analyze_equilibria( const run_config& cfg, const data_set& ds )
{
  const auto eq = data_equilibria( ds );
  std::ostringstream h;
  h << "equilibria:";
  for ( auto e : eq )
    h << " d" << ds.states() << "^" << e.state << " (u = d" << ds.inputs() << "^" << e.input << ")";
  h << ( eq.empty() ? " none\n" : "\n" );
  emit( cfg, json{ { "equilibria", to_json( eq ) } }, h.str() );
  return exit_ok;
}

std::string format_layers( const basin_result& b )
{
  std::ostringstream h;
  for ( std::size_t d = 0u; d < b.layers.size(); ++d )
    h << "S_" << d << " = " << format_states( b.layers[d] ) << "\n";
  h << "S* = " << format_states( b.basin ) << "\n";
  if ( !b.outside().empty() )
    h << "not certified: " << format_states( b.outside() ) << "\n";
  return h.str();
}

int analyze_reach( const run_config& cfg, const data_set& ds )
{
  const bool informative = informative_for_reachability( ds, cfg.target );
  const auto b = basin( ds, cfg.target );
  std::ostringstream h;
  h << "informative for reachability of " << format_states( b.target ) << ": " << ( informative ? "yes" : "no" ) << "\n"
    << format_layers( b );
  emit( cfg, json{ { "informative", informative }, { "basin", to_json( b ) } }, h.str() );
  return exit_ok;
}

int analyze_basin( const run_config& cfg, const data_set& ds )
{
  const auto b = basin( ds, cfg.target );
  emit( cfg, to_json( b ), format_layers( b ) );
  return exit_ok;
}

int analyze_targets( const run_config& cfg, const data_set& ds )
{
  const auto t = target_states( ds, cfg.y_star );
  emit( cfg, json{ { "y_star", cfg.y_star }, { "states", t } }, "X^d(" + std::to_string( cfg.y_star ) + ") = " + format_states( t ) + "\n" );
  return exit_ok;
}

int analyze_cycles( const run_config& cfg, const data_set& ds )
{
  const auto t = target_states( ds, cfg.y_star );
  const auto cs = cycles_within( ds, t );
  std::ostringstream h;
  h << "X^d(" << cfg.y_star << ") = " << format_states( t ) << "\n";
  for ( const auto& c : cs.cycles )
  {
    h << "cycle:";
    for ( std::size_t e = 0u; e < c.nodes.size(); ++e )
      h << " " << c.nodes[e] << " -(" << c.edge_inputs[e] << ")->";
    h << " " << c.nodes.front() << "\n";
  }
  if ( cs.cycles.empty() )
    h << "no cycles\n";
  emit( cfg, json{ { "y_star", cfg.y_star }, { "target_states", t }, { "cycles", to_json( cs ) } }, h.str() );
  return exit_ok;
}

int analyze_partial( const run_config& cfg, const data_set& ds )
{
  const auto& mask = ds.mask();
  json l = json::array(), h = json::array();
  for ( std::size_t i = 1u; i <= ds.inputs(); ++i )
    for ( std::size_t j = 1u; j <= ds.states(); ++j )
    {
      const auto s = mask.successor( i, j );
      l.push_back( s ? json( *s ) : json( nullptr ) );
    }
  for ( std::size_t j = 1u; j <= ds.states(); ++j )
  {
    const auto o = ds.has_outputs() ? mask.output( j ) : std::nullopt;
    h.push_back( o ? json( *o ) : json( nullptr ) );
  }
  emit( cfg, json{ { "N", ds.states() }, { "M", ds.inputs() }, { "L", l }, { "H", h } }, format_partial_model( mask ) );
  return exit_ok;
}

int analyze_ltotd( const run_config& cfg, const data_set& ds )
{
  const auto lt = l_tot_d( ds );
  json cols = json::array();
  std::ostringstream h;
  for ( std::size_t j = 1u; j <= ds.states(); ++j )
  {
    const auto c = lt.column_support( j );
    cols.push_back( c );
    h << "column " << j << ": " << format_states( c ) << "\n";
  }
  emit( cfg, json{ { "columns", cols } }, h.str() );
  return exit_ok;
}

/* synthesize */

int cmd_safe( const run_config& cfg, const data_set& ds )
{
  const auto r = safe_control( ds, cfg.unsafe );
  auto j = to_json( r );
  std::ostringstream h;
  h << "unsafe: " << format_states( r.unsafe_states ) << "\n"
    << "solvable: " << ( r.solvable ? "yes" : "no" ) << "\n";
  if ( !r.missing_stay.empty() )
    h << "safe states without an observed safe successor: " << format_states( r.missing_stay ) << "\n";
  h << format_layers( r.certificate ) << "K = " << format_feedback( r.feedback ) << "\n";

  int code = r.solvable ? exit_ok : exit_unsolvable;
  if ( r.solvable && cfg.budget )
  {
    const auto v = verify_safe_control( ds, *r.feedback, cfg.unsafe, *cfg.budget, cfg.seed );
    j["verdict"] = to_json( v );
    h << "verification: " << ( v.pass ? "pass" : "FAIL" ) << " on " << v.models_checked << " models (seed " << v.seed << ")\n";
    if ( !v.pass )
      code = exit_verification;
  }
  emit( cfg, j, h.str() );
  return code;
}

int cmd_regulate( const run_config& cfg, const data_set& ds )
{
  const auto r = output_regulation( ds, cfg.y_star );
  auto j = to_json( r );
  std::ostringstream h;
  h << "y* = " << r.y_star << "\n"
    << "X^d(y*) = " << format_states( r.target_states ) << "\n"
    << "cycles: " << r.cycles.cycles.size() << "\n";
  for ( const auto& c : r.cycles.cycles )
    h << "  " << format_states( c.nodes ) << "\n";
  h << "solvable: " << ( r.solvable ? "yes" : "no" ) << "\n" << format_layers( r.certificate ) << "K = " << format_feedback( r.feedback ) << "\n";

  int code = r.solvable ? exit_ok : exit_unsolvable;
  if ( r.solvable && cfg.budget )
  {
    const auto v = verify_output_regulation( ds, *r.feedback, cfg.y_star, *cfg.budget, cfg.seed );
    j["verdict"] = to_json( v );
    h << "verification: " << ( v.pass ? "pass" : "FAIL" ) << " on " << v.models_checked << " models (seed " << v.seed << ")\n";
    if ( !v.pass )
      code = exit_verification;
  }
  emit( cfg, j, h.str() );
  return code;
}

void add_format( CLI::App* app, run_config& cfg )
{
  app->add_option( "--format", cfg.format, "report format" )->check( CLI::IsMember( { "json", "human" } ) );
  app->add_option( "-o,--out", cfg.out_path, "write the report here instead of stdout" );
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "data-driven analysis and control of Boolean control networks" };
  app.require_subcommand( 1, 1 );
  run_config cfg;

  auto* sim = app.add_subcommand( "simulate", "simulate a model and write a trace file" );
  sim->add_option( "--model", cfg.model_path, "model JSON file" )->required()->check( CLI::ExistingFile );
  sim->add_option( "--x0", cfg.x0, "initial state index" )->check( CLI::PositiveNumber );
  auto* in_opt = sim->add_option( "--inputs", cfg.inputs, "comma-separated input indices" )->delimiter( ',' );
  auto* len_opt = sim->add_option( "--length", cfg.length, "number of random inputs" );
  sim->add_option( "--seed", cfg.seed, "seed of the random input schedule" );
  in_opt->excludes( len_opt );
  sim->add_option( "-o,--out", cfg.out_path, "write the trace here instead of stdout" );

  auto* an = app.add_subcommand( "analyze", "analyze a trace file" );
  an->require_subcommand( 1, 1 );
  an->fallthrough();
  an->add_option( "--trace", cfg.trace_path, "trace JSON file" )->required()->check( CLI::ExistingFile );
  add_format( an, cfg );
  std::vector<std::pair<CLI::App*, int ( * )( const run_config&, const data_set& )>> analyses;
  auto analysis = [&]( const char* name, const char* desc, auto fn ) {
    auto* s = an->add_subcommand( name, desc );
    analyses.emplace_back( s, fn );
    return s;
  };
  analysis( "identifiability", "is the data informative for identifiability", analyze_identifiability );
  analysis( "identify", "recover (L, H) from informative data", analyze_identify );
  analysis( "equilibria", "equilibria certified by the data", analyze_equilibria );
  analysis( "reach", "informativity for reachability of a target set", analyze_reach )
      ->add_option( "--target", cfg.target, "comma-separated target states" )
      ->delimiter( ',' )
      ->required();
  analysis( "basin", "backward layers of a target set", analyze_basin )
      ->add_option( "--target", cfg.target, "comma-separated target states" )
      ->delimiter( ',' )
      ->required();
  analysis( "targets", "states observed with output y*", analyze_targets )->add_option( "--ystar", cfg.y_star, "output index" )->required();
  analysis( "cycles", "simple cycles among states with output y*", analyze_cycles )
      ->add_option( "--ystar", cfg.y_star, "output index" )
      ->required();
  analysis( "partial", "the partially known transition matrix", analyze_partial );
  analysis( "ltotd", "the observed transition structure L_tot^d", analyze_ltotd );

  auto* syn = app.add_subcommand( "synthesize", "synthesize a state feedback" );
  syn->require_subcommand( 1, 1 );
  syn->fallthrough();
  syn->add_option( "--trace", cfg.trace_path, "trace JSON file" )->required()->check( CLI::ExistingFile );
  syn->add_option( "--verify", cfg.budget, "check K on this many compatible models plus the adversarial one" )->check( CLI::PositiveNumber );
  syn->add_option( "--seed", cfg.seed, "sampling seed for --verify" );
  add_format( syn, cfg );
  auto* safe = syn->add_subcommand( "safe", "safe control away from an unsafe set" );
  safe->add_option( "--unsafe", cfg.unsafe, "comma-separated unsafe states" )->delimiter( ',' )->required();
  auto* reg = syn->add_subcommand( "regulate", "output regulation to y*" );
  reg->add_option( "--ystar", cfg.y_star, "output index" )->required();

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::ParseError& e )
  {
    const auto rc = app.exit( e );
    return rc == 0 ? exit_ok : exit_input;
  }

  try
  {
    if ( sim->parsed() )
      return cmd_simulate( cfg );
    const auto ds = read_data_set( cfg.trace_path );
    if ( an->parsed() )
      for ( auto [sub, fn] : analyses )
        if ( sub->parsed() )
          return fn( cfg, ds );
    if ( safe->parsed() )
      return cmd_safe( cfg, ds );
    if ( reg->parsed() )
      return cmd_regulate( cfg, ds );
  }
  catch ( const not_informative& e )
  {
    std::cerr << "ddbcn: " << e.what() << "\n";
    return exit_unsolvable;
  }
  catch ( const error& e )
  {
    std::cerr << "ddbcn: " << e.what() << "\n";
    return exit_input;
  }
  return exit_input;
}
