/* thrlab: exact analysis of threshold functions and Boolean clones
 * Copyright (C) 2025-2026 the thrlab authors
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
  \file thrlab.cpp
  \brief Command-line driver

  Functions are passed as `<arity>:<hex>` (e.g. `2:8`, `3:E8`),
  relational constraints as `R|S` with each side
  `<arity>;<word>,<word>,...`.  All verdicts are exact; every emitted
  witness or certificate has been re-validated before printing.
*/

#include <thrlab/report.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace thrlab;

namespace
{

struct global_options
{
  uint64_t budget_multisets = 100000000;
  uint64_t budget_columns = 100000000;
  uint64_t budget_points = uint64_t( 1 ) << 20;
  uint64_t seed = 0;
  std::string format = "json";
};

void print_json( const json& payload, const global_options& opts )
{
  if ( opts.format == "json" )
  {
    json out = payload;
    out["schema"] = 1;
    std::cout << out.dump( 2 ) << "\n";
  }
  else
  {
    for ( const auto& [key, value] : payload.items() )
    {
      std::cout << key << ": " << ( value.is_string() ? value.get<std::string>() : value.dump() )
                << "\n";
    }
  }
}

clone_id clone_from_string( const std::string& name )
{
  return parse_clone( name );
}

/*! Membership predicate named on the command line: a clone id, `B<l>`, or `threshold`. */
std::function<bool( const bool_fn& )> member_predicate( const std::string& name,
                                                        const global_options& opts )
{
  if ( name == "threshold" )
  {
    return [&opts]( const bool_fn& f ) { return is_threshold( f, opts.budget_points ).has_value(); };
  }
  if ( name.size() > 1 && name[0] == 'B' )
  {
    const int ell = std::stoi( name.substr( 1 ) );
    return [ell, &opts]( const bool_fn& f ) {
      return preserves_b_fast( f, ell, opts.budget_multisets );
    };
  }
  const clone_id c = clone_from_string( name );
  return [c]( const bool_fn& f ) { return is_member( f, c ); };
}

json clone_membership_summary( const bool_fn& f )
{
  json memberships = json::object();
  for ( const auto& c : clone_catalogue( { 2, 3, rank_infinity } ) )
  {
    memberships[clone_name( c )] = is_member( f, c );
  }
  return memberships;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "exact threshold-function and Boolean-clone analysis" };
  app.require_subcommand( 1 );
  app.fallthrough(); // global flags may follow the subcommand
  global_options opts;
  app.add_option( "--budget-multisets,--max-multisets", opts.budget_multisets,
                  "cap on enumerated multisets per search phase" );
  app.add_option( "--budget-columns", opts.budget_columns,
                  "cap on column choices in raw preservation checks" );
  app.add_option( "--budget-points", opts.budget_points, "cap on points per exact LP" );
  app.add_option( "--seed", opts.seed, "seed recorded in reports" );
  app.add_option( "--format", opts.format, "json or text" )
      ->check( CLI::IsMember( { "json", "text" } ) );

  std::string fn_text, constraint_text, clone_text, tag_text, check_text, member_text, suite_name;
  int ell = 0, k_param = 3, max_arity = 2, rank_bound = 4, transport_ell = 0;
  bool want_certificate = false, want_minimal = false, want_raw = false, want_witness = false;
  bool want_crosscheck = false, want_timings = false;
  std::optional<int> tz_base;
  std::vector<std::string> constraint_list;

  auto* analyze = app.add_subcommand( "analyze", "table summary: essential variables, memberships, thresholdness" );
  analyze->add_option( "--fn", fn_text, "function as <arity>:<hex>" )->required();

  auto* pres = app.add_subcommand( "preserves", "does f preserve a constraint" );
  pres->add_option( "--fn", fn_text )->required();
  pres->add_option( "--b", ell, "use the balanced-weights constraint B_<l>" );
  pres->add_option( "--constraint", constraint_text, "explicit constraint R|S" );
  pres->add_flag( "--raw", want_raw, "force raw column enumeration" );
  pres->add_flag( "--witness", want_witness, "emit the violation object if any" );

  auto* asum = app.add_subcommand( "asummable", "k-asummability with witnesses" );
  asum->add_option( "--fn", fn_text )->required();
  asum->add_option( "--k", ell, "largest multiset size to test" )->required();

  auto* thr = app.add_subcommand( "threshold", "exact thresholdness" );
  thr->add_option( "--fn", fn_text )->required();
  thr->add_flag( "--certificate", want_certificate, "include weights and threshold" );
  thr->add_flag( "--minimal", want_minimal, "also test minimal non-thresholdness" );

  auto* clone_cmd = app.add_subcommand( "clone", "clone membership" );
  clone_cmd->add_option( "--fn", fn_text )->required();
  clone_cmd->add_option( "--id", clone_text, "clone identifier, e.g. SM, McUinf, U2" )->required();
  clone_cmd->add_flag( "--crosscheck", want_crosscheck,
                       "also verify against the characterizing constraints" );
  clone_cmd->add_option( "--rank-bound", rank_bound, "truncation rank for infinite families" );

  auto* cons = app.add_subcommand( "construct", "apply a clone-steering construction" );
  cons->add_option( "--tag", tag_text, "gs|gmc|gsm|guinf|gmcuinf|gmcwinf" )->required();
  cons->add_option( "--fn", fn_text )->required();
  cons->add_option( "--transport-ell", transport_ell,
                    "transport f's equal-sum witness at this l up the construction" );

  auto* tz = app.add_subcommand( "tz", "magic-square instances and their checks" );
  tz->add_option( "--k", k_param, "grid size, k >= 3" )->required();
  tz->add_option( "--check", check_text, "all|rowcol|monotone|B=<l>" );
  tz->add_option( "--base", tz_base, "digit base R (defaults to k^2-k+1)" );

  auto* cls = app.add_subcommand( "classify", "finite characterizability of threshold functions in clones" );
  cls->add_option( "--id", clone_text, "single clone id; omit for the full table" );

  auto* pol = app.add_subcommand( "pol", "enumerate polymorphisms of constraints" );
  pol->add_option( "--constraint", constraint_list, "constraint R|S (repeatable)" );
  pol->add_option( "--b", ell, "include the balanced-weights constraint B_<l>" );
  pol->add_option( "--max-arity", max_arity, "largest arity to enumerate (<= 4)" );

  auto* forb = app.add_subcommand( "forbidden-minors", "minimal forbidden minors of a membership predicate" );
  forb->add_option( "--member", member_text, "clone id, B<l>, or threshold" )->required();
  forb->add_option( "--max-arity", max_arity, "largest arity to scan (<= 4)" );

  auto* suite = app.add_subcommand( "suite", "run a verification suite" );
  suite->add_option( "--name", suite_name, "paper-core|constructions|tz|classification" )
      ->required();
  suite->add_flag( "--timings", want_timings, "include elapsed times (text output only)" );

  CLI11_PARSE( app, argc, argv );

  try
  {
    if ( *analyze )
    {
      const bool_fn f = parse_fn( fn_text );
      json ess = json::array();
      for ( int v : essential_variables( f ) )
      {
        ess.push_back( v );
      }
      auto cert = is_threshold( f, opts.budget_points );
      json out{ { "fn", format_fn( f ) },
                { "arity", f.arity },
                { "essential_variables", ess },
                { "threshold", cert.has_value() },
                { "clones", clone_membership_summary( f ) } };
      if ( cert )
      {
        out["certificate"] = certificate_to_json( *cert );
      }
      print_json( out, opts );
    }
    else if ( *pres )
    {
      const bool_fn f = parse_fn( fn_text );
      json out{ { "fn", format_fn( f ) } };
      if ( !constraint_text.empty() )
      {
        const auto q = parse_constraint( constraint_text );
        auto v = violation_witness( f, q, opts.budget_columns );
        out["preserves"] = !v.has_value();
        if ( v && want_witness )
        {
          out["violation"] = violation_to_json( *v );
        }
      }
      else
      {
        if ( ell < 2 )
        {
          throw std::domain_error( "preserves: pass --b <l> or --constraint" );
        }
        out["ell"] = ell;
        if ( want_raw )
        {
          auto v = violation_witness( f, make_b( ell ), opts.budget_columns );
          out["preserves"] = !v.has_value();
          if ( v && want_witness )
          {
            out["violation"] = violation_to_json( *v );
          }
        }
        else
        {
          auto w = equal_sums_witness( f, ell, opts.budget_multisets );
          out["preserves"] = !w.has_value();
          if ( w && want_witness )
          {
            out["witness"] = witness_to_json( *w );
          }
        }
      }
      print_json( out, opts );
    }
    else if ( *asum )
    {
      const bool_fn f = parse_fn( fn_text );
      json per_m = json::array();
      bool all = true;
      for ( int m = 2; m <= ell; ++m )
      {
        auto w = equal_sums_witness( f, m, opts.budget_multisets );
        json entry{ { "m", m }, { "asummable", !w.has_value() } };
        if ( w )
        {
          entry["witness"] = witness_to_json( *w );
          all = false;
        }
        per_m.push_back( std::move( entry ) );
      }
      print_json( json{ { "fn", format_fn( f ) }, { "k", ell }, { "k_asummable", all },
                        { "levels", per_m } },
                  opts );
    }
    else if ( *thr )
    {
      const bool_fn f = parse_fn( fn_text );
      auto cert = is_threshold( f, opts.budget_points );
      json out{ { "fn", format_fn( f ) }, { "threshold", cert.has_value() } };
      if ( cert && want_certificate )
      {
        json w = json::array();
        for ( const auto& r : cert->weights )
        {
          w.push_back( rational_string( r ) );
        }
        out["weights"] = w;
        out["t"] = rational_string( cert->threshold );
      }
      if ( want_minimal )
      {
        out["minimally_non_threshold"] = is_minimally_non_threshold( f, opts.budget_points );
      }
      print_json( out, opts );
    }
    else if ( *clone_cmd )
    {
      const bool_fn f = parse_fn( fn_text );
      const clone_id c = clone_from_string( clone_text );
      json out{ { "fn", format_fn( f ) }, { "clone", clone_name( c ) } };
      if ( want_crosscheck )
      {
        out["member"] = membership_crosscheck( f, c, rank_bound, opts.budget_columns );
        out["crosscheck"] = "agreed";
      }
      else
      {
        out["member"] = is_member( f, c );
      }
      print_json( out, opts );
    }
    else if ( *cons )
    {
      const bool_fn f = parse_fn( fn_text );
      const auto tag = try_parse_construction( tag_text );
      if ( !tag )
      {
        throw std::domain_error( "unknown construction tag " + tag_text );
      }
      const bool_fn g = apply_construction( *tag, f );
      json membership{
          { "S", is_member( g, { clone_family::s, 0 } ) },
          { "Mc", is_member( g, { clone_family::mc, 0 } ) },
          { "SM", is_member( g, { clone_family::sm, 0 } ) },
          { "Uinf", is_member( g, { clone_family::u, rank_infinity } ) },
          { "McUinf", is_member( g, { clone_family::mcu, rank_infinity } ) },
          { "McWinf", is_member( g, { clone_family::mcw, rank_infinity } ) } };
      json out{ { "tag", construction_name( *tag ) },
                { "fn", format_fn( f ) },
                { "result", format_fn( g ) },
                { "arity", g.arity },
                { "membership", membership } };
      if ( transport_ell >= 2 )
      {
        auto w = equal_sums_witness( f, transport_ell, opts.budget_multisets );
        if ( w )
        {
          out["transported_witness"] =
              witness_to_json( transport_witness_up( *w, f, *tag ) );
        }
        else
        {
          out["transported_witness"] = nullptr;
        }
      }
      print_json( out, opts );
    }
    else if ( *tz )
    {
      const tz_instance inst = build_tz( k_param, tz_base );
      json weights = json::array();
      for ( const auto& w : inst.weights )
      {
        weights.push_back( w.str() );
      }
      json out{ { "k", inst.k },
                { "base", inst.base },
                { "arity", inst.arity() },
                { "threshold", inst.threshold.str() },
                { "weights", weights } };
      if ( inst.fn )
      {
        out["fn"] = format_fn( *inst.fn );
      }
      const std::string check = check_text.empty() ? "all" : check_text;
      json checks = json::object();
      if ( check == "all" || check == "rowcol" )
      {
        checks["rowcol"] = verify_row_col_lemma( inst.k, opts.budget_columns );
      }
      if ( check == "all" || check == "monotone" )
      {
        checks["monotone"] = is_monotone( inst.table() );
      }
      auto b_check = [&]( int l ) {
        json entry{ { "ell", l }, { "preserves", tz_preserves_b( inst, l, opts.budget_multisets ) } };
        if ( l % inst.k == 0 )
        {
          entry["witness"] = witness_to_json( periodic_witness( inst, l ) );
        }
        return entry;
      };
      if ( check == "all" )
      {
        json bl = json::array();
        for ( int l = 2; l <= 2 * inst.k; ++l )
        {
          bl.push_back( b_check( l ) );
        }
        checks["b_family"] = bl;
      }
      else if ( check.rfind( "B=", 0 ) == 0 )
      {
        checks["b_family"] = json::array( { b_check( std::stoi( check.substr( 2 ) ) ) } );
      }
      out["checks"] = checks;
      print_json( out, opts );
    }
    else if ( *cls )
    {
      if ( !clone_text.empty() )
      {
        print_json( verdict_to_json( classify_intersection( clone_from_string( clone_text ) ) ),
                    opts );
      }
      else
      {
        json table = json::array();
        for ( const auto& c : clone_catalogue() )
        {
          table.push_back( verdict_to_json( classify_intersection( c ) ) );
        }
        print_json( json{ { "table", table } }, opts );
      }
    }
    else if ( *pol )
    {
      std::vector<relational_constraint> qs;
      for ( const auto& text : constraint_list )
      {
        qs.push_back( parse_constraint( text ) );
      }
      if ( ell >= 2 )
      {
        qs.push_back( make_b( ell ) );
      }
      auto sets = pol_enumerate( qs, max_arity, opts.budget_columns );
      json counts = json::object(), tables = json::object();
      for ( const auto& [n, fns] : sets )
      {
        counts[std::to_string( n )] = fns.size();
        json list = json::array();
        for ( const auto& f : fns )
        {
          list.push_back( format_fn( f ) );
        }
        tables[std::to_string( n )] = list;
      }
      print_json( json{ { "counts", counts }, { "functions", tables } }, opts );
    }
    else if ( *forb )
    {
      auto mins = minimal_forbidden_minors( member_predicate( member_text, opts ), max_arity );
      json list = json::array();
      for ( const auto& f : mins )
      {
        list.push_back( format_fn( f ) );
      }
      print_json( json{ { "member", member_text }, { "max_arity", max_arity },
                        { "minimal_forbidden_minors", list } },
                  opts );
    }
    else if ( *suite )
    {
      suite_budgets budgets;
      budgets.multisets = opts.budget_multisets;
      budgets.columns = opts.budget_columns;
      budgets.lp_points = opts.budget_points;
      budgets.seed = opts.seed;
      const auto rep = run_suite( suite_name, budgets );
      std::cout << emit_report( rep, opts.format, want_timings );
      return rep.overall() ? 0 : 1;
    }
  }
  catch ( const std::exception& e )
  {
    if ( opts.format == "json" )
    {
      std::cout << json{ { "schema", 1 }, { "error", e.what() } }.dump( 2 ) << "\n";
    }
    else
    {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
  }
  return 0;
}
