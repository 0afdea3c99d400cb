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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thrlab/report.hpp>

using namespace thrlab;

TEST_CASE( "suites produce the expected records" )
{
  const auto tz = run_suite( "tz" );
  CHECK( tz.overall() );
  bool saw_rowcol = false;
  for ( const auto& r : tz.records )
  {
    if ( r.id == "rowcol-lemma" )
    {
      saw_rowcol = true;
      CHECK( r.verdict == check_verdict::pass );
      CHECK( r.criterion == 3 );
    }
  }
  CHECK( saw_rowcol );

  const auto classification = run_suite( "classification" );
  CHECK( classification.overall() );
  REQUIRE( classification.records.size() == 1 );
  CHECK( classification.records[0].payload.at( "mismatches" ).get<int>() == 0 );

  CHECK_THROWS_AS( run_suite( "nope" ), std::domain_error );
}

TEST_CASE( "a skipped required record blocks the suite" )
{
  verification_report rep;
  rep.suite = "synthetic";
  check_record skip;
  skip.verdict = check_verdict::skip;
  skip.required = true;
  rep.records.push_back( skip );
  CHECK( !rep.overall() );
  rep.records[0].required = false;
  CHECK( rep.overall() );
}

TEST_CASE( "json emission is byte-identical across runs" )
{
  const auto a = emit_report( run_suite( "classification" ), "json" );
  const auto b = emit_report( run_suite( "classification" ), "json" );
  CHECK( a == b );
  CHECK( report_to_json( run_suite( "classification" ) ).at( "schema" ).get<int>() == 1 );
}

TEST_CASE( "text emission mentions every record" )
{
  const auto rep = run_suite( "classification" );
  const auto text = emit_report( rep, "text" );
  CHECK( text.find( "classification-table" ) != std::string::npos );
  CHECK( text.find( "overall: pass" ) != std::string::npos );
  CHECK_THROWS_AS( emit_report( rep, "yaml" ), std::domain_error );
}

TEST_CASE( "function parsing round trips through formatting" )
{
  CHECK( parse_fn( "2:8" ) == fn_from_word( 2, 0x8 ) );
  CHECK( format_fn( parse_fn( "3:E8" ) ) == "3:E8" );
  CHECK_THROWS_AS( parse_fn( "2:G1" ), parse_error );
  try
  {
    parse_fn( "2:G1" );
  }
  catch ( const parse_error& e )
  {
    CHECK( e.position == 2 );
  }
}

TEST_CASE( "witness and certificate serialization shapes" )
{
  const bool_fn xor2 = parse_fn( "2:6" );
  auto w = equal_sums_witness( xor2, 2 );
  REQUIRE( w.has_value() );
  const json j = witness_to_json( *w );
  CHECK( j.at( "ell" ).get<int>() == 2 );
  CHECK( j.at( "false_points" ).size() == 2 );
  CHECK( j.at( "false_points" )[0] == json::array( { 0, 0 } ) );

  threshold_certificate cert;
  cert.weights = { rational( 1, 2 ), rational( -3 ) };
  cert.threshold = rational( 5, 4 );
  const json cj = certificate_to_json( cert );
  CHECK( cj.at( "weights" )[0].get<std::string>() == "1/2" );
  CHECK( cj.at( "weights" )[1].get<std::string>() == "-3/1" );
  CHECK( cj.at( "t" ).get<std::string>() == "5/4" );
}
