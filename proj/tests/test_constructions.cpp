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

#include <thrlab/clones.hpp>
#include <thrlab/constructions.hpp>
#include <thrlab/relation.hpp>

using namespace thrlab;

namespace
{
const bool_fn and2 = parse_fn( "2:8" );
const bool_fn xor2 = parse_fn( "2:6" );

clone_id id( clone_family f, int rank = 0 )
{
  return clone_id{ f, rank };
}
} // namespace

TEST_CASE( "g_s: table, substitution identity, self-duality" )
{
  // evaluate the defining formula pointwise, independently of the library transform
  const bool_fn g = g_s( and2 );
  bool_fn expected( 3 );
  for ( uint32_t w = 0; w < 8; ++w )
  {
    const int x1 = w >> 2 & 1, x2 = w >> 1 & 1, x3 = w & 1;
    const int fx = x1 & x2;
    const int fdx = 1 - ( ( 1 - x1 ) & ( 1 - x2 ) ); // complement of f at complements = or
    expected.set_bit( w, ( x3 & fx ) | ( ( 1 - x3 ) & fdx ) );
  }
  CHECK( g == expected );
  CHECK( format_fn( g ) == "3:D4" );

  const bool_fn gx = g_s( xor2 );
  for ( uint32_t w = 0; w < 4; ++w )
  {
    CHECK( gx.get_bit( ( w << 1 ) | 1 ) == xor2.get_bit( w ) );
  }
  CHECK( dual( g ) == g );
}

TEST_CASE( "g_mc: case values and self-duality transfer" )
{
  const bool_fn g = g_mc( xor2 );
  CHECK( g.arity == 4 );
  CHECK( eval( g, point::from_bits( { 0, 1, 1, 0 } ) ) == 1 ); // pairs case, f(0,1)
  CHECK( eval( g, point::from_bits( { 1, 1, 0, 1 } ) ) == 1 ); // weight 3 > 2
  CHECK( eval( g, point::from_bits( { 0, 0, 1, 0 } ) ) == 0 ); // weight 1 < 2

  const bool_fn idf = parse_fn( "1:2" );
  CHECK( is_self_dual( idf ) );
  CHECK( is_self_dual( g_mc( idf ) ) );
  CHECK( g_mc( idf ) == projection( 2, 0 ) ); // the first-agreement case reduces to x_1
}

TEST_CASE( "composites: shapes and memberships" )
{
  CHECK( g_uinf( and2 ) == parse_fn( "3:80" ) );
  CHECK( g_sm( xor2 ).arity == 6 );
  CHECK( g_mc_uinf( xor2 ).arity == 5 );
  CHECK( is_member( g_mc_winf( xor2 ), id( clone_family::mcw, rank_infinity ) ) );
  CHECK( g_mc_winf( xor2 ) == dual( g_uinf( g_mc( xor2 ) ) ) );
}

TEST_CASE( "membership targets hold for every function of arity up to 2" )
{
  for ( int n = 1; n <= 2; ++n )
  {
    for ( uint64_t t = 0; t < ( uint64_t( 1 ) << ( 1 << n ) ); ++t )
    {
      const bool_fn f = fn_from_word( n, t );
      CHECK( is_member( g_s( f ), id( clone_family::s ) ) );
      CHECK( is_member( g_mc( f ), id( clone_family::mc ) ) );
      CHECK( is_member( g_sm( f ), id( clone_family::sm ) ) );
      CHECK( is_member( g_uinf( f ), id( clone_family::u, rank_infinity ) ) );
      CHECK( is_member( g_mc_uinf( f ), id( clone_family::mcu, rank_infinity ) ) );
      CHECK( is_member( g_mc_winf( f ), id( clone_family::mcw, rank_infinity ) ) );
    }
  }
}

TEST_CASE( "constructions neither create nor destroy B_l preservation, arity up to 2" )
{
  for ( int n = 1; n <= 2; ++n )
  {
    for ( uint64_t t = 0; t < ( uint64_t( 1 ) << ( 1 << n ) ); ++t )
    {
      const bool_fn f = fn_from_word( n, t );
      for ( int ell = 2; ell <= 3; ++ell )
      {
        const bool base = preserves_b_fast( f, ell );
        for ( auto tag : { construction_tag::gs, construction_tag::gmc, construction_tag::guinf,
                           construction_tag::gsm, construction_tag::gmcuinf,
                           construction_tag::gmcwinf } )
        {
          CHECK( preserves_b_fast( apply_construction( tag, f ), ell ) == base );
        }
      }
    }
  }
}

TEST_CASE( "witness transport up: explicit images and chained re-validation" )
{
  auto w = equal_sums_witness( xor2, 2 );
  REQUIRE( w.has_value() );

  const auto up_s = transport_witness_up( *w, xor2, construction_tag::gs );
  CHECK( up_s.false_points == std::vector<point>{ point::from_bits( { 0, 0, 1 } ),
                                                  point::from_bits( { 1, 1, 1 } ) } );
  CHECK( up_s.true_points == std::vector<point>{ point::from_bits( { 0, 1, 1 } ),
                                                 point::from_bits( { 1, 0, 1 } ) } );
  CHECK( validate_witness( g_s( xor2 ), up_s ) );

  const auto up_mc = transport_witness_up( *w, xor2, construction_tag::gmc );
  CHECK( up_mc.false_points == std::vector<point>{ point::from_bits( { 0, 0, 1, 1 } ),
                                                   point::from_bits( { 1, 1, 0, 0 } ) } );
  CHECK( validate_witness( g_mc( xor2 ), up_mc ) );

  const auto up_sm = transport_witness_up( *w, xor2, construction_tag::gsm );
  CHECK( up_sm.false_points[0].arity == 6 );
  CHECK( validate_witness( g_sm( xor2 ), up_sm ) );

  asummability_witness bad = *w;
  bad.ell = 3;
  CHECK_THROWS_AS( transport_witness_up( bad, xor2, construction_tag::gs ), consistency_error );
}

TEST_CASE( "witness transport down from g_s: round trip" )
{
  auto w = equal_sums_witness( xor2, 2 );
  REQUIRE( w.has_value() );
  const auto up = transport_witness_up( *w, xor2, construction_tag::gs );
  const auto matrix = witness_to_violation( up, g_s( xor2 ) );
  REQUIRE( validate_violation( matrix, g_s( xor2 ), make_b( 2 ) ) );
  const auto down = transport_witness_down_gs( matrix, xor2, 2 );
  CHECK( validate_violation( down, xor2, make_b( 2 ) ) );
}

TEST_CASE( "witness transport down from g_s: every brute-force violation" )
{
  // enumerate all violating column triples of g_s(xor) at l = 2 by plain loops
  const bool_fn g = g_s( xor2 );
  const auto b2 = make_b( 2 );
  const auto& r = b2.antecedent.tuples;
  int transported = 0;
  for ( auto c1 : r )
  {
    for ( auto c2 : r )
    {
      for ( auto c3 : r )
      {
        violation_matrix m;
        m.columns = { c1, c2, c3 };
        uint32_t z = 0;
        for ( int row = 0; row < 4; ++row )
        {
          const int b1 = ( c1 >> ( 3 - row ) ) & 1;
          const int b2bit = ( c2 >> ( 3 - row ) ) & 1;
          const int b3 = ( c3 >> ( 3 - row ) ) & 1;
          m.rows.push_back( point::from_bits( { b1, b2bit, b3 } ) );
          z = ( z << 1 ) | static_cast<uint32_t>( eval( g, m.rows.back() ) );
        }
        m.output = z;
        if ( b2.consequent.contains( z ) )
        {
          continue;
        }
        REQUIRE( validate_violation( m, g, b2 ) );
        const auto down = transport_witness_down_gs( m, xor2, 2 );
        CHECK( validate_violation( down, xor2, b2 ) );
        ++transported;
      }
    }
  }
  CHECK( transported > 0 );
}

TEST_CASE( "witness transport down: all-ones last column drops it unchanged" )
{
  auto w = equal_sums_witness( xor2, 2 );
  const auto up = transport_witness_up( *w, xor2, construction_tag::gs );
  const auto matrix = witness_to_violation( up, g_s( xor2 ) );
  // transported-up points always end in 1, so alpha = 0 and rows survive modulo the last bit
  const auto down = transport_witness_down_gs( matrix, xor2, 2 );
  for ( std::size_t i = 0; i < down.rows.size(); ++i )
  {
    CHECK( down.rows[i].word == matrix.rows[i].word >> 1 );
  }
}

TEST_CASE( "arity ceiling guards composite construction" )
{
  bool_fn wide( 13 );
  CHECK_THROWS_AS( g_mc( wide ), resource_error );
}
