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

#include <thrlab/bool_fn.hpp>

#include <random>
#include <set>

using namespace thrlab;

namespace
{
const bool_fn and2 = parse_fn( "2:8" );
const bool_fn or2 = parse_fn( "2:E" );
const bool_fn xor2 = parse_fn( "2:6" );
const bool_fn xnor2 = parse_fn( "2:9" );
const bool_fn not1 = parse_fn( "1:1" );
const bool_fn maj3 = parse_fn( "3:E8" );

bool_fn random_fn( std::mt19937_64& rng, int arity )
{
  return fn_from_word( arity, rng() & ( ( uint64_t( 1 ) << ( 1 << arity ) ) - 1 ) );
}

minor_map random_map( std::mt19937_64& rng, int n, int m )
{
  minor_map s;
  s.source_arity = n;
  s.target_arity = m;
  for ( int i = 0; i < n; ++i )
  {
    s.map.push_back( static_cast<int>( rng() % m ) );
  }
  return s;
}
} // namespace

TEST_CASE( "evaluation at defining points" )
{
  CHECK( eval( and2, point::from_bits( { 1, 1 } ) ) == 1 );
  CHECK( eval( xor2, point::from_bits( { 1, 0 } ) ) == 1 );
  CHECK( eval( and2, point::from_bits( { 0, 1 } ) ) == 0 );
  CHECK_THROWS_AS( eval( and2, point::from_bits( { 1, 1, 0 } ) ), std::invalid_argument );
}

TEST_CASE( "point encoding round trips through every arity up to 8" )
{
  for ( int n = 1; n <= 8; ++n )
  {
    for ( uint32_t w = 0; w < ( uint32_t( 1 ) << n ); ++w )
    {
      const point p = point_from_index( w, n );
      CHECK( point_index( p ) == w );
      CHECK( point::from_bits( p.bits() ) == p );
    }
  }
}

TEST_CASE( "minors: identification, annihilation, permutation" )
{
  minor_map collapse{ 2, 1, { 0, 0 } };
  CHECK( minor( and2, collapse ) == parse_fn( "1:2" ) ); // x and x = x
  CHECK( minor( xor2, collapse ) == parse_fn( "1:0" ) ); // x xor x = 0

  minor_map swap{ 2, 2, { 1, 0 } };
  CHECK( minor( projection( 2, 0 ), swap ) == projection( 2, 1 ) );
}

TEST_CASE( "identification minors follow the index-collapsing map" )
{
  CHECK( identification_minor( xor2, 0, 1 ) == constant_fn( 1, 0 ) );
  CHECK( identification_minor( and2, 0, 1 ) == parse_fn( "1:2" ) );

  // evaluate maj3(x, x, y) at all four points by hand
  bool_fn expected( 2 );
  for ( uint32_t w = 0; w < 4; ++w )
  {
    const int x = w >> 1, y = w & 1;
    expected.set_bit( w, eval( maj3, point::from_bits( { x, x, y } ) ) );
  }
  CHECK( identification_minor( maj3, 0, 1 ) == expected );
  CHECK( expected == projection( 2, 0 ) );

  CHECK_THROWS_AS( identification_minor( not1, 0, 0 ), std::domain_error );
}

TEST_CASE( "minor relation: membership, reflexivity, a negative case" )
{
  CHECK( is_minor_of( parse_fn( "1:2" ), and2 ) );
  CHECK( is_minor_of( xor2, xor2 ) );
  CHECK( !is_minor_of( not1, and2 ) ); // all 2^2 maps fail
  CHECK_THROWS_AS( is_minor_of( xor2, maj3, 2 ), resource_error );
}

TEST_CASE( "dual, negation, shift" )
{
  CHECK( dual( and2 ) == or2 );
  CHECK( negate( negate( maj3 ) ) == maj3 );
  CHECK( shift( xor2, point::from_bits( { 1, 0 } ) ) == xnor2 );
  CHECK_THROWS_AS( shift( xor2, point::from_bits( { 1 } ) ), std::invalid_argument );
}

TEST_CASE( "essential variables" )
{
  CHECK( essential_variables( and2 ) == std::vector<int>{ 0, 1 } );
  CHECK( essential_variables( constant_fn( 3, 0 ) ).empty() );
  CHECK( essential_variables( maj3 ) == std::vector<int>{ 0, 1, 2 } );
}

TEST_CASE( "minor composition law on random instances" )
{
  std::mt19937_64 rng( 7 );
  for ( int iter = 0; iter < 200; ++iter )
  {
    const int n = 1 + static_cast<int>( rng() % 3 );
    const int m1 = 1 + static_cast<int>( rng() % 3 );
    const int m2 = 1 + static_cast<int>( rng() % 3 );
    const bool_fn g = random_fn( rng, n );
    const minor_map sigma = random_map( rng, n, m1 );
    const minor_map tau = random_map( rng, m1, m2 );
    minor_map composed{ n, m2, {} };
    for ( int i = 0; i < n; ++i )
    {
      composed.map.push_back( tau.map[sigma.map[i]] );
    }
    CHECK( minor( minor( g, sigma ), tau ) == minor( g, composed ) );
  }
}

TEST_CASE( "minor relation is reflexive and transitive on a random sample" )
{
  std::mt19937_64 rng( 11 );
  std::vector<bool_fn> sample;
  for ( int i = 0; i < 12; ++i )
  {
    sample.push_back( random_fn( rng, 1 + static_cast<int>( rng() % 3 ) ) );
  }
  for ( const auto& f : sample )
  {
    CHECK( is_minor_of( f, f ) );
  }
  for ( const auto& f : sample )
  {
    for ( const auto& g : sample )
    {
      for ( const auto& h : sample )
      {
        if ( is_minor_of( f, g ) && is_minor_of( g, h ) )
        {
          CHECK( is_minor_of( f, h ) );
        }
      }
    }
  }
}

TEST_CASE( "dual, negate and shift are involutions at arity up to 3" )
{
  for ( int n = 1; n <= 3; ++n )
  {
    for ( uint64_t t = 0; t < ( uint64_t( 1 ) << ( 1 << n ) ); ++t )
    {
      const bool_fn f = fn_from_word( n, t );
      CHECK( dual( dual( f ) ) == f );
      CHECK( negate( negate( f ) ) == f );
      for ( uint32_t u = 0; u < ( uint32_t( 1 ) << n ); ++u )
      {
        const point up = point_from_index( u, n );
        CHECK( shift( shift( f, up ), up ) == f );
      }
    }
  }
}

TEST_CASE( "a minor's essential variables never exceed the map's image" )
{
  std::mt19937_64 rng( 23 );
  for ( int iter = 0; iter < 300; ++iter )
  {
    const int n = 1 + static_cast<int>( rng() % 3 );
    const int m = 1 + static_cast<int>( rng() % 3 );
    const bool_fn g = random_fn( rng, n );
    const minor_map sigma = random_map( rng, n, m );
    std::set<int> image( sigma.map.begin(), sigma.map.end() );
    CHECK( essential_variables( minor( g, sigma ) ).size() <= image.size() );
  }
}

TEST_CASE( "equivalence canonicalization" )
{
  // pad xor with an inessential argument: still equivalent
  minor_map pad{ 2, 3, { 0, 1 } };
  CHECK( equivalent( minor( xor2, pad ), xor2 ) );
  CHECK( equivalent( xor2, parse_fn( "2:6" ) ) );
  CHECK( !equivalent( xor2, xnor2 ) );
  CHECK( canonical_form( constant_fn( 3, 1 ) ) == constant_fn( 1, 1 ) );
}

TEST_CASE( "text format round trips and rejects malformed input" )
{
  CHECK( format_fn( and2 ) == "2:8" );
  CHECK( format_fn( maj3 ) == "3:E8" );
  CHECK( parse_fn( format_fn( maj3 ) ) == maj3 );
  for ( int n = 1; n <= 4; ++n )
  {
    std::mt19937_64 rng( 100 + n );
    for ( int i = 0; i < 50; ++i )
    {
      const bool_fn f = fn_from_word( n, rng() );
      CHECK( parse_fn( format_fn( f ) ) == f );
    }
  }
  CHECK_THROWS_AS( parse_fn( "2:G1" ), parse_error );
  CHECK_THROWS_AS( parse_fn( "2:8F0" ), parse_error );
  CHECK_THROWS_AS( parse_fn( "8" ), parse_error );
  CHECK_THROWS_AS( parse_fn( "0:1" ), parse_error );
}
