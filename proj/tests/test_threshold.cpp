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

#include <thrlab/asummability.hpp>
#include <thrlab/taylor_zwicker.hpp>
#include <thrlab/threshold.hpp>

#include <random>

using namespace thrlab;

namespace
{
const bool_fn and2 = parse_fn( "2:8" );
const bool_fn xor2 = parse_fn( "2:6" );
const bool_fn maj3 = parse_fn( "3:E8" );

threshold_certificate int_cert( std::vector<int> w, int t )
{
  threshold_certificate c;
  for ( int v : w )
  {
    c.weights.push_back( v );
  }
  c.threshold = t;
  return c;
}
} // namespace

TEST_CASE( "decision with certificates on the basic functions" )
{
  auto c_and = is_threshold( and2 );
  REQUIRE( c_and.has_value() );
  CHECK( verify_certificate( and2, *c_and ) );
  CHECK( verify_certificate( and2, int_cert( { 1, 1 }, 2 ) ) );

  CHECK( !is_threshold( xor2 ).has_value() );

  auto c_maj = is_threshold( maj3 );
  REQUIRE( c_maj.has_value() );
  CHECK( verify_certificate( maj3, *c_maj ) );
  CHECK( verify_certificate( maj3, int_cert( { 1, 1, 1 }, 2 ) ) );

  CHECK( is_threshold( constant_fn( 3, 0 ) ).has_value() );
  CHECK( is_threshold( constant_fn( 3, 1 ) ).has_value() );
}

TEST_CASE( "certificate verification rejects bad data" )
{
  CHECK( !verify_certificate( and2, int_cert( { 1, 1 }, 1 ) ) ); // (0,1) lands on the wrong side
  const auto tz3 = build_tz( 3 );
  threshold_certificate guess;
  for ( const auto& w : tz3.weights )
  {
    guess.weights.push_back( rational( w ) );
  }
  guess.threshold = rational( tz3.threshold );
  CHECK( !verify_certificate( tz3.table(), guess ) );
  CHECK_THROWS_AS( verify_certificate( and2, int_cert( { 1 }, 0 ) ), std::invalid_argument );
}

TEST_CASE( "minimal non-thresholdness" )
{
  CHECK( is_minimally_non_threshold( xor2 ) );
  CHECK( !is_minimally_non_threshold( and2 ) );
  const auto tz3 = build_tz( 3 );
  CHECK( is_minimally_non_threshold( tz3.table() ) );
}

TEST_CASE( "thresholdness is closed under minors, duals and negation" )
{
  std::mt19937_64 rng( 41 );
  for ( int iter = 0; iter < 120; ++iter )
  {
    const int n = 1 + static_cast<int>( rng() % 4 );
    const bool_fn f = fn_from_word( n, rng() );
    const bool thr = is_threshold( f ).has_value();
    CHECK( is_threshold( dual( f ) ).has_value() == thr );
    CHECK( is_threshold( negate( f ) ).has_value() == thr );
    if ( thr )
    {
      const int m = 1 + static_cast<int>( rng() % n );
      minor_map sigma{ n, m, {} };
      for ( int i = 0; i < n; ++i )
      {
        sigma.map.push_back( static_cast<int>( rng() % m ) );
      }
      CHECK( is_threshold( minor( f, sigma ) ).has_value() );
    }
  }
}

TEST_CASE( "arity <= 4, exhaustively: thresholds are 4-asummable and closed under dual/negation" )
{
  for ( int n = 1; n <= 4; ++n )
  {
    std::vector<bool> verdict( std::size_t( 1 ) << ( 1 << n ) );
    for ( uint64_t t = 0; t < verdict.size(); ++t )
    {
      const bool_fn f = fn_from_word( n, t );
      verdict[t] = is_threshold( f ).has_value();
      if ( verdict[t] )
      {
        CHECK( is_k_asummable( f, 4 ) );
      }
    }
    for ( uint64_t t = 0; t < verdict.size(); ++t )
    {
      const bool_fn f = fn_from_word( n, t );
      CHECK( verdict[dual( f ).table[0]] == verdict[t] );
      CHECK( verdict[negate( f ).table[0]] == verdict[t] );
    }
  }
}

TEST_CASE( "LP verdict equals the integer-weight oracle at arity 3" )
{
  std::vector<bool> realizable( 256, false );
  for ( int w1 = -8; w1 <= 8; ++w1 )
  {
    for ( int w2 = -8; w2 <= 8; ++w2 )
    {
      for ( int w3 = -8; w3 <= 8; ++w3 )
      {
        int dots[8];
        for ( int p = 0; p < 8; ++p )
        {
          dots[p] = ( p >> 2 & 1 ) * w1 + ( p >> 1 & 1 ) * w2 + ( p & 1 ) * w3;
        }
        for ( int t = -24; t <= 25; ++t )
        {
          unsigned table = 0;
          for ( int p = 0; p < 8; ++p )
          {
            if ( dots[p] >= t )
            {
              table |= 1u << p;
            }
          }
          realizable[table] = true;
        }
      }
    }
  }
  for ( unsigned t = 0; t < 256; ++t )
  {
    CHECK( is_threshold( fn_from_word( 3, t ) ).has_value() == realizable[t] );
  }
}

TEST_CASE( "classification verdicts" )
{
  const auto lamc = classify_intersection( { clone_family::lamc, 0 } );
  CHECK( lamc.finitely_characterizable );
  CHECK( lamc.reason == characterizability_reason::subclone_of_l_v_lambda );

  const auto sm = classify_intersection( { clone_family::sm, 0 } );
  CHECK( !sm.finitely_characterizable );
  CHECK( sm.reason == characterizability_reason::contains_sm );

  const auto omega = classify_intersection( { clone_family::omega, 0 } );
  CHECK( !omega.finitely_characterizable );

  const auto u2 = classify_intersection( { clone_family::u, 2 } );
  CHECK( u2.reason == characterizability_reason::contains_sm );
  const auto u3 = classify_intersection( { clone_family::u, 3 } );
  CHECK( u3.reason == characterizability_reason::contains_mc_uinf );
  const auto winf = classify_intersection( { clone_family::w, rank_infinity } );
  CHECK( winf.reason == characterizability_reason::contains_mc_winf );

  for ( const auto& c : clone_catalogue() )
  {
    const auto v = classify_intersection( c );
    CHECK( v.finitely_characterizable ==
           ( v.reason == characterizability_reason::subclone_of_l_v_lambda ) );
  }
}

TEST_CASE( "membership in the threshold part of a clone" )
{
  CHECK( intersection_membership( maj3, { clone_family::sm, 0 } ) );
  const auto tz3 = build_tz( 3 );
  CHECK( !intersection_membership( tz3.table(), { clone_family::m, 0 } ) );
  CHECK( intersection_membership( and2, { clone_family::lam, 0 } ) );
}

TEST_CASE( "the claimed witness clones really sit inside the rank-2 separation clones" )
{
  // exhaustive at arity up to 3: self-dual monotone implies 1- and 0-separating of rank 2
  for ( int n = 1; n <= 3; ++n )
  {
    for ( uint64_t t = 0; t < ( uint64_t( 1 ) << ( 1 << n ) ); ++t )
    {
      const bool_fn f = fn_from_word( n, t );
      if ( is_member( f, { clone_family::sm, 0 } ) )
      {
        CHECK( is_member( f, { clone_family::u, 2 } ) );
        CHECK( is_member( f, { clone_family::w, 2 } ) );
      }
    }
  }
}

TEST_CASE( "budget guard" )
{
  CHECK_THROWS_AS( is_threshold( maj3, 4 ), resource_error );
}
