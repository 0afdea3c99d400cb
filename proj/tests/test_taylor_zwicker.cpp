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

#include <string>

using namespace thrlab;

namespace
{
/*! Base-R value of a digit string, by Horner's rule. */
big_int digits_value( const std::string& digits, int base )
{
  big_int v = 0;
  for ( char c : digits )
  {
    v = v * base + ( c - '0' );
  }
  return v;
}
} // namespace

TEST_CASE( "the A matrices" )
{
  const auto a23 = a_matrix( 4, 2, 3 );
  const std::vector<int> expected = { 1, 1, 0, 1, 0, 0, 3, 0, 1, 1, 0, 1, 1, 1, 0, 1 };
  CHECK( a23.entries == expected );

  const auto a11 = a_matrix( 3, 1, 1 );
  CHECK( a11.entries == std::vector<int>{ 2, 0, 0, 0, 1, 1, 0, 1, 1 } );

  for ( int k : { 3, 4, 5 } )
  {
    for ( int p = 1; p <= k; ++p )
    {
      for ( int q = 1; q <= k; ++q )
      {
        const auto m = a_matrix( k, p, q );
        for ( int i = 1; i <= k; ++i )
        {
          int row_sum = 0;
          for ( int j = 1; j <= k; ++j )
          {
            row_sum += m.at( i, j );
          }
          CHECK( row_sum == k - 1 );
        }
      }
    }
  }
  CHECK_THROWS_AS( a_matrix( 4, 0, 1 ), std::domain_error );
  CHECK_THROWS_AS( a_matrix( 4, 1, 5 ), std::domain_error );
}

TEST_CASE( "row-major base-R encoding" )
{
  CHECK( phi_encode( a_matrix( 4, 2, 3 ), 13 ) == digits_value( "1101003011011101", 13 ) );

  square_matrix all3( 4 );
  for ( auto& e : all3.entries )
  {
    e = 3;
  }
  CHECK( phi_encode( all3, 13 ) == digits_value( "3333333333333333", 13 ) );

  // no-carry additivity at k = 3, base 7
  const auto a = a_matrix( 3, 1, 1 ), b = a_matrix( 3, 2, 2 );
  CHECK( phi_encode( a + b, 7 ) == phi_encode( a, 7 ) + phi_encode( b, 7 ) );

  square_matrix overflow( 3 );
  overflow.at( 1, 1 ) = 7;
  CHECK_THROWS_AS( phi_encode( overflow, 7 ), std::domain_error );
}

TEST_CASE( "instance construction" )
{
  const auto tz3 = build_tz( 3 );
  CHECK( tz3.base == 7 );
  CHECK( tz3.arity() == 9 );
  square_matrix all2( 3 );
  for ( auto& e : all2.entries )
  {
    e = 2;
  }
  CHECK( tz3.threshold == phi_encode( all2, 7 ) );

  // rows are true points, columns are false points
  for ( int i = 1; i <= 3; ++i )
  {
    CHECK( eval( tz3.table(), point( tz_row_word( 3, i ), 9 ) ) == 1 );
    CHECK( eval( tz3.table(), point( tz_col_word( 3, i ), 9 ) ) == 0 );
    CHECK( tz_dot( tz3, tz_col_word( 3, i ) ) == tz3.threshold );
  }

  CHECK_THROWS_AS( build_tz( 2 ), std::domain_error );
  CHECK_THROWS_AS( build_tz( 3, 6 ), std::domain_error );
  CHECK( build_tz( 3, 11 ).base == 11 );

  const auto tz5 = build_tz( 5 );
  CHECK( tz5.weights.size() == 25 );
  CHECK_THROWS_AS( tz5.table(), resource_error );
}

TEST_CASE( "row/column sums: the lemma check and two hand cases" )
{
  CHECK( verify_row_col_lemma( 3 ) );
  CHECK( verify_row_col_lemma( 4 ) );
  CHECK_THROWS_AS( verify_row_col_lemma( 5 ), resource_error );

  // the diagonal pair misses the target, a full row hits it
  const auto diag = a_matrix( 3, 1, 1 ) + a_matrix( 3, 2, 2 );
  bool diag_is_b = true;
  for ( int e : diag.entries )
  {
    diag_is_b = diag_is_b && e == 2;
  }
  CHECK( !diag_is_b );

  auto row1 = a_matrix( 3, 1, 1 ) + a_matrix( 3, 1, 2 ) + a_matrix( 3, 1, 3 );
  bool row_is_b = true;
  for ( int e : row1.entries )
  {
    row_is_b = row_is_b && e == 2;
  }
  CHECK( row_is_b );
}

TEST_CASE( "the encoding is additive over every cell subset at k = 3" )
{
  // entries of any subset sum stay below the base, so no digit ever carries
  std::vector<big_int> cell_values( 9 );
  for ( int var = 0; var < 9; ++var )
  {
    cell_values[var] = phi_encode( a_matrix( 3, var / 3 + 1, var % 3 + 1 ), 7 );
  }
  for ( uint32_t s = 0; s < 512; ++s )
  {
    square_matrix sum( 3 );
    big_int value_sum = 0;
    for ( int var = 0; var < 9; ++var )
    {
      if ( ( s >> ( 8 - var ) ) & 1 )
      {
        sum = sum + a_matrix( 3, var / 3 + 1, var % 3 + 1 );
        value_sum += cell_values[var];
      }
    }
    CHECK( phi_encode( sum, 7 ) == value_sum );
  }
}

TEST_CASE( "dot products classify exactly the rows and columns at the threshold" )
{
  const auto tz3 = build_tz( 3 );
  for ( uint32_t x = 0; x < 512; ++x )
  {
    bool is_row_or_col = false;
    for ( int i = 1; i <= 3; ++i )
    {
      is_row_or_col = is_row_or_col || x == tz_row_word( 3, i ) || x == tz_col_word( 3, i );
    }
    CHECK( ( tz_dot( tz3, x ) == tz3.threshold ) == is_row_or_col );
  }
}

TEST_CASE( "periodic witnesses" )
{
  const auto tz3 = build_tz( 3 );
  const auto w3 = periodic_witness( tz3, 3 );
  CHECK( w3.false_points.size() == 3 );
  CHECK( point_sum( w3.false_points, 9 ) == std::vector<int>( 9, 1 ) );
  CHECK( validate_witness( tz3.table(), w3 ) );

  const auto w6 = periodic_witness( tz3, 6 );
  CHECK( point_sum( w6.false_points, 9 ) == std::vector<int>( 9, 2 ) );
  CHECK( validate_witness( tz3.table(), w6 ) );

  CHECK_THROWS_AS( periodic_witness( tz3, 4 ), std::domain_error );
}

TEST_CASE( "preservation pattern follows divisibility by k" )
{
  const auto tz3 = build_tz( 3 );
  CHECK( tz_preserves_b( tz3, 2 ) );
  CHECK( !tz_preserves_b( tz3, 3 ) );
  CHECK( !tz_preserves_b( tz3, 6 ) );
  CHECK( tz_preserves_b( tz3, 4 ) );
  CHECK( tz_preserves_b( tz3, 5 ) );

  const auto tz4 = build_tz( 4 );
  CHECK( tz_preserves_b( tz4, 2 ) );
  CHECK( tz_preserves_b( tz4, 3 ) );
  CHECK( !tz_preserves_b( tz4, 4 ) );

  // agreement with the generic search where that is feasible
  CHECK( tz_preserves_b( tz3, 2 ) == preserves_b_fast( tz3.table(), 2 ) );
  CHECK( tz_preserves_b( tz3, 3 ) == preserves_b_fast( tz3.table(), 3 ) );

  // beyond the table ceiling only multiples of k are decidable
  const auto tz5 = build_tz( 5 );
  CHECK( !tz_preserves_b( tz5, 5 ) );
  CHECK_THROWS_AS( tz_preserves_b( tz5, 2 ), resource_error );
}

TEST_CASE( "f_3 is monotone and f_4 is not comparable with it" )
{
  const auto tz3 = build_tz( 3 );
  const auto tz4 = build_tz( 4 );
  CHECK( is_monotone( tz3.table() ) );
  CHECK( is_monotone( tz4.table() ) );

  // all variables essential on both sides, so the larger cannot reduce to the smaller
  CHECK( essential_variables( tz3.table() ).size() == 9 );
  CHECK( essential_variables( tz4.table() ).size() == 16 );

  // the smaller cannot embed either: minors inherit preservation and B_3 tells them apart
  CHECK( tz_preserves_b( tz4, 3 ) );
  CHECK( !tz_preserves_b( tz3, 3 ) );
}

TEST_CASE( "the parity pattern of xor across l = 2..7" )
{
  const bool_fn xor2 = parse_fn( "2:6" );
  for ( int ell = 2; ell <= 7; ++ell )
  {
    CHECK( preserves_b_fast( xor2, ell ) == ( ell % 2 == 1 ) );
  }
}
