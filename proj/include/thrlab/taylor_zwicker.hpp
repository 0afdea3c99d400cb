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
  \file taylor_zwicker.hpp
  \brief Magic-square weight functions whose B_l preservation tracks divisibility by k

  The k x k matrices A^{p,q} carry k-1 at cell (p,q), 1 off its row and
  column, 0 elsewhere; all of them summed over a cell set equal the
  all-(k-1) matrix exactly on rows and columns.  Reading a matrix
  row-major as base-R digits (R >= k^2 - k + 1 keeps sums carry-free)
  turns this into weights w and threshold t with x.w = t exactly on row
  and column characteristic tuples.  The arity-k^2 function

      f_k(x) = 1  iff  x.w > t or x is a row

  preserves B_l exactly when k does not divide l: the witnesses for
  k | l are m copies of every column against m copies of every row, and
  the converse is decided by the tie-set search of asummability.hpp with
  (w, t) as the separating hyperplane.

  Weights and thresholds are exact big integers throughout; dot products
  are never rounded.
*/

#pragma once

#include "asummability.hpp"
#include "bool_fn.hpp"
#include "common.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace thrlab
{

/*! \brief A k x k grid of small naturals. */
struct square_matrix
{
  int k = 0;
  std::vector<int> entries; //!< row-major, k*k of them

  square_matrix() = default;

  explicit square_matrix( int k ) : k( k ), entries( static_cast<std::size_t>( k ) * k, 0 ) {}

  int& at( int i, int j )
  {
    return entries[static_cast<std::size_t>( i - 1 ) * k + ( j - 1 )];
  }

  int at( int i, int j ) const
  {
    return entries[static_cast<std::size_t>( i - 1 ) * k + ( j - 1 )];
  }

  friend square_matrix operator+( const square_matrix& a, const square_matrix& b )
  {
    if ( a.k != b.k )
    {
      throw std::invalid_argument( "square_matrix: size mismatch" );
    }
    square_matrix s( a.k );
    for ( std::size_t i = 0; i < s.entries.size(); ++i )
    {
      s.entries[i] = a.entries[i] + b.entries[i];
    }
    return s;
  }

  friend bool operator==( const square_matrix&, const square_matrix& ) = default;
};

/*! \brief A^{p,q}: k-1 at (p,q), 1 where both row and column differ, 0 elsewhere. */
inline square_matrix a_matrix( int k, int p, int q )
{
  if ( k < 3 || p < 1 || p > k || q < 1 || q > k )
  {
    throw std::domain_error( "a_matrix: index out of range" );
  }
  square_matrix m( k );
  for ( int i = 1; i <= k; ++i )
  {
    for ( int j = 1; j <= k; ++j )
    {
      m.at( i, j ) = ( i == p && j == q ) ? k - 1 : ( i != p && j != q ) ? 1 : 0;
    }
  }
  return m;
}

/*! \brief The base-R number whose digits are the entries read row-major. */
inline big_int phi_encode( const square_matrix& m, int base )
{
  big_int v = 0;
  for ( int e : m.entries )
  {
    if ( e < 0 || e >= base )
    {
      throw std::domain_error( "phi_encode: entry not a base-" + std::to_string( base ) +
                               " digit" );
    }
    v = v * base + e;
  }
  return v;
}

/*!
  \brief One magic-square instance: weights, threshold, and (for k <= 4) the table.

  The cell (p, q) maps to variable beta(p,q) = (p-1)*k + q, counted from 1;
  in 0-based variable terms cell (p,q) is variable (p-1)*k + (q-1).
*/
struct tz_instance
{
  int k = 0;
  int base = 0;                 //!< R
  std::vector<big_int> weights; //!< k^2 entries, indexed by the cell bijection
  big_int threshold;            //!< phi of the all-(k-1) matrix
  std::optional<bool_fn> fn;    //!< materialized only when k^2 <= max_fn_arity

  int arity() const
  {
    return k * k;
  }

  /*! \brief The table; raises resource_error when the arity exceeded the ceiling. */
  const bool_fn& table() const
  {
    if ( !fn )
    {
      throw resource_error( "tz_instance: arity " + std::to_string( arity() ) +
                            " table was not materialized" );
    }
    return *fn;
  }
};

/*! \brief Characteristic tuple of row i (1-based) as a point word. */
inline uint32_t tz_row_word( int k, int i )
{
  const int n = k * k;
  uint32_t w = 0;
  for ( int q = 1; q <= k; ++q )
  {
    const int var = ( i - 1 ) * k + ( q - 1 );
    w |= uint32_t( 1 ) << ( n - 1 - var );
  }
  return w;
}

/*! \brief Characteristic tuple of column j (1-based) as a point word. */
inline uint32_t tz_col_word( int k, int j )
{
  const int n = k * k;
  uint32_t w = 0;
  for ( int p = 1; p <= k; ++p )
  {
    const int var = ( p - 1 ) * k + ( j - 1 );
    w |= uint32_t( 1 ) << ( n - 1 - var );
  }
  return w;
}

/*! \brief Exact x.w for the point encoded by `word`. */
inline big_int tz_dot( const tz_instance& inst, uint32_t word )
{
  const int n = inst.arity();
  big_int dot = 0;
  for ( int var = 0; var < n; ++var )
  {
    if ( ( word >> ( n - 1 - var ) ) & 1 )
    {
      dot += inst.weights[var];
    }
  }
  return dot;
}

/*! \brief Pointwise f_k: x.w > t, or x is a row. */
inline int tz_eval( const tz_instance& inst, uint32_t word )
{
  for ( int i = 1; i <= inst.k; ++i )
  {
    if ( word == tz_row_word( inst.k, i ) )
    {
      return 1;
    }
  }
  return tz_dot( inst, word ) > inst.threshold ? 1 : 0;
}

/*!
  \brief Builds the instance for k >= 3; base defaults to the minimum k^2 - k + 1.

  The table is materialized for k <= 4 (arities 9 and 16); beyond that the
  weights and threshold are still produced and `table()` raises.
*/
inline tz_instance build_tz( int k, std::optional<int> base = std::nullopt )
{
  if ( k < 3 )
  {
    throw std::domain_error( "build_tz: need k >= 3" );
  }
  const int min_base = k * k - k + 1;
  if ( base && *base < min_base )
  {
    throw std::domain_error( "build_tz: base must be at least k^2 - k + 1 = " +
                             std::to_string( min_base ) );
  }
  tz_instance inst;
  inst.k = k;
  inst.base = base.value_or( min_base );
  inst.weights.resize( static_cast<std::size_t>( k ) * k );
  for ( int p = 1; p <= k; ++p )
  {
    for ( int q = 1; q <= k; ++q )
    {
      inst.weights[static_cast<std::size_t>( p - 1 ) * k + ( q - 1 )] =
          phi_encode( a_matrix( k, p, q ), inst.base );
    }
  }
  square_matrix all( k );
  for ( auto& e : all.entries )
  {
    e = k - 1;
  }
  inst.threshold = phi_encode( all, inst.base );

  if ( k * k <= max_fn_arity )
  {
    bool_fn f( k * k );
    for ( uint64_t idx = 0; idx < f.num_bits(); ++idx )
    {
      f.set_bit( idx, tz_eval( inst, static_cast<uint32_t>( idx ) ) );
    }
    inst.fn = std::move( f );
  }
  return inst;
}

/*!
  \brief Checks that exactly the k rows and k columns of cells sum to the
         all-(k-1) matrix, over all 2^(k^2) cell subsets.
*/
inline bool verify_row_col_lemma( int k, uint64_t budget = 100000000 )
{
  if ( k < 3 )
  {
    throw std::domain_error( "verify_row_col_lemma: need k >= 3" );
  }
  const int n = k * k;
  if ( n > 24 || ( uint64_t( 1 ) << n ) > budget )
  {
    throw resource_error( "verify_row_col_lemma: subset space exceeds budget" );
  }
  uint64_t qualifying = 0;
  for ( uint64_t s = 0; s < ( uint64_t( 1 ) << n ); ++s )
  {
    square_matrix sum( k );
    for ( int var = 0; var < n; ++var )
    {
      if ( ( s >> ( n - 1 - var ) ) & 1 )
      {
        sum = sum + a_matrix( k, var / k + 1, var % k + 1 );
      }
    }
    const bool is_b = std::all_of( sum.entries.begin(), sum.entries.end(),
                                   [&]( int e ) { return e == k - 1; } );
    if ( is_b )
    {
      bool row_or_col = false;
      for ( int i = 1; i <= k && !row_or_col; ++i )
      {
        row_or_col = s == tz_row_word( k, i ) || s == tz_col_word( k, i );
      }
      if ( !row_or_col )
      {
        return false;
      }
      ++qualifying;
    }
  }
  return qualifying == 2 * static_cast<uint64_t>( k );
}

/*!
  \brief The explicit witness for l = m*k: m copies of every column against
         m copies of every row; re-validated pointwise before returning.
*/
inline asummability_witness periodic_witness( const tz_instance& inst, int ell )
{
  if ( ell <= 0 || ell % inst.k != 0 )
  {
    throw std::domain_error( "periodic_witness: l must be a positive multiple of k" );
  }
  const int m = ell / inst.k;
  asummability_witness w;
  w.ell = ell;
  for ( int j = 1; j <= inst.k; ++j )
  {
    for ( int c = 0; c < m; ++c )
    {
      w.false_points.emplace_back( tz_col_word( inst.k, j ), inst.arity() );
      w.true_points.emplace_back( tz_row_word( inst.k, j ), inst.arity() );
    }
  }
  std::sort( w.false_points.begin(), w.false_points.end() );
  std::sort( w.true_points.begin(), w.true_points.end() );
  for ( const auto& p : w.false_points )
  {
    if ( tz_eval( inst, p.word ) != 0 )
    {
      throw consistency_error( "periodic_witness: a column is not a false point" );
    }
  }
  for ( const auto& p : w.true_points )
  {
    if ( tz_eval( inst, p.word ) != 1 )
    {
      throw consistency_error( "periodic_witness: a row is not a true point" );
    }
  }
  if ( point_sum( w.false_points, inst.arity() ) != point_sum( w.true_points, inst.arity() ) )
  {
    throw consistency_error( "periodic_witness: sums differ" );
  }
  return w;
}

/*!
  \brief Whether f_k preserves B_l; equal to preserves_b_fast on the table.

  k | l is certified by the periodic witness.  Otherwise the decision runs
  the tie-set multiset search along the instance's own hyperplane, which
  needs the materialized table; for larger k only the k | l direction is
  available and the rest raises resource_error.
*/
inline bool tz_preserves_b( const tz_instance& inst, int ell, uint64_t budget = 100000000 )
{
  if ( ell < 2 )
  {
    throw std::domain_error( "tz_preserves_b: need l >= 2" );
  }
  if ( ell % inst.k == 0 )
  {
    periodic_witness( inst, ell ); // throws if the certificate fails to validate
    return false;
  }
  if ( !inst.fn )
  {
    throw resource_error( "tz_preserves_b: table unavailable, only multiples of k decidable" );
  }
  return !equal_sums_witness_separated( *inst.fn, ell, inst.weights, inst.threshold, budget )
              .has_value();
}

} // namespace thrlab
