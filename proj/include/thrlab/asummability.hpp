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
  \file asummability.hpp
  \brief Equal-sum multiset witnesses and k-asummability

  A function fails to preserve B_l exactly when there are size-l
  multisets of false points and of true points with equal componentwise
  integer sums.  The search enumerates multisets of the smaller preimage
  in non-decreasing point order, indexes their sum vectors (packed into
  one machine word when the lanes fit, one 8-byte key per multiset),
  then scans multisets of the other side.  The reported witness is the
  lexicographically least one, so results are reproducible.

  `equal_sums_witness_separated` runs the same search restricted to the
  points lying on a caller-supplied weakly separating hyperplane, which
  it first re-verifies exhaustively.  Equal multiset sums force every
  dot product to the common bound, so the restriction loses no witness;
  this is the path that keeps large structured instances inside the
  multiset budget.
*/

#pragma once

#include "bool_fn.hpp"
#include "common.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace thrlab
{

/*! \brief Two equal-sum multisets refuting B_l preservation. */
struct asummability_witness
{
  int ell = 0;
  std::vector<point> false_points; //!< size l, each in f^{-1}(0), sorted
  std::vector<point> true_points;  //!< size l, each in f^{-1}(1), sorted
};

/*! \brief Componentwise integer sum of a point multiset. */
inline std::vector<int> point_sum( const std::vector<point>& pts, int arity )
{
  std::vector<int> s( arity, 0 );
  for ( const auto& p : pts )
  {
    for ( int i = 0; i < arity; ++i )
    {
      s[i] += p.bit( i );
    }
  }
  return s;
}

/*! \brief Full re-validation: sizes, memberships, and the sum identity. */
inline bool validate_witness( const bool_fn& f, const asummability_witness& w )
{
  if ( w.ell < 2 ||
       static_cast<int>( w.false_points.size() ) != w.ell ||
       static_cast<int>( w.true_points.size() ) != w.ell )
  {
    return false;
  }
  for ( const auto& p : w.false_points )
  {
    if ( p.arity != f.arity || eval( f, p ) != 0 )
    {
      return false;
    }
  }
  for ( const auto& p : w.true_points )
  {
    if ( p.arity != f.arity || eval( f, p ) != 1 )
    {
      return false;
    }
  }
  return point_sum( w.false_points, f.arity ) == point_sum( w.true_points, f.arity );
}

namespace detail
{

template<typename Key>
struct sum_key_traits;

template<>
struct sum_key_traits<uint64_t>
{
  static uint64_t increment( uint32_t word, int arity, int bits )
  {
    uint64_t inc = 0;
    for ( int c = 0; c < arity; ++c )
    {
      if ( ( word >> ( arity - 1 - c ) ) & 1 )
      {
        inc |= uint64_t( 1 ) << ( c * bits );
      }
    }
    return inc;
  }
  static void add( uint64_t& k, uint64_t inc ) { k += inc; }
  static void sub( uint64_t& k, uint64_t inc ) { k -= inc; }
};

using wide_key = std::array<uint64_t, 3>;

template<>
struct sum_key_traits<wide_key>
{
  // lanes never straddle words: lanes_per_word = 64 / bits
  static wide_key increment( uint32_t word, int arity, int bits )
  {
    wide_key inc{ 0, 0, 0 };
    const int lanes = 64 / bits;
    for ( int c = 0; c < arity; ++c )
    {
      if ( ( word >> ( arity - 1 - c ) ) & 1 )
      {
        inc[c / lanes] |= uint64_t( 1 ) << ( ( c % lanes ) * bits );
      }
    }
    return inc;
  }
  static void add( wide_key& k, const wide_key& inc )
  {
    for ( int i = 0; i < 3; ++i )
    {
      k[i] += inc[i];
    }
  }
  static void sub( wide_key& k, const wide_key& inc )
  {
    for ( int i = 0; i < 3; ++i )
    {
      k[i] -= inc[i];
    }
  }
};

/*!
  Enumerates size-l multisets over `pts` (non-decreasing indices, lexicographic
  order) with incremental packed sums.  `visit` returns true to stop early;
  the return value reports whether a visit stopped the walk.  Throws past the
  leaf budget.
*/
template<typename Key, typename Visit>
bool walk_multiset_sums( const std::vector<uint32_t>& pts, int arity, int ell, int bits,
                         uint64_t budget, Visit&& visit )
{
  const std::size_t n = pts.size();
  if ( n == 0 )
  {
    return false;
  }
  std::vector<Key> inc( n );
  for ( std::size_t i = 0; i < n; ++i )
  {
    inc[i] = sum_key_traits<Key>::increment( pts[i], arity, bits );
  }
  std::vector<std::size_t> idx( ell, 0 );
  Key sum{};
  for ( int q = 0; q < ell; ++q )
  {
    sum_key_traits<Key>::add( sum, inc[0] );
  }
  uint64_t visited = 0;
  while ( true )
  {
    if ( ++visited > budget )
    {
      throw resource_error( "multiset search: enumeration exceeds budget" );
    }
    if ( visit( sum, idx ) )
    {
      return true;
    }
    // odometer step: bump the last position that can still grow
    int p = ell - 1;
    while ( p >= 0 && idx[p] == n - 1 )
    {
      --p;
    }
    if ( p < 0 )
    {
      return false;
    }
    const std::size_t v = idx[p] + 1;
    for ( int q = p; q < ell; ++q )
    {
      sum_key_traits<Key>::sub( sum, inc[idx[q]] );
      idx[q] = v;
      sum_key_traits<Key>::add( sum, inc[v] );
    }
  }
}

template<typename Key>
std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
equal_sums_core( const std::vector<uint32_t>& hash_side, const std::vector<uint32_t>& scan_side,
                 int arity, int ell, int bits, uint64_t budget )
{
  std::vector<Key> keys;
  keys.reserve( static_cast<std::size_t>(
      std::min<uint64_t>( multiset_count( hash_side.size(), ell ), 1u << 20 ) ) );
  walk_multiset_sums<Key>( hash_side, arity, ell, bits, budget,
                           [&]( const Key& sum, const std::vector<std::size_t>& ) {
                             keys.push_back( sum );
                             return false;
                           } );
  std::sort( keys.begin(), keys.end() );
  keys.erase( std::unique( keys.begin(), keys.end() ), keys.end() );
  if ( keys.empty() )
  {
    return std::nullopt;
  }

  std::optional<Key> target;
  std::vector<std::size_t> scan_multiset;
  walk_multiset_sums<Key>( scan_side, arity, ell, bits, budget,
                           [&]( const Key& sum, const std::vector<std::size_t>& idx ) {
                             if ( std::binary_search( keys.begin(), keys.end(), sum ) )
                             {
                               target = sum;
                               scan_multiset = idx;
                               return true;
                             }
                             return false;
                           } );
  if ( !target )
  {
    return std::nullopt;
  }

  // recover the lexicographically least hash-side multiset with the matched sum
  std::vector<std::size_t> hash_multiset;
  walk_multiset_sums<Key>( hash_side, arity, ell, bits, budget,
                           [&]( const Key& sum, const std::vector<std::size_t>& idx ) {
                             if ( sum == *target )
                             {
                               hash_multiset = idx;
                               return true;
                             }
                             return false;
                           } );
  return std::make_pair( std::move( hash_multiset ), std::move( scan_multiset ) );
}

/*! Search over explicit preimage lists; `false_first` fixes which side is which. */
inline std::optional<asummability_witness>
equal_sums_search( const bool_fn& f, int ell, std::vector<uint32_t> f0, std::vector<uint32_t> f1,
                   uint64_t budget )
{
  if ( ell < 2 )
  {
    throw std::domain_error( "equal_sums_witness: need l >= 2" );
  }
  if ( f0.empty() || f1.empty() )
  {
    return std::nullopt;
  }
  std::sort( f0.begin(), f0.end() );
  std::sort( f1.begin(), f1.end() );
  const bool hash_false = f0.size() <= f1.size();
  const auto& hash_side = hash_false ? f0 : f1;
  const auto& scan_side = hash_false ? f1 : f0;
  if ( multiset_count( hash_side.size(), static_cast<unsigned>( ell ) ) > budget )
  {
    throw resource_error( "equal_sums_witness: hashed side exceeds budget" );
  }

  const int bits = std::bit_width( static_cast<unsigned>( ell ) );
  std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> match;
  if ( bits * f.arity <= 64 )
  {
    match = equal_sums_core<uint64_t>( hash_side, scan_side, f.arity, ell, bits, budget );
  }
  else
  {
    match = equal_sums_core<wide_key>( hash_side, scan_side, f.arity, ell, bits, budget );
  }
  if ( !match )
  {
    return std::nullopt;
  }

  asummability_witness w;
  w.ell = ell;
  auto to_points = [&]( const std::vector<uint32_t>& side, const std::vector<std::size_t>& idx ) {
    std::vector<point> pts;
    for ( auto i : idx )
    {
      pts.emplace_back( side[i], f.arity );
    }
    return pts;
  };
  w.false_points = to_points( f0, hash_false ? match->first : match->second );
  w.true_points = to_points( f1, hash_false ? match->second : match->first );
  if ( !validate_witness( f, w ) )
  {
    throw consistency_error( "equal_sums_witness: found witness failed re-validation" );
  }
  return w;
}

} // namespace detail

/*! \brief Preimage word lists of f (sorted). */
inline std::pair<std::vector<uint32_t>, std::vector<uint32_t>> preimages( const bool_fn& f )
{
  std::vector<uint32_t> f0, f1;
  for ( uint64_t idx = 0; idx < f.num_bits(); ++idx )
  {
    ( f.get_bit( idx ) ? f1 : f0 ).push_back( static_cast<uint32_t>( idx ) );
  }
  return { std::move( f0 ), std::move( f1 ) };
}

/*!
  \brief Size-l equal-sum multisets of false vs. true points, or nothing.

  Requires C(|hashed side| + l - 1, l) within the budget; the scan side
  is budgeted the same way and aborts with resource_error when exceeded.
*/
inline std::optional<asummability_witness> equal_sums_witness( const bool_fn& f, int ell,
                                                               uint64_t budget = 100000000 )
{
  auto [f0, f1] = preimages( f );
  return detail::equal_sums_search( f, ell, std::move( f0 ), std::move( f1 ), budget );
}

/*!
  \brief Same value as equal_sums_witness, computed on the tie sets of a
         weakly separating hyperplane.

  `weights`/`tau` must satisfy w.x <= tau on every false point and
  w.x >= tau on every true point; this is re-verified over all 2^n
  points before the reduction is trusted.
*/
inline std::optional<asummability_witness>
equal_sums_witness_separated( const bool_fn& f, int ell, const std::vector<big_int>& weights,
                              const big_int& tau, uint64_t budget = 100000000 )
{
  if ( static_cast<int>( weights.size() ) != f.arity )
  {
    throw std::invalid_argument( "equal_sums_witness_separated: weight count != arity" );
  }
  // dot products by dynamic programming over the lowest set bit
  std::vector<big_int> dot( static_cast<std::size_t>( f.num_bits() ) );
  for ( uint64_t idx = 1; idx < f.num_bits(); ++idx )
  {
    const int low = std::countr_zero( idx );
    const int var = f.arity - 1 - low;
    dot[idx] = dot[idx & ( idx - 1 )] + weights[var];
  }
  std::vector<uint32_t> tie0, tie1;
  for ( uint64_t idx = 0; idx < f.num_bits(); ++idx )
  {
    if ( f.get_bit( idx ) )
    {
      if ( dot[idx] < tau )
      {
        throw std::invalid_argument( "equal_sums_witness_separated: hyperplane misses a true point" );
      }
      if ( dot[idx] == tau )
      {
        tie1.push_back( static_cast<uint32_t>( idx ) );
      }
    }
    else
    {
      if ( dot[idx] > tau )
      {
        throw std::invalid_argument( "equal_sums_witness_separated: hyperplane misses a false point" );
      }
      if ( dot[idx] == tau )
      {
        tie0.push_back( static_cast<uint32_t>( idx ) );
      }
    }
  }
  // equal sums force every dot product to tau, so all witness points are ties
  return detail::equal_sums_search( f, ell, std::move( tie0 ), std::move( tie1 ), budget );
}

/*! \brief No equal-sum multisets of any size m in {2, ..., k}. */
inline bool is_k_asummable( const bool_fn& f, int k, uint64_t budget = 100000000 )
{
  if ( k < 2 )
  {
    throw std::domain_error( "is_k_asummable: need k >= 2" );
  }
  for ( int m = 2; m <= k; ++m )
  {
    if ( equal_sums_witness( f, m, budget ).has_value() )
    {
      return false;
    }
  }
  return true;
}

/*! \brief B_l preservation via the witness search only; no relation is materialized. */
inline bool preserves_b_fast( const bool_fn& f, int ell, uint64_t budget = 100000000 )
{
  return !equal_sums_witness( f, ell, budget ).has_value();
}

} // namespace thrlab
