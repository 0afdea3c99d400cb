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
  \file bool_fn.hpp
  \brief Truth-table Boolean functions and the minor relation

  A function f of arity n is stored as a 2^n-bit table.  Variables are
  0-based in code: variable 0 is the most significant position of the
  table index, i.e. the table bit for the point (a_0, ..., a_{n-1}) sits
  at index sum a_i * 2^{n-1-i}.  Points of the same arity compare
  lexicographically, which coincides with comparing their index words.

  The textual wire format is `<arity>:<hex>` with uppercase hex, most
  significant nibble first, left-padded to ceil(2^n / 4) digits
  (`2:8` is binary conjunction, `3:E8` is the ternary majority).

  All values are immutable after construction; every operation is a pure
  function and safe to call concurrently.
*/

#pragma once

#include "common.hpp"

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace thrlab
{

/*! Largest supported arity; tables above 2^24 bits are never materialized. */
inline constexpr int max_fn_arity = 24;

/*! \brief One point of B^n, packed into a machine word (variable 0 at the MSB end). */
struct point
{
  uint32_t word = 0;
  int arity = 0;

  point() = default;
  point( uint32_t word, int arity ) : word( word ), arity( arity ) {}

  int bit( int var ) const
  {
    return static_cast<int>( ( word >> ( arity - 1 - var ) ) & 1u );
  }

  std::vector<int> bits() const
  {
    std::vector<int> b( arity );
    for ( int i = 0; i < arity; ++i )
    {
      b[i] = bit( i );
    }
    return b;
  }

  static point from_bits( const std::vector<int>& b )
  {
    point p( 0, static_cast<int>( b.size() ) );
    for ( std::size_t i = 0; i < b.size(); ++i )
    {
      p.word = ( p.word << 1 ) | ( b[i] ? 1u : 0u );
    }
    return p;
  }

  point complemented() const
  {
    uint32_t mask = ( arity == 32 ) ? ~0u : ( ( 1u << arity ) - 1 );
    return point( ~word & mask, arity );
  }

  int weight() const
  {
    return std::popcount( word );
  }

  friend auto operator<=>( const point&, const point& ) = default;
};

/*! \brief Total map sigma : [n] -> [m] used to form minors; 0-based images. */
struct minor_map
{
  int source_arity = 0; //!< n, the arity of the outer function
  int target_arity = 0; //!< m, the arity of the resulting minor
  std::vector<int> map; //!< size n, every entry in [0, m)

  bool valid() const
  {
    if ( static_cast<int>( map.size() ) != source_arity || target_arity < 1 )
    {
      return false;
    }
    return std::all_of( map.begin(), map.end(),
                        [&]( int v ) { return v >= 0 && v < target_arity; } );
  }
};

/*! \brief An n-ary Boolean function as a packed 2^n-bit truth table. */
struct bool_fn
{
  int arity = 0;
  std::vector<uint64_t> table; //!< bit idx holds f at the point encoded by idx

  bool_fn() = default;

  explicit bool_fn( int n ) : arity( n )
  {
    if ( n < 1 || n > max_fn_arity )
    {
      throw std::domain_error( "bool_fn: arity out of range" );
    }
    table.assign( num_blocks(), 0 );
  }

  uint64_t num_bits() const
  {
    return uint64_t( 1 ) << arity;
  }

  std::size_t num_blocks() const
  {
    return static_cast<std::size_t>( ( num_bits() + 63 ) >> 6 );
  }

  int get_bit( uint64_t idx ) const
  {
    return static_cast<int>( ( table[idx >> 6] >> ( idx & 63 ) ) & 1u );
  }

  void set_bit( uint64_t idx, int value )
  {
    if ( value )
    {
      table[idx >> 6] |= uint64_t( 1 ) << ( idx & 63 );
    }
    else
    {
      table[idx >> 6] &= ~( uint64_t( 1 ) << ( idx & 63 ) );
    }
  }

  friend bool operator==( const bool_fn& a, const bool_fn& b )
  {
    return a.arity == b.arity && a.table == b.table;
  }

  friend auto operator<=>( const bool_fn& a, const bool_fn& b )
  {
    if ( auto c = a.arity <=> b.arity; c != 0 )
    {
      return c;
    }
    // table words are little endian in the index, compare from the top
    for ( std::size_t i = a.table.size(); i-- > 0; )
    {
      if ( auto c = a.table[i] <=> b.table[i]; c != 0 )
      {
        return c;
      }
    }
    return std::strong_ordering::equal;
  }
};

namespace detail
{
inline void check_same_arity( int a, int b, const char* what )
{
  if ( a != b )
  {
    throw std::invalid_argument( std::string( what ) + ": arity mismatch" );
  }
}
} // namespace detail

/*! \brief Builds a function of arity n from a 2^n-entry bit vector indexed by point. */
inline bool_fn fn_from_bits( int arity, const std::vector<int>& bits )
{
  bool_fn f( arity );
  for ( uint64_t idx = 0; idx < f.num_bits(); ++idx )
  {
    f.set_bit( idx, bits[static_cast<std::size_t>( idx )] );
  }
  return f;
}

/*! \brief Builds a small function directly from its table value (bit idx of `value`). */
inline bool_fn fn_from_word( int arity, uint64_t value )
{
  if ( arity < 1 || arity > 6 )
  {
    throw std::domain_error( "fn_from_word: arity must be in [1,6]" );
  }
  bool_fn f( arity );
  uint64_t mask = ( arity == 6 ) ? ~uint64_t( 0 ) : ( ( uint64_t( 1 ) << ( 1 << arity ) ) - 1 );
  f.table[0] = value & mask;
  return f;
}

inline uint64_t point_index( const point& a )
{
  return a.word;
}

inline point point_from_index( uint64_t idx, int arity )
{
  return point( static_cast<uint32_t>( idx ), arity );
}

inline int eval( const bool_fn& f, const point& a )
{
  detail::check_same_arity( f.arity, a.arity, "eval" );
  return f.get_bit( point_index( a ) );
}

/*! \brief The n-ary i-th projection (0-based i). */
inline bool_fn projection( int arity, int var )
{
  bool_fn f( arity );
  for ( uint64_t idx = 0; idx < f.num_bits(); ++idx )
  {
    f.set_bit( idx, ( idx >> ( arity - 1 - var ) ) & 1 );
  }
  return f;
}

inline bool_fn constant_fn( int arity, int value )
{
  bool_fn f( arity );
  if ( value )
  {
    for ( auto& w : f.table )
    {
      w = ~uint64_t( 0 );
    }
    if ( f.arity < 6 )
    {
      f.table[0] = ( uint64_t( 1 ) << ( 1 << f.arity ) ) - 1;
    }
  }
  return f;
}

/*! \brief The minor g(a o sigma): result arity is sigma.target_arity. */
inline bool_fn minor( const bool_fn& g, const minor_map& sigma )
{
  if ( !sigma.valid() )
  {
    throw std::invalid_argument( "minor: malformed map" );
  }
  detail::check_same_arity( g.arity, sigma.source_arity, "minor" );
  const int m = sigma.target_arity;
  const int n = g.arity;
  bool_fn f( m );
  for ( uint64_t idx = 0; idx < f.num_bits(); ++idx )
  {
    uint64_t gidx = 0;
    for ( int i = 0; i < n; ++i )
    {
      gidx = ( gidx << 1 ) | ( ( idx >> ( m - 1 - sigma.map[i] ) ) & 1 );
    }
    f.set_bit( idx, g.get_bit( gidx ) );
  }
  return f;
}

/*! \brief delta_I for I = {i, j} with 0-based i < j, as a minor map [n] -> [n-1]. */
inline minor_map identification_map( int n, int i, int j )
{
  if ( n < 2 || i < 0 || j >= n || i >= j )
  {
    throw std::domain_error( "identification_map: bad index pair" );
  }
  minor_map d;
  d.source_arity = n;
  d.target_arity = n - 1;
  d.map.resize( n );
  for ( int t = 0; t < n; ++t )
  {
    d.map[t] = t < j ? t : ( t == j ? i : t - 1 );
  }
  return d;
}

/*! \brief The identification minor f_I, I = {i, j}, 0-based i < j. */
inline bool_fn identification_minor( const bool_fn& f, int i, int j )
{
  return minor( f, identification_map( f.arity, i, j ) );
}

/*! \brief Exhaustive test for f <= g; requires arity(f)^arity(g) <= budget maps. */
inline bool is_minor_of( const bool_fn& f, const bool_fn& g, uint64_t budget = 100000000 )
{
  const int n = g.arity;
  const int m = f.arity;
  if ( saturating_pow( static_cast<uint64_t>( m ), static_cast<unsigned>( n ) ) > budget )
  {
    throw resource_error( "is_minor_of: map space exceeds budget" );
  }
  minor_map sigma;
  sigma.source_arity = n;
  sigma.target_arity = m;
  sigma.map.assign( n, 0 );
  while ( true )
  {
    if ( minor( g, sigma ) == f )
    {
      return true;
    }
    int pos = n - 1;
    while ( pos >= 0 && sigma.map[pos] == m - 1 )
    {
      sigma.map[pos--] = 0;
    }
    if ( pos < 0 )
    {
      return false;
    }
    ++sigma.map[pos];
  }
}

inline bool_fn negate( const bool_fn& f )
{
  bool_fn g( f.arity );
  for ( std::size_t i = 0; i < f.table.size(); ++i )
  {
    g.table[i] = ~f.table[i];
  }
  if ( f.arity < 6 )
  {
    g.table[0] &= ( uint64_t( 1 ) << ( 1 << f.arity ) ) - 1;
  }
  return g;
}

/*! \brief f^u with f^u(a) = f(a xor u). */
inline bool_fn shift( const bool_fn& f, const point& u )
{
  detail::check_same_arity( f.arity, u.arity, "shift" );
  bool_fn g( f.arity );
  for ( uint64_t idx = 0; idx < f.num_bits(); ++idx )
  {
    g.set_bit( idx, f.get_bit( idx ^ u.word ) );
  }
  return g;
}

/*! \brief The dual: x -> complement of f(complement of x). */
inline bool_fn dual( const bool_fn& f )
{
  const uint64_t mask = f.num_bits() - 1;
  bool_fn g( f.arity );
  for ( uint64_t idx = 0; idx < f.num_bits(); ++idx )
  {
    g.set_bit( idx, 1 - f.get_bit( ~idx & mask ) );
  }
  return g;
}

inline bool is_self_dual( const bool_fn& f )
{
  const uint64_t mask = f.num_bits() - 1;
  for ( uint64_t idx = 0; idx < f.num_bits(); ++idx )
  {
    if ( f.get_bit( idx ) == f.get_bit( ~idx & mask ) )
    {
      return false;
    }
  }
  return true;
}

/*! \brief 0-based indices of the variables f depends on. */
inline std::vector<int> essential_variables( const bool_fn& f )
{
  std::vector<int> ess;
  for ( int v = 0; v < f.arity; ++v )
  {
    const uint64_t stride = uint64_t( 1 ) << ( f.arity - 1 - v );
    bool depends = false;
    for ( uint64_t idx = 0; idx < f.num_bits() && !depends; ++idx )
    {
      if ( ( idx & stride ) == 0 && f.get_bit( idx ) != f.get_bit( idx | stride ) )
      {
        depends = true;
      }
    }
    if ( depends )
    {
      ess.push_back( v );
    }
  }
  return ess;
}

/*! \brief f(g_1, ..., g_n) with all g_i of one arity m. */
inline bool_fn compose( const bool_fn& f, const std::vector<bool_fn>& gs )
{
  if ( static_cast<int>( gs.size() ) != f.arity )
  {
    throw std::invalid_argument( "compose: need one inner function per variable" );
  }
  const int m = gs.front().arity;
  for ( const auto& g : gs )
  {
    detail::check_same_arity( g.arity, m, "compose" );
  }
  bool_fn h( m );
  for ( uint64_t idx = 0; idx < h.num_bits(); ++idx )
  {
    uint64_t fidx = 0;
    for ( const auto& g : gs )
    {
      fidx = ( fidx << 1 ) | static_cast<unsigned>( g.get_bit( idx ) );
    }
    h.set_bit( idx, f.get_bit( fidx ) );
  }
  return h;
}

/*!
  \brief Canonical representative of the equivalence class of f.

  Deletes inessential arguments, then takes the lexicographically least
  table over all permutations of the remaining ones.  A function with no
  essential argument canonicalizes to a unary constant.  Only intended
  for small arities (the permutation search is factorial).
*/
inline bool_fn canonical_form( const bool_fn& f )
{
  auto ess = essential_variables( f );
  bool_fn core = [&]() {
    if ( ess.empty() )
    {
      return constant_fn( 1, f.get_bit( 0 ) );
    }
    minor_map drop;
    drop.source_arity = f.arity;
    drop.target_arity = static_cast<int>( ess.size() );
    drop.map.assign( f.arity, 0 );
    for ( std::size_t k = 0; k < ess.size(); ++k )
    {
      drop.map[ess[k]] = static_cast<int>( k );
    }
    return minor( f, drop );
  }();

  if ( core.arity > 8 )
  {
    throw resource_error( "canonical_form: permutation search limited to arity 8" );
  }
  std::vector<int> perm( core.arity );
  std::iota( perm.begin(), perm.end(), 0 );
  std::optional<bool_fn> best;
  do
  {
    minor_map mm;
    mm.source_arity = core.arity;
    mm.target_arity = core.arity;
    mm.map = perm;
    auto cand = minor( core, mm );
    if ( !best || cand < *best )
    {
      best = cand;
    }
  } while ( std::next_permutation( perm.begin(), perm.end() ) );
  return *best;
}

/*! \brief Equivalence up to permutation and inessential arguments. */
inline bool equivalent( const bool_fn& f, const bool_fn& g )
{
  return canonical_form( f ) == canonical_form( g );
}

inline bool is_monotone( const bool_fn& f )
{
  for ( int v = 0; v < f.arity; ++v )
  {
    const uint64_t stride = uint64_t( 1 ) << ( f.arity - 1 - v );
    for ( uint64_t idx = 0; idx < f.num_bits(); ++idx )
    {
      if ( ( idx & stride ) == 0 && f.get_bit( idx ) > f.get_bit( idx | stride ) )
      {
        return false;
      }
    }
  }
  return true;
}

/*! \brief Parses `<arity>:<hex>`; throws parse_error with the offending position. */
inline bool_fn parse_fn( const std::string& text )
{
  std::size_t colon = text.find( ':' );
  if ( colon == std::string::npos )
  {
    throw parse_error( "expected ':'", text.size() );
  }
  int arity = 0;
  if ( colon == 0 )
  {
    throw parse_error( "missing arity", 0 );
  }
  for ( std::size_t i = 0; i < colon; ++i )
  {
    if ( text[i] < '0' || text[i] > '9' )
    {
      throw parse_error( "arity must be decimal", i );
    }
    arity = arity * 10 + ( text[i] - '0' );
    if ( arity > max_fn_arity )
    {
      throw parse_error( "arity out of range", i );
    }
  }
  if ( arity < 1 )
  {
    throw parse_error( "arity out of range", 0 );
  }
  const uint64_t bits = uint64_t( 1 ) << arity;
  const std::size_t digits = static_cast<std::size_t>( ( bits + 3 ) / 4 );
  const std::string hex = text.substr( colon + 1 );
  if ( hex.size() != digits )
  {
    throw parse_error( "expected " + std::to_string( digits ) + " hex digits", colon + 1 );
  }
  bool_fn f( arity );
  for ( std::size_t d = 0; d < digits; ++d )
  {
    char c = hex[d];
    int v;
    if ( c >= '0' && c <= '9' )
    {
      v = c - '0';
    }
    else if ( c >= 'A' && c <= 'F' )
    {
      v = c - 'A' + 10;
    }
    else if ( c >= 'a' && c <= 'f' )
    {
      v = c - 'a' + 10;
    }
    else
    {
      throw parse_error( "invalid hex digit", colon + 1 + d );
    }
    // digit d covers bit indices [4*(digits-1-d), 4*(digits-1-d)+3]
    const uint64_t base = 4 * ( digits - 1 - d );
    for ( int b = 0; b < 4; ++b )
    {
      if ( base + b < bits && ( v >> b & 1 ) )
      {
        f.set_bit( base + b, 1 );
      }
    }
  }
  return f;
}

/*! \brief Formats as `<arity>:<hex>`, uppercase, most significant nibble first. */
inline std::string format_fn( const bool_fn& f )
{
  const uint64_t bits = f.num_bits();
  const std::size_t digits = static_cast<std::size_t>( ( bits + 3 ) / 4 );
  std::string hex( digits, '0' );
  static const char* alphabet = "0123456789ABCDEF";
  for ( std::size_t d = 0; d < digits; ++d )
  {
    const uint64_t base = 4 * ( digits - 1 - d );
    int v = 0;
    for ( int b = 3; b >= 0; --b )
    {
      v = ( v << 1 ) | ( base + b < bits ? f.get_bit( base + b ) : 0 );
    }
    hex[d] = alphabet[v];
  }
  return std::to_string( f.arity ) + ":" + hex;
}

} // namespace thrlab
