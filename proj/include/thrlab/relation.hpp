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
  \file relation.hpp
  \brief Relational constraints, the preservation predicate and the B_l family

  An m-ary relation is a duplicate-free sorted list of m-bit words; the
  word encoding follows bool_fn.hpp (first coordinate at the MSB end).
  An (R, S) pair with equal arities is a relational constraint.  A
  function f preserves (R, S) when every choice of arity(f) tuples from
  R, applied entrywise through f, lands in S.

  Text formats: relation `<arity>;<word>,<word>,...` with decimal words,
  constraint `R|S`.

  Values are immutable; searches are deterministic (columns in
  lexicographic order, first violation reported).
*/

#pragma once

#include "bool_fn.hpp"
#include "common.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <string>
#include <vector>

namespace thrlab
{

inline constexpr int max_relation_arity = 16;

struct relation
{
  int arity = 0;
  std::vector<uint32_t> tuples; //!< sorted, duplicate-free, every word < 2^arity

  relation() = default;

  relation( int arity, std::vector<uint32_t> words ) : arity( arity ), tuples( std::move( words ) )
  {
    if ( arity < 1 || arity > max_relation_arity )
    {
      throw std::domain_error( "relation: arity out of range" );
    }
    std::sort( tuples.begin(), tuples.end() );
    tuples.erase( std::unique( tuples.begin(), tuples.end() ), tuples.end() );
    for ( auto w : tuples )
    {
      if ( w >= ( uint32_t( 1 ) << arity ) )
      {
        throw std::domain_error( "relation: tuple word out of range" );
      }
    }
  }

  bool contains( uint32_t w ) const
  {
    return std::binary_search( tuples.begin(), tuples.end(), w );
  }

  std::size_t size() const
  {
    return tuples.size();
  }

  friend bool operator==( const relation&, const relation& ) = default;
};

/*! \brief The full m-ary relation B^m. */
inline relation full_relation( int arity )
{
  std::vector<uint32_t> words( std::size_t( 1 ) << arity );
  for ( uint32_t w = 0; w < words.size(); ++w )
  {
    words[w] = w;
  }
  return relation( arity, std::move( words ) );
}

struct relational_constraint
{
  relation antecedent;
  relation consequent;

  relational_constraint() = default;

  relational_constraint( relation r, relation s )
      : antecedent( std::move( r ) ), consequent( std::move( s ) )
  {
    if ( antecedent.arity != consequent.arity )
    {
      throw std::invalid_argument( "relational_constraint: arities differ" );
    }
  }

  int arity() const
  {
    return antecedent.arity;
  }

  friend bool operator==( const relational_constraint&, const relational_constraint& ) = default;
};

/*! \brief A concrete refutation of preservation: columns from R whose image escapes S. */
struct violation_matrix
{
  std::vector<point> rows;       //!< m rows, each of the function's arity
  std::vector<uint32_t> columns; //!< the n chosen antecedent members (m-bit words)
  uint32_t output = 0;           //!< z, the m-bit image column; z is not in S
};

/*! \brief Re-checks a violation matrix from scratch against f and Q. */
inline bool validate_violation( const violation_matrix& v, const bool_fn& f,
                                const relational_constraint& q )
{
  const int m = q.arity();
  if ( static_cast<int>( v.rows.size() ) != m ||
       static_cast<int>( v.columns.size() ) != f.arity )
  {
    return false;
  }
  for ( auto c : v.columns )
  {
    if ( !q.antecedent.contains( c ) )
    {
      return false;
    }
  }
  if ( q.consequent.contains( v.output ) )
  {
    return false;
  }
  for ( int r = 0; r < m; ++r )
  {
    const point& row = v.rows[r];
    if ( row.arity != f.arity )
    {
      return false;
    }
    for ( int i = 0; i < f.arity; ++i )
    {
      if ( row.bit( i ) != static_cast<int>( ( v.columns[i] >> ( m - 1 - r ) ) & 1 ) )
      {
        return false;
      }
    }
    if ( eval( f, row ) != static_cast<int>( ( v.output >> ( m - 1 - r ) ) & 1 ) )
    {
      return false;
    }
  }
  return true;
}

namespace detail
{

/*! Depth-first search over column choices in lexicographic order; returns the
    first violation.  Budget counts visited leaves (complete column choices). */
inline std::optional<violation_matrix> find_violation( const bool_fn& f,
                                                       const relational_constraint& q,
                                                       uint64_t budget )
{
  const int n = f.arity;
  const int m = q.arity();
  const auto& r = q.antecedent.tuples;
  if ( saturating_pow( r.size(), static_cast<unsigned>( n ) ) > budget )
  {
    throw resource_error( "preserves: column space exceeds budget" );
  }
  if ( r.empty() )
  {
    return std::nullopt;
  }

  std::vector<uint32_t> rows( m, 0 );   // row words built MSB-first, one bit per level
  std::vector<std::size_t> choice( n, 0 );
  int depth = 0;
  while ( true )
  {
    if ( depth == n )
    {
      uint32_t z = 0;
      for ( int i = 0; i < m; ++i )
      {
        z = ( z << 1 ) | static_cast<unsigned>( f.get_bit( rows[i] ) );
      }
      if ( !q.consequent.contains( z ) )
      {
        violation_matrix v;
        v.columns.resize( n );
        for ( int i = 0; i < n; ++i )
        {
          v.columns[i] = r[choice[i]];
        }
        for ( int i = 0; i < m; ++i )
        {
          v.rows.emplace_back( rows[i], n );
        }
        v.output = z;
        return v;
      }
      // backtrack to the next leaf
      --depth;
      while ( depth >= 0 )
      {
        for ( int i = 0; i < m; ++i )
        {
          rows[i] >>= 1;
        }
        if ( ++choice[depth] < r.size() )
        {
          break;
        }
        choice[depth] = 0;
        --depth;
      }
      if ( depth < 0 )
      {
        return std::nullopt;
      }
    }
    // descend with the current choice at `depth`
    const uint32_t col = r[choice[depth]];
    for ( int i = 0; i < m; ++i )
    {
      rows[i] = ( rows[i] << 1 ) | ( ( col >> ( m - 1 - i ) ) & 1 );
    }
    ++depth;
  }
}

} // namespace detail

/*! \brief Exhaustive preservation check; throws resource_error past the column budget. */
inline bool preserves( const bool_fn& f, const relational_constraint& q,
                       uint64_t budget = 100000000 )
{
  return !detail::find_violation( f, q, budget ).has_value();
}

/*! \brief The lexicographically first violation, or nothing when f preserves Q. */
inline std::optional<violation_matrix> violation_witness( const bool_fn& f,
                                                          const relational_constraint& q,
                                                          uint64_t budget = 100000000 )
{
  return detail::find_violation( f, q, budget );
}

/*!
  \brief The 2l-ary constraint whose antecedent equates the Hamming weights of
         the two halves and whose consequent excludes the two half-constant tuples.
*/
inline relational_constraint make_b( int ell )
{
  if ( ell < 2 || 2 * ell > max_relation_arity )
  {
    throw std::domain_error( "make_b: need 2 <= l <= " + std::to_string( max_relation_arity / 2 ) );
  }
  const int m = 2 * ell;
  const uint32_t low = ( uint32_t( 1 ) << ell ) - 1;
  std::vector<uint32_t> r, s;
  for ( uint32_t w = 0; w < ( uint32_t( 1 ) << m ); ++w )
  {
    if ( std::popcount( w >> ell ) == std::popcount( w & low ) )
    {
      r.push_back( w );
    }
    if ( w != low && w != ( low << ell ) )
    {
      s.push_back( w );
    }
  }
  return relational_constraint( relation( m, std::move( r ) ), relation( m, std::move( s ) ) );
}

/*! \brief [B_2, ..., B_k]. */
inline std::vector<relational_constraint> make_a_family( int k )
{
  if ( k < 2 )
  {
    throw std::domain_error( "make_a_family: need k >= 2" );
  }
  std::vector<relational_constraint> qs;
  for ( int ell = 2; ell <= k; ++ell )
  {
    qs.push_back( make_b( ell ) );
  }
  return qs;
}

/*!
  \brief Simple minor of a constraint.

  `h` has one 0-based entry per coordinate of `q` and maps it into a pool of
  m + p variables; the first m are kept, the last p are existentially
  quantified away on both sides.
*/
inline relational_constraint constraint_simple_minor( const relational_constraint& q,
                                                      const std::vector<int>& h, int m, int p )
{
  const int n = q.arity();
  const int pool = m + p;
  if ( m < 1 || p < 0 || pool > max_relation_arity ||
       static_cast<int>( h.size() ) != n ||
       std::any_of( h.begin(), h.end(), [&]( int v ) { return v < 0 || v >= pool; } ) )
  {
    throw std::domain_error( "constraint_simple_minor: malformed index map" );
  }
  auto transform = [&]( const relation& rel ) {
    std::vector<uint32_t> out;
    for ( uint32_t x = 0; x < ( uint32_t( 1 ) << pool ); ++x )
    {
      uint32_t t = 0;
      for ( int i = 0; i < n; ++i )
      {
        t = ( t << 1 ) | ( ( x >> ( pool - 1 - h[i] ) ) & 1 );
      }
      if ( rel.contains( t ) )
      {
        out.push_back( x >> p ); // keep the first m coordinates
      }
    }
    return relation( m, std::move( out ) );
  };
  return relational_constraint( transform( q.antecedent ), transform( q.consequent ) );
}

inline relational_constraint restrict_antecedent( const relational_constraint& q,
                                                  const relation& smaller )
{
  if ( smaller.arity != q.arity() ||
       !std::includes( q.antecedent.tuples.begin(), q.antecedent.tuples.end(),
                       smaller.tuples.begin(), smaller.tuples.end() ) )
  {
    throw std::invalid_argument( "restrict_antecedent: not a subset of the antecedent" );
  }
  return relational_constraint( smaller, q.consequent );
}

inline relational_constraint extend_consequent( const relational_constraint& q,
                                                const relation& larger )
{
  if ( larger.arity != q.arity() ||
       !std::includes( larger.tuples.begin(), larger.tuples.end(),
                       q.consequent.tuples.begin(), q.consequent.tuples.end() ) )
  {
    throw std::invalid_argument( "extend_consequent: not a superset of the consequent" );
  }
  return relational_constraint( q.antecedent, larger );
}

inline relational_constraint intersect_consequents( const relational_constraint& a,
                                                    const relational_constraint& b )
{
  if ( !( a.antecedent == b.antecedent ) )
  {
    throw std::invalid_argument( "intersect_consequents: antecedents differ" );
  }
  std::vector<uint32_t> s;
  std::set_intersection( a.consequent.tuples.begin(), a.consequent.tuples.end(),
                         b.consequent.tuples.begin(), b.consequent.tuples.end(),
                         std::back_inserter( s ) );
  return relational_constraint( a.antecedent, relation( a.arity(), std::move( s ) ) );
}

inline std::string format_relation( const relation& r )
{
  std::string out = std::to_string( r.arity ) + ";";
  for ( std::size_t i = 0; i < r.tuples.size(); ++i )
  {
    if ( i )
    {
      out += ",";
    }
    out += std::to_string( r.tuples[i] );
  }
  return out;
}

inline relation parse_relation( const std::string& text )
{
  std::size_t semi = text.find( ';' );
  if ( semi == std::string::npos || semi == 0 )
  {
    throw parse_error( "expected '<arity>;'", 0 );
  }
  int arity = 0;
  for ( std::size_t i = 0; i < semi; ++i )
  {
    if ( text[i] < '0' || text[i] > '9' )
    {
      throw parse_error( "arity must be decimal", i );
    }
    arity = arity * 10 + ( text[i] - '0' );
  }
  std::vector<uint32_t> words;
  std::size_t pos = semi + 1;
  while ( pos < text.size() )
  {
    uint32_t w = 0;
    std::size_t start = pos;
    while ( pos < text.size() && text[pos] != ',' )
    {
      if ( text[pos] < '0' || text[pos] > '9' )
      {
        throw parse_error( "tuple word must be decimal", pos );
      }
      w = w * 10 + static_cast<uint32_t>( text[pos] - '0' );
      ++pos;
    }
    if ( pos == start )
    {
      throw parse_error( "empty tuple word", pos );
    }
    words.push_back( w );
    if ( pos < text.size() )
    {
      ++pos; // skip comma
    }
  }
  return relation( arity, std::move( words ) );
}

inline std::string format_constraint( const relational_constraint& q )
{
  return format_relation( q.antecedent ) + "|" + format_relation( q.consequent );
}

inline relational_constraint parse_constraint( const std::string& text )
{
  std::size_t bar = text.find( '|' );
  if ( bar == std::string::npos )
  {
    throw parse_error( "expected 'R|S'", text.size() );
  }
  return relational_constraint( parse_relation( text.substr( 0, bar ) ),
                                parse_relation( text.substr( bar + 1 ) ) );
}

} // namespace thrlab
