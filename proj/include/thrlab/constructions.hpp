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
  \file constructions.hpp
  \brief Clone-steering constructions that leave B_l preservation untouched

  Each construction G maps an arbitrary function into a target clone
  while preserving, for every l >= 2, whether the function lies in
  Pol B_l:

    g_s(f)     arity n+1, lands in S (self-dual)
    g_mc(f)    arity 2n,  lands in Mc
    g_uinf(f)  arity n+1, lands in U_inf
    g_sm       = g_mc . g_s            lands in SM
    g_mc_uinf  = g_uinf . g_mc         lands in McU_inf
    g_mc_winf  = dual . g_uinf . g_mc  lands in McW_inf

  Equal-sum witnesses travel along the constructions in both directions:
  `transport_witness_up` pushes a witness for f to one for G(f) (appending
  a constant-1 coordinate, pairing each point with its complement, or
  flipping through the dual); `transport_witness_down_gs` recovers a
  violation of f from one of g_s(f) by dropping the last column and
  negating/swapping the row blocks selected by that column.  Every
  transported object is re-validated before being returned.
*/

#pragma once

#include "asummability.hpp"
#include "bool_fn.hpp"
#include "common.hpp"
#include "relation.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace thrlab
{

enum class construction_tag
{
  gs,
  gmc,
  gsm,
  guinf,
  gmcuinf,
  gmcwinf
};

inline std::string construction_name( construction_tag t )
{
  switch ( t )
  {
  case construction_tag::gs: return "gs";
  case construction_tag::gmc: return "gmc";
  case construction_tag::gsm: return "gsm";
  case construction_tag::guinf: return "guinf";
  case construction_tag::gmcuinf: return "gmcuinf";
  case construction_tag::gmcwinf: return "gmcwinf";
  }
  throw std::logic_error( "construction_name: unreachable" );
}

inline std::optional<construction_tag> try_parse_construction( const std::string& name )
{
  for ( auto t : { construction_tag::gs, construction_tag::gmc, construction_tag::gsm,
                   construction_tag::guinf, construction_tag::gmcuinf, construction_tag::gmcwinf } )
  {
    if ( construction_name( t ) == name )
    {
      return t;
    }
  }
  return std::nullopt;
}

namespace detail
{
inline void check_result_arity( int arity, const char* what )
{
  if ( arity > max_fn_arity )
  {
    throw resource_error( std::string( what ) + ": result table exceeds the 2^" +
                          std::to_string( max_fn_arity ) + "-bit ceiling" );
  }
}
} // namespace detail

/*! \brief (x_{n+1} and f(x)) or (not x_{n+1} and dual(f)(x)); self-dual for every f. */
inline bool_fn g_s( const bool_fn& f )
{
  detail::check_result_arity( f.arity + 1, "g_s" );
  const bool_fn fd = dual( f );
  bool_fn g( f.arity + 1 );
  for ( uint64_t idx = 0; idx < g.num_bits(); ++idx )
  {
    const uint64_t x = idx >> 1;
    g.set_bit( idx, ( idx & 1 ) ? f.get_bit( x ) : fd.get_bit( x ) );
  }
  return g;
}

/*!
  \brief The weight-split doubling construction; lands in Mc.

  On x of length 2n: weight below n gives 0, above n gives 1; the
  complementary pairs (a, complement of a) evaluate f; otherwise the
  first coordinate i with x_i = x_{n+i} decides.
*/
inline bool_fn g_mc( const bool_fn& f )
{
  detail::check_result_arity( 2 * f.arity, "g_mc" );
  const int n = f.arity;
  const uint64_t nmask = ( uint64_t( 1 ) << n ) - 1;
  bool_fn g( 2 * n );
  for ( uint64_t idx = 0; idx < g.num_bits(); ++idx )
  {
    const int weight = std::popcount( idx );
    int value;
    if ( weight < n )
    {
      value = 0;
    }
    else if ( weight > n )
    {
      value = 1;
    }
    else
    {
      const uint64_t hi = idx >> n;
      const uint64_t lo = idx & nmask;
      const uint64_t agree = ~( hi ^ lo ) & nmask; // coordinates with x_i = x_{n+i}
      if ( agree == 0 )
      {
        value = f.get_bit( hi );
      }
      else
      {
        const int i = std::countl_zero( agree << ( 64 - n ) ); // smallest agreeing coordinate
        value = static_cast<int>( ( hi >> ( n - 1 - i ) ) & 1 );
      }
    }
    g.set_bit( idx, value );
  }
  return g;
}

/*! \brief x_{n+1} and f(x); lands in U_inf. */
inline bool_fn g_uinf( const bool_fn& f )
{
  detail::check_result_arity( f.arity + 1, "g_uinf" );
  bool_fn g( f.arity + 1 );
  for ( uint64_t idx = 0; idx < g.num_bits(); ++idx )
  {
    g.set_bit( idx, ( idx & 1 ) ? f.get_bit( idx >> 1 ) : 0 );
  }
  return g;
}

inline bool_fn g_sm( const bool_fn& f )
{
  return g_mc( g_s( f ) );
}

inline bool_fn g_mc_uinf( const bool_fn& f )
{
  return g_uinf( g_mc( f ) );
}

inline bool_fn g_mc_winf( const bool_fn& f )
{
  return dual( g_uinf( g_mc( f ) ) );
}

inline bool_fn apply_construction( construction_tag t, const bool_fn& f )
{
  switch ( t )
  {
  case construction_tag::gs: return g_s( f );
  case construction_tag::gmc: return g_mc( f );
  case construction_tag::gsm: return g_sm( f );
  case construction_tag::guinf: return g_uinf( f );
  case construction_tag::gmcuinf: return g_mc_uinf( f );
  case construction_tag::gmcwinf: return g_mc_winf( f );
  }
  throw std::logic_error( "apply_construction: unreachable" );
}

namespace detail
{

enum class transport_step
{
  append_one,      // g_s and g_uinf
  pair_complement, // g_mc
  dual_flip        // final step of g_mc_winf
};

inline std::vector<transport_step> transport_chain( construction_tag t )
{
  switch ( t )
  {
  case construction_tag::gs:
  case construction_tag::guinf: return { transport_step::append_one };
  case construction_tag::gmc: return { transport_step::pair_complement };
  case construction_tag::gsm: return { transport_step::append_one, transport_step::pair_complement };
  case construction_tag::gmcuinf:
    return { transport_step::pair_complement, transport_step::append_one };
  case construction_tag::gmcwinf:
    return { transport_step::pair_complement, transport_step::append_one,
             transport_step::dual_flip };
  }
  throw std::logic_error( "transport_chain: unreachable" );
}

inline bool_fn step_function( transport_step s, const bool_fn& f, construction_tag t )
{
  switch ( s )
  {
  case transport_step::append_one:
    return ( t == construction_tag::gs || t == construction_tag::gsm ) ? g_s( f ) : g_uinf( f );
  case transport_step::pair_complement: return g_mc( f );
  case transport_step::dual_flip: return dual( f );
  }
  throw std::logic_error( "step_function: unreachable" );
}

inline asummability_witness step_witness( transport_step s, const asummability_witness& w )
{
  asummability_witness out;
  out.ell = w.ell;
  auto map_points = [&]( const std::vector<point>& pts ) {
    std::vector<point> mapped;
    for ( const auto& p : pts )
    {
      switch ( s )
      {
      case transport_step::append_one:
        mapped.emplace_back( ( p.word << 1 ) | 1u, p.arity + 1 );
        break;
      case transport_step::pair_complement:
        mapped.emplace_back( ( p.word << p.arity ) | p.complemented().word, 2 * p.arity );
        break;
      case transport_step::dual_flip:
        mapped.push_back( p.complemented() );
        break;
      }
    }
    std::sort( mapped.begin(), mapped.end() );
    return mapped;
  };
  if ( s == transport_step::dual_flip )
  {
    out.false_points = map_points( w.true_points );
    out.true_points = map_points( w.false_points );
  }
  else
  {
    out.false_points = map_points( w.false_points );
    out.true_points = map_points( w.true_points );
  }
  return out;
}

} // namespace detail

/*!
  \brief Pushes a valid witness for f to one for the constructed function.

  The input is validated against f and the output against every
  intermediate stage; a bad input raises consistency_error.
*/
inline asummability_witness transport_witness_up( const asummability_witness& w, const bool_fn& f,
                                                  construction_tag tag )
{
  if ( !validate_witness( f, w ) )
  {
    throw consistency_error( "transport_witness_up: input witness fails validation" );
  }
  bool_fn current = f;
  asummability_witness current_w = w;
  for ( auto step : detail::transport_chain( tag ) )
  {
    current = detail::step_function( step, current, tag );
    current_w = detail::step_witness( step, current_w );
    if ( !validate_witness( current, current_w ) )
    {
      throw consistency_error( "transport_witness_up: transported witness fails validation" );
    }
  }
  return current_w;
}

/*!
  \brief Recovers a B_l violation of f from one of g_s(f).

  The matrix is first normalized (output column forced to 0...01...1 by
  swapping the halves, rows of each half sorted so the last column reads
  0^a 1^b 0^a 1^b); the result drops the last column, negates rows
  1..a of each half and swaps those two blocks.
*/
inline violation_matrix transport_witness_down_gs( const violation_matrix& m, const bool_fn& f,
                                                   int ell )
{
  const bool_fn g = g_s( f );
  const auto b = make_b( ell );
  if ( !validate_violation( m, g, b ) )
  {
    throw consistency_error( "transport_witness_down_gs: input fails validation" );
  }

  std::vector<point> rows = m.rows;
  uint32_t z = m.output;
  const uint32_t low = ( uint32_t( 1 ) << ell ) - 1;
  if ( z == ( low << ell ) )
  {
    std::rotate( rows.begin(), rows.begin() + ell, rows.end() );
    z = low;
  }
  // within each half, rows with last coordinate 0 come first
  auto by_last = []( const point& a, const point& bpt ) {
    return std::pair( a.word & 1, a.word ) < std::pair( bpt.word & 1, bpt.word );
  };
  std::sort( rows.begin(), rows.begin() + ell, by_last );
  std::sort( rows.begin() + ell, rows.end(), by_last );
  int alpha = 0;
  while ( alpha < ell && ( rows[alpha].word & 1 ) == 0 )
  {
    ++alpha;
  }

  violation_matrix out;
  const int n = f.arity;
  auto strip = [&]( const point& p ) { return point( p.word >> 1, n ); };
  out.rows.resize( 2 * ell );
  for ( int i = 0; i < alpha; ++i )
  {
    out.rows[i] = strip( rows[i + ell] ).complemented();
    out.rows[i + ell] = strip( rows[i] ).complemented();
  }
  for ( int i = alpha; i < ell; ++i )
  {
    out.rows[i] = strip( rows[i] );
    out.rows[i + ell] = strip( rows[i + ell] );
  }
  out.columns.resize( n );
  for ( int j = 0; j < n; ++j )
  {
    uint32_t col = 0;
    for ( int r = 0; r < 2 * ell; ++r )
    {
      col = ( col << 1 ) | static_cast<uint32_t>( out.rows[r].bit( j ) );
    }
    out.columns[j] = col;
  }
  uint32_t zz = 0;
  for ( int r = 0; r < 2 * ell; ++r )
  {
    zz = ( zz << 1 ) | static_cast<uint32_t>( eval( f, out.rows[r] ) );
  }
  out.output = zz;
  if ( !validate_violation( out, f, b ) )
  {
    throw consistency_error( "transport_witness_down_gs: constructed matrix fails validation" );
  }
  return out;
}

/*! \brief Packs an equal-sum witness as a violation matrix (false rows first). */
inline violation_matrix witness_to_violation( const asummability_witness& w, const bool_fn& f )
{
  violation_matrix v;
  v.rows = w.false_points;
  v.rows.insert( v.rows.end(), w.true_points.begin(), w.true_points.end() );
  const int m = 2 * w.ell;
  v.columns.resize( f.arity );
  for ( int j = 0; j < f.arity; ++j )
  {
    uint32_t col = 0;
    for ( int r = 0; r < m; ++r )
    {
      col = ( col << 1 ) | static_cast<uint32_t>( v.rows[r].bit( j ) );
    }
    v.columns[j] = col;
  }
  v.output = ( uint32_t( 1 ) << w.ell ) - 1;
  return v;
}

} // namespace thrlab
