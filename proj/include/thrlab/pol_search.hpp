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
  \file pol_search.hpp
  \brief Desk-scale polymorphism enumeration and minimal forbidden minors
*/

#pragma once

#include "bool_fn.hpp"
#include "common.hpp"
#include "relation.hpp"

#include <functional>
#include <map>
#include <set>
#include <vector>

namespace thrlab
{

/*! \brief All functions of each arity up to max_arity preserving every constraint. */
inline std::map<int, std::vector<bool_fn>>
pol_enumerate( const std::vector<relational_constraint>& qs, int max_arity,
               uint64_t column_budget = 100000000 )
{
  if ( max_arity < 1 || max_arity > 4 )
  {
    throw resource_error( "pol_enumerate: arity window limited to 4" );
  }
  std::map<int, std::vector<bool_fn>> out;
  for ( int n = 1; n <= max_arity; ++n )
  {
    auto& fns = out[n];
    for ( uint64_t table = 0; table < ( uint64_t( 1 ) << ( 1 << n ) ); ++table )
    {
      bool_fn f = fn_from_word( n, table );
      bool ok = true;
      for ( const auto& q : qs )
      {
        if ( !preserves( f, q, column_budget ) )
        {
          ok = false;
          break;
        }
      }
      if ( ok )
      {
        fns.push_back( std::move( f ) );
      }
    }
  }
  return out;
}

namespace detail
{

/*! All minors of f with target arity at most f's own (identifications,
    permutations, deletions); padding beyond that only adds inessential
    arguments and is handled by the monotonicity check. */
template<typename Fn>
void for_each_minor( const bool_fn& f, int max_target, Fn&& fn )
{
  for ( int m = 1; m <= std::min( f.arity, max_target ); ++m )
  {
    minor_map sigma;
    sigma.source_arity = f.arity;
    sigma.target_arity = m;
    sigma.map.assign( f.arity, 0 );
    while ( true )
    {
      fn( minor( f, sigma ) );
      int pos = f.arity - 1;
      while ( pos >= 0 && sigma.map[pos] == m - 1 )
      {
        sigma.map[pos--] = 0;
      }
      if ( pos < 0 )
      {
        break;
      }
      ++sigma.map[pos];
    }
  }
}

} // namespace detail

/*!
  \brief Minimal non-members of the predicate, up to equivalence.

  The predicate must be closed under taking minors on the searched
  range; this is verified first (identifications, permutations,
  deletions, and one step of inessential padding) and a violation raises
  consistency_error.  Candidates are the non-members all of whose proper
  minors are members, deduplicated by canonical form.
*/
inline std::vector<bool_fn>
minimal_forbidden_minors( const std::function<bool( const bool_fn& )>& member, int max_arity,
                          uint64_t budget = 100000000 )
{
  if ( max_arity < 1 || max_arity > 4 )
  {
    throw resource_error( "minimal_forbidden_minors: arity window limited to 4" );
  }
  uint64_t work = 0;
  for ( int n = 1; n <= max_arity; ++n )
  {
    work += ( uint64_t( 1 ) << ( 1 << n ) ) * saturating_pow( n, n );
  }
  if ( work > budget )
  {
    throw resource_error( "minimal_forbidden_minors: search exceeds budget" );
  }

  // minor-monotonicity of the predicate over the window
  for ( int n = 1; n <= max_arity; ++n )
  {
    for ( uint64_t table = 0; table < ( uint64_t( 1 ) << ( 1 << n ) ); ++table )
    {
      bool_fn f = fn_from_word( n, table );
      if ( !member( f ) )
      {
        continue;
      }
      detail::for_each_minor( f, max_arity, [&]( const bool_fn& g ) {
        if ( !member( g ) )
        {
          throw consistency_error( "minimal_forbidden_minors: predicate not minor-monotone" );
        }
      } );
      if ( n < max_arity )
      {
        minor_map pad;
        pad.source_arity = n;
        pad.target_arity = n + 1;
        pad.map.resize( n );
        for ( int v = 0; v < n; ++v )
        {
          pad.map[v] = v;
        }
        if ( !member( minor( f, pad ) ) )
        {
          throw consistency_error( "minimal_forbidden_minors: predicate not padding-invariant" );
        }
      }
    }
  }

  std::set<bool_fn> canon_seen;
  std::vector<bool_fn> result;
  for ( int n = 1; n <= max_arity; ++n )
  {
    for ( uint64_t table = 0; table < ( uint64_t( 1 ) << ( 1 << n ) ); ++table )
    {
      bool_fn f = fn_from_word( n, table );
      if ( member( f ) )
      {
        continue;
      }
      bool minimal = true;
      detail::for_each_minor( f, f.arity, [&]( const bool_fn& g ) {
        if ( minimal && !member( g ) && !equivalent( g, f ) )
        {
          minimal = false;
        }
      } );
      if ( minimal )
      {
        auto canon = canonical_form( f );
        if ( canon_seen.insert( canon ).second )
        {
          result.push_back( canon );
        }
      }
    }
  }
  return result;
}

} // namespace thrlab
