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
  \file threshold.hpp
  \brief Exact thresholdness with certificates, and the characterizability verdicts

  A certificate is a rational weight vector and threshold with
  w.x >= t exactly on the true points (ties count as true).  The
  decision runs exact phase-one simplex on the system asking the convex
  hulls of the two preimages to intersect: a feasible point refutes any
  strict separation, and the Farkas multipliers of an infeasible system
  are a strictly separating hyperplane.  Either way the answer is exact,
  and a returned certificate is re-verified against all 2^n points
  before anyone sees it.

  classify_intersection reports, for each catalogued clone C, whether
  the threshold functions inside C admit a finite constraint
  characterization; the verdicts come from a fixed containment table of
  the clone lattice.
*/

#pragma once

#include "bool_fn.hpp"
#include "clones.hpp"
#include "common.hpp"
#include "simplex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace thrlab
{

/*! \brief Exact rational weights and threshold realizing f (ties are true points). */
struct threshold_certificate
{
  std::vector<rational> weights;
  rational threshold;
};

/*! \brief Exact check of the certificate invariants at every point of B^n. */
inline bool verify_certificate( const bool_fn& f, const threshold_certificate& cert )
{
  if ( static_cast<int>( cert.weights.size() ) != f.arity )
  {
    throw std::invalid_argument( "verify_certificate: weight count != arity" );
  }
  for ( uint64_t idx = 0; idx < f.num_bits(); ++idx )
  {
    rational dot = 0;
    for ( int v = 0; v < f.arity; ++v )
    {
      if ( ( idx >> ( f.arity - 1 - v ) ) & 1 )
      {
        dot += cert.weights[v];
      }
    }
    if ( ( dot >= cert.threshold ) != ( f.get_bit( idx ) == 1 ) )
    {
      return false;
    }
  }
  return true;
}

/*!
  \brief A verified certificate when f is threshold, nothing otherwise.

  The point budget caps 2^arity; past it a resource_error is raised and the
  caller must shrink the instance.
*/
inline std::optional<threshold_certificate> is_threshold( const bool_fn& f,
                                                          uint64_t point_budget = 1u << 20 )
{
  if ( f.num_bits() > point_budget )
  {
    throw resource_error( "is_threshold: point count exceeds budget" );
  }
  const int n = f.arity;
  auto finish = [&]( threshold_certificate cert ) {
    if ( !verify_certificate( f, cert ) )
    {
      throw consistency_error( "is_threshold: extracted certificate fails verification" );
    }
    return cert;
  };

  std::vector<uint32_t> f0, f1;
  for ( uint64_t idx = 0; idx < f.num_bits(); ++idx )
  {
    ( f.get_bit( idx ) ? f1 : f0 ).push_back( static_cast<uint32_t>( idx ) );
  }
  if ( f0.empty() )
  {
    return finish( { std::vector<rational>( n, 0 ), rational( 0 ) } );
  }
  if ( f1.empty() )
  {
    return finish( { std::vector<rational>( n, 0 ), rational( 1 ) } );
  }

  // hull intersection system: sum l_a a - sum m_b b = 0, sum l_a = 1, sum m_b = 1
  std::vector<std::vector<rational>> columns;
  columns.reserve( f0.size() + f1.size() );
  for ( auto a : f0 )
  {
    std::vector<rational> col( n + 2 );
    for ( int v = 0; v < n; ++v )
    {
      col[v] = ( a >> ( n - 1 - v ) ) & 1;
    }
    col[n] = 1;
    columns.push_back( std::move( col ) );
  }
  for ( auto b : f1 )
  {
    std::vector<rational> col( n + 2 );
    for ( int v = 0; v < n; ++v )
    {
      col[v] = -rational( ( b >> ( n - 1 - v ) ) & 1 );
    }
    col[n + 1] = 1;
    columns.push_back( std::move( col ) );
  }
  std::vector<rational> rhs( n + 2 );
  rhs[n] = 1;
  rhs[n + 1] = 1;

  auto result = phase_one_feasibility( columns, rhs );
  if ( result.feasible )
  {
    return std::nullopt; // the hulls meet, no hyperplane can separate strictly
  }
  // y = (u, p, q): u.a <= -p on false points, u.b >= q on true points, -p < q
  threshold_certificate cert;
  cert.weights.assign( result.farkas.begin(), result.farkas.begin() + n );
  cert.threshold = result.farkas[n + 1];
  return finish( std::move( cert ) );
}

/*! \brief f is non-threshold but every identification minor is threshold. */
inline bool is_minimally_non_threshold( const bool_fn& f, uint64_t point_budget = 1u << 20 )
{
  if ( is_threshold( f, point_budget ).has_value() )
  {
    return false;
  }
  for ( int i = 0; i < f.arity; ++i )
  {
    for ( int j = i + 1; j < f.arity; ++j )
    {
      if ( !is_threshold( identification_minor( f, i, j ), point_budget ).has_value() )
      {
        return false;
      }
    }
  }
  return true;
}

enum class characterizability_reason
{
  subclone_of_l_v_lambda,
  contains_sm,
  contains_mc_uinf,
  contains_mc_winf
};

inline std::string reason_name( characterizability_reason r )
{
  switch ( r )
  {
  case characterizability_reason::subclone_of_l_v_lambda: return "subclone-of-L-V-Lambda";
  case characterizability_reason::contains_sm: return "contains-SM";
  case characterizability_reason::contains_mc_uinf: return "contains-McUinf";
  case characterizability_reason::contains_mc_winf: return "contains-McWinf";
  }
  throw std::logic_error( "reason_name: unreachable" );
}

struct classification_verdict
{
  clone_id clone;
  bool finitely_characterizable = false;
  characterizability_reason reason;
};

/*!
  \brief Whether the threshold functions inside the clone are finitely
         characterizable, with the witnessing lattice fact.

  Finitely characterizable exactly for the subclones of L, V and Lambda;
  every other catalogued clone contains SM, McU_inf or McW_inf (reported
  in that order of preference).  Rank-2 separation intersections all
  contain SM: two true points of a self-dual monotone function cannot
  have disjoint supports, and dually for false points.
*/
inline classification_verdict classify_intersection( const clone_id& c )
{
  classification_verdict v;
  v.clone = c;
  switch ( c.family )
  {
  case clone_family::l:
  case clone_family::l0:
  case clone_family::l1:
  case clone_family::ls:
  case clone_family::lc:
  case clone_family::lam:
  case clone_family::lam0:
  case clone_family::lam1:
  case clone_family::lamc:
  case clone_family::v:
  case clone_family::v0:
  case clone_family::v1:
  case clone_family::vc:
  case clone_family::omega1:
  case clone_family::istar:
  case clone_family::i:
  case clone_family::i0:
  case clone_family::i1:
  case clone_family::ic:
    v.finitely_characterizable = true;
    v.reason = characterizability_reason::subclone_of_l_v_lambda;
    return v;
  case clone_family::omega:
  case clone_family::t0:
  case clone_family::t1:
  case clone_family::tc:
  case clone_family::m:
  case clone_family::m0:
  case clone_family::m1:
  case clone_family::mc:
  case clone_family::s:
  case clone_family::sc:
  case clone_family::sm:
    v.finitely_characterizable = false;
    v.reason = characterizability_reason::contains_sm;
    return v;
  case clone_family::u:
  case clone_family::tcu:
  case clone_family::mu:
  case clone_family::mcu:
    v.finitely_characterizable = false;
    v.reason = c.rank == 2 ? characterizability_reason::contains_sm
                           : characterizability_reason::contains_mc_uinf;
    return v;
  case clone_family::w:
  case clone_family::tcw:
  case clone_family::mw:
  case clone_family::mcw:
    v.finitely_characterizable = false;
    v.reason = c.rank == 2 ? characterizability_reason::contains_sm
                           : characterizability_reason::contains_mc_winf;
    return v;
  }
  throw std::domain_error( "classify_intersection: unknown clone" );
}

/*! \brief f lies in the clone and is threshold. */
inline bool intersection_membership( const bool_fn& f, const clone_id& c,
                                     uint64_t point_budget = 1u << 20 )
{
  return is_member( f, c ) && is_threshold( f, point_budget ).has_value();
}

} // namespace thrlab
