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
  \file simplex.hpp
  \brief Exact rational phase-one simplex for equality-form feasibility

  Decides { x >= 0 : A x = b } with every entry an exact rational.
  Bland's rule on both the entering and leaving choices rules out
  cycling.  When the system is infeasible the multipliers y of the
  optimal phase-one basis satisfy y.A_j <= 0 for every column and
  y.b > 0, which is the certificate callers turn into separating
  hyperplanes.  No floating point is involved anywhere.
*/

#pragma once

#include "common.hpp"

#include <vector>

namespace thrlab
{

struct feasibility_result
{
  bool feasible = false;
  std::vector<rational> farkas; //!< y with y.A <= 0, y.b > 0; empty when feasible
};

/*!
  \brief Phase-one feasibility of A x = b, x >= 0.

  `columns` lists A columnwise; every column must have rhs.size() entries.
  Rows with negative rhs are flipped internally.
*/
inline feasibility_result phase_one_feasibility( const std::vector<std::vector<rational>>& columns,
                                                 std::vector<rational> rhs )
{
  const std::size_t m = rhs.size();
  const std::size_t ncols = columns.size();
  const std::size_t total = ncols + m; // artificials appended after the real columns

  // tableau rows carry [columns | artificials | rhs]
  std::vector<std::vector<rational>> t( m, std::vector<rational>( total + 1 ) );
  for ( std::size_t r = 0; r < m; ++r )
  {
    const bool flip = rhs[r] < 0;
    for ( std::size_t j = 0; j < ncols; ++j )
    {
      t[r][j] = flip ? -columns[j][r] : columns[j][r];
    }
    t[r][ncols + r] = 1;
    t[r][total] = flip ? -rhs[r] : rhs[r];
  }

  // reduced costs for the phase-one objective (minimize the artificial sum)
  std::vector<rational> d( total + 1 );
  for ( std::size_t j = 0; j < ncols; ++j )
  {
    for ( std::size_t r = 0; r < m; ++r )
    {
      d[j] -= t[r][j];
    }
  }
  for ( std::size_t r = 0; r < m; ++r )
  {
    d[total] -= t[r][total];
  }

  std::vector<std::size_t> basis( m );
  for ( std::size_t r = 0; r < m; ++r )
  {
    basis[r] = ncols + r;
  }

  while ( true )
  {
    // entering: least index with negative reduced cost (Bland)
    std::size_t enter = total;
    for ( std::size_t j = 0; j < total; ++j )
    {
      if ( d[j] < 0 )
      {
        enter = j;
        break;
      }
    }
    if ( enter == total )
    {
      break;
    }

    // leaving: tightest ratio, ties by least basis index (Bland)
    std::size_t leave = m;
    rational best;
    for ( std::size_t r = 0; r < m; ++r )
    {
      if ( t[r][enter] > 0 )
      {
        rational ratio = t[r][total] / t[r][enter];
        if ( leave == m || ratio < best ||
             ( ratio == best && basis[r] < basis[leave] ) )
        {
          best = ratio;
          leave = r;
        }
      }
    }
    if ( leave == m )
    {
      // the phase-one objective is bounded below by 0, so this cannot happen
      throw consistency_error( "phase_one_feasibility: unbounded phase-one objective" );
    }

    // pivot on (leave, enter)
    const rational pivot = t[leave][enter];
    for ( auto& v : t[leave] )
    {
      v /= pivot;
    }
    for ( std::size_t r = 0; r < m; ++r )
    {
      if ( r != leave && t[r][enter] != 0 )
      {
        const rational factor = t[r][enter];
        for ( std::size_t j = 0; j <= total; ++j )
        {
          t[r][j] -= factor * t[leave][j];
        }
      }
    }
    if ( d[enter] != 0 )
    {
      const rational factor = d[enter];
      for ( std::size_t j = 0; j <= total; ++j )
      {
        d[j] -= factor * t[leave][j];
      }
    }
    basis[leave] = enter;
  }

  feasibility_result res;
  res.feasible = d[total] == 0; // d[total] holds minus the optimal artificial sum
  if ( !res.feasible )
  {
    res.farkas.resize( m );
    for ( std::size_t r = 0; r < m; ++r )
    {
      // reduced cost of artificial r is 1 - y_r
      res.farkas[r] = 1 - d[ncols + r];
      if ( rhs[r] < 0 )
      {
        res.farkas[r] = -res.farkas[r];
      }
    }
  }
  return res;
}

} // namespace thrlab
