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
  \file common.hpp
  \brief Error types, exact-number aliases, and small shared helpers
*/

#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace thrlab
{

using big_int = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

/*! \brief A search or table materialization would exceed its explicit budget. */
class resource_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief Two routes that must agree (direct definition vs. preservation,
    a witness vs. its re-validation) disagree. Always a bug or a bad input. */
class consistency_error : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

/*! \brief Malformed textual input; carries the offending position. */
class parse_error : public std::runtime_error
{
public:
  parse_error( const std::string& msg, std::size_t position )
      : std::runtime_error( msg + " (at position " + std::to_string( position ) + ")" ),
        position( position )
  {
  }

  std::size_t position;
};

/*! \brief base^exp, saturating at 2^64-1 instead of overflowing. */
inline uint64_t saturating_pow( uint64_t base, unsigned exp )
{
  uint64_t r = 1;
  for ( unsigned i = 0; i < exp; ++i )
  {
    if ( base != 0 && r > std::numeric_limits<uint64_t>::max() / base )
    {
      return std::numeric_limits<uint64_t>::max();
    }
    r *= base;
  }
  return r;
}

/*! \brief C(n+k-1, k), the number of size-k multisets from n items, saturating. */
inline uint64_t multiset_count( uint64_t n, unsigned k )
{
  // product form of the binomial; divide early to stay integral
  big_int r = 1;
  for ( unsigned i = 1; i <= k; ++i )
  {
    r = r * big_int( n + i - 1 ) / i;
  }
  if ( r > std::numeric_limits<uint64_t>::max() )
  {
    return std::numeric_limits<uint64_t>::max();
  }
  return static_cast<uint64_t>( r );
}

} // namespace thrlab
