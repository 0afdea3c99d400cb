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
  \file clones.hpp
  \brief The catalogue of Boolean clones: direct membership and characterizing relations

  Every clone of Boolean functions is covered: the named ones and the
  four rank-parameterized separation families (plain, Tc-, M- and
  Mc-intersected), each for ranks 2, 3, ... and infinity.  Membership is
  decided from the direct definitions (table scans); each clone also
  carries a characterizing set of (R, R) constraints, and
  `membership_crosscheck` insists the two routes agree.

  A function is 1-separating of rank m when every subset of its true
  points of size at most m has a coordinate fixed at 1 (dually for
  0-separating); rank infinity asks this of the whole preimage.  Under
  the entrywise preservation convention used throughout, the rank-m
  1-separating functions are exactly the polymorphisms of
  B^m \ {(1,...,1)} and the 0-separating ones those of B^m \ {(0,...,0)}.
*/

#pragma once

#include "bool_fn.hpp"
#include "common.hpp"
#include "relation.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <string>
#include <vector>

namespace thrlab
{

inline constexpr int rank_infinity = -1;

enum class clone_family
{
  omega,
  t0,
  t1,
  tc,
  m,
  m0,
  m1,
  mc,
  s,
  sc,
  sm,
  l,
  l0,
  l1,
  ls,
  lc,
  u,   //!< rank-parameterized
  w,   //!< rank-parameterized
  tcu, //!< rank-parameterized
  tcw, //!< rank-parameterized
  mu,  //!< rank-parameterized
  mw,  //!< rank-parameterized
  mcu, //!< rank-parameterized
  mcw, //!< rank-parameterized
  lam,
  lam0,
  lam1,
  lamc,
  v,
  v0,
  v1,
  vc,
  omega1,
  istar,
  i,
  i0,
  i1,
  ic
};

struct clone_id
{
  clone_family family;
  int rank = 0; //!< 2, 3, ... or rank_infinity; only for the u/w families

  friend bool operator==( const clone_id&, const clone_id& ) = default;
};

inline bool is_separation_family( clone_family f )
{
  return f == clone_family::u || f == clone_family::w || f == clone_family::tcu ||
         f == clone_family::tcw || f == clone_family::mu || f == clone_family::mw ||
         f == clone_family::mcu || f == clone_family::mcw;
}

inline std::string clone_name( const clone_id& c )
{
  auto ranked = [&]( const std::string& prefix ) {
    return prefix + ( c.rank == rank_infinity ? "inf" : std::to_string( c.rank ) );
  };
  switch ( c.family )
  {
  case clone_family::omega: return "Omega";
  case clone_family::t0: return "T0";
  case clone_family::t1: return "T1";
  case clone_family::tc: return "Tc";
  case clone_family::m: return "M";
  case clone_family::m0: return "M0";
  case clone_family::m1: return "M1";
  case clone_family::mc: return "Mc";
  case clone_family::s: return "S";
  case clone_family::sc: return "Sc";
  case clone_family::sm: return "SM";
  case clone_family::l: return "L";
  case clone_family::l0: return "L0";
  case clone_family::l1: return "L1";
  case clone_family::ls: return "LS";
  case clone_family::lc: return "Lc";
  case clone_family::u: return ranked( "U" );
  case clone_family::w: return ranked( "W" );
  case clone_family::tcu: return ranked( "TcU" );
  case clone_family::tcw: return ranked( "TcW" );
  case clone_family::mu: return ranked( "MU" );
  case clone_family::mw: return ranked( "MW" );
  case clone_family::mcu: return ranked( "McU" );
  case clone_family::mcw: return ranked( "McW" );
  case clone_family::lam: return "Lam";
  case clone_family::lam0: return "Lam0";
  case clone_family::lam1: return "Lam1";
  case clone_family::lamc: return "Lamc";
  case clone_family::v: return "V";
  case clone_family::v0: return "V0";
  case clone_family::v1: return "V1";
  case clone_family::vc: return "Vc";
  case clone_family::omega1: return "Omega1";
  case clone_family::istar: return "Istar";
  case clone_family::i: return "I";
  case clone_family::i0: return "I0";
  case clone_family::i1: return "I1";
  case clone_family::ic: return "Ic";
  }
  throw std::logic_error( "clone_name: unreachable" );
}

inline std::optional<clone_id> try_parse_clone( const std::string& name )
{
  static const std::vector<std::pair<std::string, clone_family>> plain = {
      { "Omega1", clone_family::omega1 }, { "Omega", clone_family::omega },
      { "T0", clone_family::t0 },         { "T1", clone_family::t1 },
      { "Tc", clone_family::tc },         { "M0", clone_family::m0 },
      { "M1", clone_family::m1 },         { "Mc", clone_family::mc },
      { "M", clone_family::m },           { "Sc", clone_family::sc },
      { "SM", clone_family::sm },         { "S", clone_family::s },
      { "L0", clone_family::l0 },         { "L1", clone_family::l1 },
      { "LS", clone_family::ls },         { "Lc", clone_family::lc },
      { "L", clone_family::l },           { "Lam0", clone_family::lam0 },
      { "Lam1", clone_family::lam1 },     { "Lamc", clone_family::lamc },
      { "Lam", clone_family::lam },       { "V0", clone_family::v0 },
      { "V1", clone_family::v1 },         { "Vc", clone_family::vc },
      { "V", clone_family::v },           { "Istar", clone_family::istar },
      { "Ic", clone_family::ic },         { "I0", clone_family::i0 },
      { "I1", clone_family::i1 },         { "I", clone_family::i } };
  for ( const auto& [n, fam] : plain )
  {
    if ( name == n )
    {
      return clone_id{ fam, 0 };
    }
  }
  static const std::vector<std::pair<std::string, clone_family>> ranked = {
      { "TcU", clone_family::tcu }, { "TcW", clone_family::tcw },
      { "McU", clone_family::mcu }, { "McW", clone_family::mcw },
      { "MU", clone_family::mu },   { "MW", clone_family::mw },
      { "U", clone_family::u },     { "W", clone_family::w } };
  for ( const auto& [prefix, fam] : ranked )
  {
    if ( name.size() > prefix.size() && name.compare( 0, prefix.size(), prefix ) == 0 )
    {
      const std::string tail = name.substr( prefix.size() );
      if ( tail == "inf" )
      {
        return clone_id{ fam, rank_infinity };
      }
      int rank = 0;
      for ( char ch : tail )
      {
        if ( ch < '0' || ch > '9' )
        {
          return std::nullopt;
        }
        rank = rank * 10 + ( ch - '0' );
      }
      if ( rank >= 2 )
      {
        return clone_id{ fam, rank };
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

inline clone_id parse_clone( const std::string& name )
{
  if ( auto c = try_parse_clone( name ) )
  {
    return *c;
  }
  throw std::domain_error( "unknown clone id: " + name );
}

/*! \brief The full catalogue; separation families materialized at the given ranks. */
inline std::vector<clone_id> clone_catalogue( const std::vector<int>& ranks = { 2, 3, 4, 5,
                                                                                rank_infinity } )
{
  std::vector<clone_id> cat;
  for ( auto fam : { clone_family::omega, clone_family::t0, clone_family::t1, clone_family::tc,
                     clone_family::m, clone_family::m0, clone_family::m1, clone_family::mc,
                     clone_family::s, clone_family::sc, clone_family::sm, clone_family::l,
                     clone_family::l0, clone_family::l1, clone_family::ls, clone_family::lc } )
  {
    cat.push_back( { fam, 0 } );
  }
  for ( auto fam : { clone_family::u, clone_family::w, clone_family::tcu, clone_family::tcw,
                     clone_family::mu, clone_family::mw, clone_family::mcu, clone_family::mcw } )
  {
    for ( int r : ranks )
    {
      cat.push_back( { fam, r } );
    }
  }
  for ( auto fam : { clone_family::lam, clone_family::lam0, clone_family::lam1,
                     clone_family::lamc, clone_family::v, clone_family::v0, clone_family::v1,
                     clone_family::vc, clone_family::omega1, clone_family::istar, clone_family::i,
                     clone_family::i0, clone_family::i1, clone_family::ic } )
  {
    cat.push_back( { fam, 0 } );
  }
  return cat;
}

namespace detail
{

inline bool preserves_zero( const bool_fn& f )
{
  return f.get_bit( 0 ) == 0;
}

inline bool preserves_one( const bool_fn& f )
{
  return f.get_bit( f.num_bits() - 1 ) == 1;
}

inline bool is_linear( const bool_fn& f )
{
  // parity-polynomial coefficients by the xor butterfly; degree <= 1 required
  std::vector<uint8_t> anf( static_cast<std::size_t>( f.num_bits() ) );
  for ( uint64_t idx = 0; idx < f.num_bits(); ++idx )
  {
    anf[idx] = static_cast<uint8_t>( f.get_bit( idx ) );
  }
  for ( uint64_t s = 1; s < f.num_bits(); s <<= 1 )
  {
    for ( uint64_t idx = 0; idx < f.num_bits(); ++idx )
    {
      if ( idx & s )
      {
        anf[idx] ^= anf[idx ^ s];
      }
    }
  }
  for ( uint64_t idx = 0; idx < f.num_bits(); ++idx )
  {
    if ( anf[idx] && std::popcount( idx ) > 1 )
    {
      return false;
    }
  }
  return true;
}

inline bool is_constant( const bool_fn& f )
{
  return f == constant_fn( f.arity, f.get_bit( 0 ) );
}

/*! f is a conjunction of a nonempty variable subset, or a constant. */
inline bool is_conjunction_or_constant( const bool_fn& f )
{
  if ( is_constant( f ) )
  {
    return true;
  }
  uint64_t common = f.num_bits() - 1;
  for ( uint64_t idx = 0; idx < f.num_bits(); ++idx )
  {
    if ( f.get_bit( idx ) )
    {
      common &= idx;
    }
  }
  for ( uint64_t idx = 0; idx < f.num_bits(); ++idx )
  {
    if ( f.get_bit( idx ) != ( ( idx & common ) == common ? 1 : 0 ) )
    {
      return false;
    }
  }
  return true;
}

inline bool is_projection_fn( const bool_fn& f )
{
  for ( int v = 0; v < f.arity; ++v )
  {
    if ( f == projection( f.arity, v ) )
    {
      return true;
    }
  }
  return false;
}

inline bool is_negated_projection( const bool_fn& f )
{
  for ( int v = 0; v < f.arity; ++v )
  {
    if ( f == negate( projection( f.arity, v ) ) )
    {
      return true;
    }
  }
  return false;
}

/*! Every subset of the a-preimage of size at most `rank` shares a coordinate
    fixed at a; rank_infinity means the whole preimage does. */
inline bool is_separating( const bool_fn& f, int a, int rank, uint64_t budget = 20000000 )
{
  std::vector<uint32_t> pre;
  for ( uint64_t idx = 0; idx < f.num_bits(); ++idx )
  {
    if ( f.get_bit( idx ) == a )
    {
      pre.push_back( static_cast<uint32_t>( idx ) );
    }
  }
  const uint32_t mask = static_cast<uint32_t>( f.num_bits() - 1 );
  auto subset_ok = [&]( uint32_t acc ) {
    // acc is AND over the subset for a = 1, OR for a = 0
    return a == 1 ? acc != 0 : acc != mask;
  };
  auto fold = [&]( uint32_t acc, uint32_t w ) { return a == 1 ? acc & w : acc | w; };
  const uint32_t unit = a == 1 ? mask : 0;

  // a violating subset stays violating under supersets, so only maximal sizes matter
  if ( rank == rank_infinity || static_cast<std::size_t>( rank ) >= pre.size() )
  {
    uint32_t acc = unit;
    for ( auto w : pre )
    {
      acc = fold( acc, w );
    }
    return pre.empty() || subset_ok( acc );
  }

  const int k = rank;
  big_int combos = 1;
  for ( int i = 0; i < k; ++i )
  {
    combos = combos * big_int( pre.size() - i ) / ( i + 1 );
  }
  if ( combos > budget )
  {
    throw resource_error( "is_separating: subset space exceeds budget" );
  }
  std::vector<std::size_t> idx( k );
  for ( int i = 0; i < k; ++i )
  {
    idx[i] = i;
  }
  while ( true )
  {
    uint32_t acc = unit;
    for ( int i = 0; i < k; ++i )
    {
      acc = fold( acc, pre[idx[i]] );
    }
    if ( !subset_ok( acc ) )
    {
      return false;
    }
    int p = k - 1;
    while ( p >= 0 && idx[p] == pre.size() - static_cast<std::size_t>( k - p ) )
    {
      --p;
    }
    if ( p < 0 )
    {
      return true;
    }
    ++idx[p];
    for ( int q = p + 1; q < k; ++q )
    {
      idx[q] = idx[q - 1] + 1;
    }
  }
}

} // namespace detail

/*! \brief Membership by the direct definition. */
inline bool is_member( const bool_fn& f, const clone_id& c )
{
  using detail::preserves_one;
  using detail::preserves_zero;
  switch ( c.family )
  {
  case clone_family::omega: return true;
  case clone_family::t0: return preserves_zero( f );
  case clone_family::t1: return preserves_one( f );
  case clone_family::tc: return preserves_zero( f ) && preserves_one( f );
  case clone_family::m: return is_monotone( f );
  case clone_family::m0: return is_monotone( f ) && preserves_zero( f );
  case clone_family::m1: return is_monotone( f ) && preserves_one( f );
  case clone_family::mc: return is_monotone( f ) && preserves_zero( f ) && preserves_one( f );
  case clone_family::s: return is_self_dual( f );
  case clone_family::sc: return is_self_dual( f ) && preserves_zero( f ) && preserves_one( f );
  case clone_family::sm: return is_self_dual( f ) && is_monotone( f );
  case clone_family::l: return detail::is_linear( f );
  case clone_family::l0: return detail::is_linear( f ) && preserves_zero( f );
  case clone_family::l1: return detail::is_linear( f ) && preserves_one( f );
  case clone_family::ls: return detail::is_linear( f ) && is_self_dual( f );
  case clone_family::lc:
    return detail::is_linear( f ) && preserves_zero( f ) && preserves_one( f );
  case clone_family::u: return detail::is_separating( f, 1, c.rank );
  case clone_family::w: return detail::is_separating( f, 0, c.rank );
  case clone_family::tcu:
    return preserves_zero( f ) && preserves_one( f ) && detail::is_separating( f, 1, c.rank );
  case clone_family::tcw:
    return preserves_zero( f ) && preserves_one( f ) && detail::is_separating( f, 0, c.rank );
  case clone_family::mu: return is_monotone( f ) && detail::is_separating( f, 1, c.rank );
  case clone_family::mw: return is_monotone( f ) && detail::is_separating( f, 0, c.rank );
  case clone_family::mcu:
    return is_monotone( f ) && preserves_zero( f ) && preserves_one( f ) &&
           detail::is_separating( f, 1, c.rank );
  case clone_family::mcw:
    return is_monotone( f ) && preserves_zero( f ) && preserves_one( f ) &&
           detail::is_separating( f, 0, c.rank );
  case clone_family::lam: return detail::is_conjunction_or_constant( f );
  case clone_family::lam0: return detail::is_conjunction_or_constant( f ) && preserves_zero( f );
  case clone_family::lam1: return detail::is_conjunction_or_constant( f ) && preserves_one( f );
  case clone_family::lamc:
    return detail::is_conjunction_or_constant( f ) && preserves_zero( f ) && preserves_one( f );
  case clone_family::v: return detail::is_conjunction_or_constant( dual( f ) );
  case clone_family::v0: return detail::is_conjunction_or_constant( dual( f ) ) && preserves_zero( f );
  case clone_family::v1: return detail::is_conjunction_or_constant( dual( f ) ) && preserves_one( f );
  case clone_family::vc:
    return detail::is_conjunction_or_constant( dual( f ) ) && preserves_zero( f ) &&
           preserves_one( f );
  case clone_family::omega1:
    return detail::is_constant( f ) || detail::is_projection_fn( f ) ||
           detail::is_negated_projection( f );
  case clone_family::istar:
    return detail::is_projection_fn( f ) || detail::is_negated_projection( f );
  case clone_family::i: return detail::is_constant( f ) || detail::is_projection_fn( f );
  case clone_family::i0:
    return f == constant_fn( f.arity, 0 ) || detail::is_projection_fn( f );
  case clone_family::i1:
    return f == constant_fn( f.arity, 1 ) || detail::is_projection_fn( f );
  case clone_family::ic: return detail::is_projection_fn( f );
  }
  throw std::logic_error( "is_member: unreachable" );
}

/*! \brief A characterizing constraint set; `truncated` marks cut-off rank-infinity families. */
struct clone_constraints
{
  std::vector<relational_constraint> constraints;
  bool truncated = false;
};

namespace detail
{

inline relational_constraint rel_constraint( relation r )
{
  relation s = r;
  return relational_constraint( std::move( r ), std::move( s ) );
}

inline relational_constraint zero_constraint()
{
  return rel_constraint( relation( 1, { 0 } ) );
}

inline relational_constraint one_constraint()
{
  return rel_constraint( relation( 1, { 1 } ) );
}

inline relational_constraint order_constraint()
{
  return rel_constraint( relation( 2, { 0b00, 0b01, 0b11 } ) );
}

inline relational_constraint selfdual_constraint()
{
  return rel_constraint( relation( 2, { 0b01, 0b10 } ) );
}

inline relational_constraint linear_constraint()
{
  std::vector<uint32_t> words;
  for ( uint32_t w = 0; w < 16; ++w )
  {
    const int a = w >> 3 & 1, b = w >> 2 & 1, cc = w >> 1 & 1, d = w & 1;
    if ( ( a ^ b ^ cc ) == d )
    {
      words.push_back( w );
    }
  }
  return rel_constraint( relation( 4, std::move( words ) ) );
}

inline relational_constraint and_constraint()
{
  return rel_constraint( relation( 3, { 0b000, 0b010, 0b100, 0b111 } ) );
}

inline relational_constraint or_constraint()
{
  return rel_constraint( relation( 3, { 0b000, 0b011, 0b101, 0b111 } ) );
}

inline relational_constraint omega1_constraint()
{
  // (a, b, c) with a = b or b = c
  return rel_constraint( relation( 3, { 0b000, 0b001, 0b011, 0b100, 0b110, 0b111 } ) );
}

inline relational_constraint separating_constraint( int a, int m )
{
  std::vector<uint32_t> words;
  const uint32_t excluded = a == 1 ? ( uint32_t( 1 ) << m ) - 1 : 0;
  for ( uint32_t w = 0; w < ( uint32_t( 1 ) << m ); ++w )
  {
    if ( w != excluded )
    {
      words.push_back( w );
    }
  }
  return rel_constraint( relation( m, std::move( words ) ) );
}

} // namespace detail

/*!
  \brief Constraints whose joint polymorphisms are exactly the clone.

  Intersection-defined clones return the union of the parts.  The
  rank-infinity separation families are truncated at `rank_bound` and
  flagged as such.
*/
inline clone_constraints characterizing_constraints( const clone_id& c, int rank_bound = 4 )
{
  using namespace detail;
  clone_constraints out;
  auto add_separating = [&]( int a, int rank ) {
    if ( rank == rank_infinity )
    {
      for ( int m = 2; m <= rank_bound; ++m )
      {
        out.constraints.push_back( separating_constraint( a, m ) );
      }
      out.truncated = true;
    }
    else
    {
      out.constraints.push_back( separating_constraint( a, rank ) );
    }
  };
  switch ( c.family )
  {
  case clone_family::omega: break;
  case clone_family::t0: out.constraints = { zero_constraint() }; break;
  case clone_family::t1: out.constraints = { one_constraint() }; break;
  case clone_family::tc: out.constraints = { zero_constraint(), one_constraint() }; break;
  case clone_family::m: out.constraints = { order_constraint() }; break;
  case clone_family::m0: out.constraints = { order_constraint(), zero_constraint() }; break;
  case clone_family::m1: out.constraints = { order_constraint(), one_constraint() }; break;
  case clone_family::mc:
    out.constraints = { order_constraint(), zero_constraint(), one_constraint() };
    break;
  case clone_family::s: out.constraints = { selfdual_constraint() }; break;
  case clone_family::sc:
    out.constraints = { selfdual_constraint(), zero_constraint(), one_constraint() };
    break;
  case clone_family::sm: out.constraints = { selfdual_constraint(), order_constraint() }; break;
  case clone_family::l: out.constraints = { linear_constraint() }; break;
  case clone_family::l0: out.constraints = { linear_constraint(), zero_constraint() }; break;
  case clone_family::l1: out.constraints = { linear_constraint(), one_constraint() }; break;
  case clone_family::ls: out.constraints = { linear_constraint(), selfdual_constraint() }; break;
  case clone_family::lc:
    out.constraints = { linear_constraint(), zero_constraint(), one_constraint() };
    break;
  case clone_family::u: add_separating( 1, c.rank ); break;
  case clone_family::w: add_separating( 0, c.rank ); break;
  case clone_family::tcu:
    out.constraints = { zero_constraint(), one_constraint() };
    add_separating( 1, c.rank );
    break;
  case clone_family::tcw:
    out.constraints = { zero_constraint(), one_constraint() };
    add_separating( 0, c.rank );
    break;
  case clone_family::mu:
    out.constraints = { order_constraint() };
    add_separating( 1, c.rank );
    break;
  case clone_family::mw:
    out.constraints = { order_constraint() };
    add_separating( 0, c.rank );
    break;
  case clone_family::mcu:
    out.constraints = { order_constraint(), zero_constraint(), one_constraint() };
    add_separating( 1, c.rank );
    break;
  case clone_family::mcw:
    out.constraints = { order_constraint(), zero_constraint(), one_constraint() };
    add_separating( 0, c.rank );
    break;
  case clone_family::lam: out.constraints = { and_constraint() }; break;
  case clone_family::lam0: out.constraints = { and_constraint(), zero_constraint() }; break;
  case clone_family::lam1: out.constraints = { and_constraint(), one_constraint() }; break;
  case clone_family::lamc:
    out.constraints = { and_constraint(), zero_constraint(), one_constraint() };
    break;
  case clone_family::v: out.constraints = { or_constraint() }; break;
  case clone_family::v0: out.constraints = { or_constraint(), zero_constraint() }; break;
  case clone_family::v1: out.constraints = { or_constraint(), one_constraint() }; break;
  case clone_family::vc:
    out.constraints = { or_constraint(), zero_constraint(), one_constraint() };
    break;
  case clone_family::omega1: out.constraints = { omega1_constraint() }; break;
  case clone_family::istar:
    out.constraints = { omega1_constraint(), selfdual_constraint() };
    break;
  case clone_family::i: out.constraints = { omega1_constraint(), order_constraint() }; break;
  case clone_family::i0:
    out.constraints = { omega1_constraint(), order_constraint(), zero_constraint() };
    break;
  case clone_family::i1:
    out.constraints = { omega1_constraint(), order_constraint(), one_constraint() };
    break;
  case clone_family::ic:
    out.constraints = { omega1_constraint(), order_constraint(), zero_constraint(),
                        one_constraint() };
    break;
  }
  return out;
}

/*!
  \brief Asserts that the direct definition and constraint preservation agree on f.

  Throws consistency_error on disagreement; otherwise returns the common verdict.
*/
inline bool membership_crosscheck( const bool_fn& f, const clone_id& c, int rank_bound = 4,
                                   uint64_t column_budget = 100000000 )
{
  const bool direct = is_member( f, c );
  const auto qs = characterizing_constraints( c, rank_bound );
  bool by_constraints = true;
  for ( const auto& q : qs.constraints )
  {
    if ( !preserves( f, q, column_budget ) )
    {
      by_constraints = false;
      break;
    }
  }
  if ( direct != by_constraints )
  {
    throw consistency_error( "membership_crosscheck: definitions disagree for " +
                             clone_name( c ) + " on " + format_fn( f ) );
  }
  return direct;
}

} // namespace thrlab
