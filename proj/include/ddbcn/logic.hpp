/* ddbcn: data-driven analysis and control of Boolean control networks
 * Copyright (C) 2026  ddbcn contributors
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
  \file logic.hpp
  \brief canonical vectors, logical and Boolean matrices, semi-tensor product

  All indices in the public interface are 1-based, so that the canonical
  vector delta_k^i is written `canonical_vector{ k, i }` and column j of a
  matrix is `m.column( j )`.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ddbcn
{

/*! \brief the canonical vector delta_dim^index, a column of I_dim */
class canonical_vector
{
public:
  canonical_vector( std::size_t dim, std::size_t index ) : dim_( dim ), index_( index )
  {
    if ( dim == 0u )
      throw invalid_argument( "canonical vector of dimension 0" );
    if ( index < 1u || index > dim )
      throw index_out_of_range( "delta_" + std::to_string( dim ) + "^" + std::to_string( index ) );
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t index() const noexcept { return index_; }

  bool operator==( const canonical_vector& ) const = default;

private:
  std::size_t dim_;
  std::size_t index_;
};

/*! \brief a k x q matrix whose columns are all canonical vectors

  Stored as the list of the row positions of the unit entries.
*/
class logical_matrix
{
public:
  logical_matrix() = default;

  logical_matrix( std::size_t rows, std::vector<std::size_t> columns ) : rows_( rows ), columns_( std::move( columns ) )
  {
    if ( rows_ == 0u )
      throw invalid_argument( "logical matrix with zero rows" );
    for ( auto c : columns_ )
    {
      if ( c < 1u || c > rows_ )
        throw index_out_of_range( "logical matrix column index " + std::to_string( c ) + " with " + std::to_string( rows_ ) + " rows" );
    }
  }

  static logical_matrix identity( std::size_t n )
  {
    std::vector<std::size_t> cols( n );
    std::iota( cols.begin(), cols.end(), std::size_t{ 1 } );
    return logical_matrix( n, std::move( cols ) );
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }

  /*! \brief row position of the unit entry of column j (1-based) */
  std::size_t index( std::size_t j ) const
  {
    if ( j < 1u || j > columns_.size() )
      throw index_out_of_range( "column " + std::to_string( j ) + " of " + std::to_string( columns_.size() ) );
    return columns_[j - 1u];
  }

  canonical_vector column( std::size_t j ) const { return { rows_, index( j ) }; }

  std::span<const std::size_t> indices() const noexcept { return columns_; }

  bool operator==( const logical_matrix& ) const = default;

private:
  std::size_t rows_ = 1u;
  std::vector<std::size_t> columns_;
};

/*! \brief a 0-1 matrix stored as packed bit rows */
class boolean_matrix
{
public:
  boolean_matrix() = default;

  boolean_matrix( std::size_t rows, std::size_t cols )
      : rows_( rows ), cols_( cols ), words_( ( cols + 63u ) / 64u ), bits_( rows * words_, 0u )
  {
  }

  explicit boolean_matrix( const logical_matrix& m ) : boolean_matrix( m.rows(), m.cols() )
  {
    for ( std::size_t j = 1u; j <= m.cols(); ++j )
      set( m.index( j ), j );
  }

  static boolean_matrix identity( std::size_t n )
  {
    boolean_matrix m( n, n );
    for ( std::size_t i = 1u; i <= n; ++i )
      m.set( i, i );
    return m;
  }

  static boolean_matrix ones( std::size_t rows, std::size_t cols )
  {
    boolean_matrix m( rows, cols );
    for ( std::size_t i = 1u; i <= rows; ++i )
      for ( std::size_t j = 1u; j <= cols; ++j )
        m.set( i, j );
    return m;
  }

  /*! \brief builds a matrix from a row-major literal, e.g. `{ { 1, 0 }, { 0, 1 } }` */
  static boolean_matrix from_rows( std::initializer_list<std::initializer_list<int>> rows )
  {
    const std::size_t nc = rows.size() == 0u ? 0u : rows.begin()->size();
    boolean_matrix m( rows.size(), nc );
    std::size_t i = 1u;
    for ( const auto& r : rows )
    {
      if ( r.size() != nc )
        throw dimension_mismatch( "ragged row literal" );
      std::size_t j = 1u;
      for ( int v : r )
        m.set( i, j++, v != 0 );
      ++i;
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool get( std::size_t i, std::size_t j ) const
  {
    check( i, j );
    return ( bits_[word( i, j )] >> ( ( j - 1u ) % 64u ) ) & 1u;
  }

  void set( std::size_t i, std::size_t j, bool value = true )
  {
    check( i, j );
    const std::uint64_t mask = std::uint64_t{ 1 } << ( ( j - 1u ) % 64u );
    if ( value )
      bits_[word( i, j )] |= mask;
    else
      bits_[word( i, j )] &= ~mask;
  }

  /*! \brief positions (1-based) of the ones in column j */
  std::vector<std::size_t> column_support( std::size_t j ) const
  {
    std::vector<std::size_t> out;
    for ( std::size_t i = 1u; i <= rows_; ++i )
      if ( get( i, j ) )
        out.push_back( i );
    return out;
  }

  std::vector<std::size_t> row_support( std::size_t i ) const
  {
    std::vector<std::size_t> out;
    for ( std::size_t j = 1u; j <= cols_; ++j )
      if ( get( i, j ) )
        out.push_back( j );
    return out;
  }

  bool row_is_zero( std::size_t i ) const
  {
    check( i, cols_ == 0u ? 0u : 1u );
    const auto* r = &bits_[( i - 1u ) * words_];
    return std::all_of( r, r + words_, []( auto w ) { return w == 0u; } );
  }

  std::size_t count() const
  {
    std::size_t n = 0u;
    for ( auto w : bits_ )
      n += static_cast<std::size_t>( std::popcount( w ) );
    return n;
  }

  bool is_logical() const
  {
    for ( std::size_t j = 1u; j <= cols_; ++j )
      if ( column_support( j ).size() != 1u )
        return false;
    return true;
  }

  logical_matrix to_logical() const
  {
    std::vector<std::size_t> cols;
    cols.reserve( cols_ );
    for ( std::size_t j = 1u; j <= cols_; ++j )
    {
      auto s = column_support( j );
      if ( s.size() != 1u )
        throw invalid_argument( "column " + std::to_string( j ) + " of a Boolean matrix is not canonical" );
      cols.push_back( s.front() );
    }
    return logical_matrix( rows_, std::move( cols ) );
  }

  boolean_matrix transpose() const
  {
    boolean_matrix t( cols_, rows_ );
    for ( std::size_t i = 1u; i <= rows_; ++i )
      for ( std::size_t j = 1u; j <= cols_; ++j )
        if ( get( i, j ) )
          t.set( j, i );
    return t;
  }

  /*! \brief entrywise OR */
  boolean_matrix& operator|=( const boolean_matrix& other )
  {
    same_shape( other );
    for ( std::size_t w = 0u; w < bits_.size(); ++w )
      bits_[w] |= other.bits_[w];
    return *this;
  }

  friend boolean_matrix operator|( boolean_matrix a, const boolean_matrix& b ) { return a |= b; }

  /*! \brief entrywise a <= b */
  bool leq( const boolean_matrix& other ) const
  {
    same_shape( other );
    for ( std::size_t w = 0u; w < bits_.size(); ++w )
      if ( ( bits_[w] & ~other.bits_[w] ) != 0u )
        return false;
    return true;
  }

  bool operator==( const boolean_matrix& ) const = default;

private:
  friend boolean_matrix hadamard( const boolean_matrix& a, const boolean_matrix& b );
  friend boolean_matrix boolean_product( const boolean_matrix& a, const boolean_matrix& b );

  std::size_t word( std::size_t i, std::size_t j ) const noexcept { return ( i - 1u ) * words_ + ( j - 1u ) / 64u; }

  void check( std::size_t i, std::size_t j ) const
  {
    if ( i < 1u || i > rows_ || j < 1u || j > cols_ )
      throw index_out_of_range( "entry (" + std::to_string( i ) + "," + std::to_string( j ) + ") of a " +
                                std::to_string( rows_ ) + "x" + std::to_string( cols_ ) + " matrix" );
  }

  void same_shape( const boolean_matrix& other ) const
  {
    if ( rows_ != other.rows_ || cols_ != other.cols_ )
      throw dimension_mismatch( std::to_string( rows_ ) + "x" + std::to_string( cols_ ) + " vs " +
                                std::to_string( other.rows_ ) + "x" + std::to_string( other.cols_ ) );
  }

  std::size_t rows_ = 0u;
  std::size_t cols_ = 0u;
  std::size_t words_ = 0u;
  std::vector<std::uint64_t> bits_;
};

/*! \brief entrywise AND of two equally shaped matrices */
inline boolean_matrix hadamard( const boolean_matrix& a, const boolean_matrix& b )
{
  a.same_shape( b );
  boolean_matrix r = a;
  for ( std::size_t w = 0u; w < r.bits_.size(); ++w )
    r.bits_[w] &= b.bits_[w];
  return r;
}

/*! \brief matrix product over the (OR, AND) semiring */
inline boolean_matrix boolean_product( const boolean_matrix& a, const boolean_matrix& b )
{
  if ( a.cols() != b.rows() )
    throw dimension_mismatch( "Boolean product of " + std::to_string( a.rows() ) + "x" + std::to_string( a.cols() ) + " and " +
                              std::to_string( b.rows() ) + "x" + std::to_string( b.cols() ) );
  boolean_matrix r( a.rows(), b.cols() );
  for ( std::size_t i = 1u; i <= a.rows(); ++i )
  {
    auto* out = &r.bits_[( i - 1u ) * r.words_];
    for ( std::size_t k = 1u; k <= a.cols(); ++k )
    {
      if ( !a.get( i, k ) )
        continue;
      const auto* in = &b.bits_[( k - 1u ) * b.words_];
      for ( std::size_t w = 0u; w < r.words_; ++w )
        out[w] |= in[w];
    }
  }
  return r;
}

/*! \brief I v L v L^2 v ... v L^max_power, accumulated with Boolean products */
inline boolean_matrix or_of_powers( const boolean_matrix& l, std::size_t max_power )
{
  if ( l.rows() != l.cols() )
    throw dimension_mismatch( "power of a non-square matrix" );
  auto acc = boolean_matrix::identity( l.rows() );
  auto power = acc;
  for ( std::size_t t = 1u; t <= max_power; ++t )
  {
    power = boolean_product( l, power );
    const auto before = acc;
    acc |= power;
    /* L^t <= acc implies every higher power is covered as well */
    if ( acc == before )
      break;
  }
  return acc;
}

/*! \brief true iff I v L v ... v L^{k-1} has no zero entry */
inline bool is_irreducible( const boolean_matrix& l )
{
  if ( l.rows() != l.cols() )
    throw dimension_mismatch( "irreducibility of a non-square matrix" );
  const auto k = l.rows();
  return or_of_powers( l, k == 0u ? 0u : k - 1u ).count() == k * k;
}

/*! \brief column-wise Kronecker product */
inline boolean_matrix khatri_rao( const boolean_matrix& c, const boolean_matrix& d )
{
  if ( c.cols() != d.cols() )
    throw dimension_mismatch( "Khatri-Rao product needs equal column counts" );
  boolean_matrix r( c.rows() * d.rows(), c.cols() );
  for ( std::size_t j = 1u; j <= c.cols(); ++j )
    for ( auto a : c.column_support( j ) )
      for ( auto b : d.column_support( j ) )
        r.set( ( a - 1u ) * d.rows() + b, j );
  return r;
}

inline logical_matrix khatri_rao( const logical_matrix& c, const logical_matrix& d )
{
  if ( c.cols() != d.cols() )
    throw dimension_mismatch( "Khatri-Rao product needs equal column counts" );
  std::vector<std::size_t> cols( c.cols() );
  for ( std::size_t j = 1u; j <= c.cols(); ++j )
    cols[j - 1u] = ( c.index( j ) - 1u ) * d.rows() + d.index( j );
  return logical_matrix( c.rows() * d.rows(), std::move( cols ) );
}

/*! \brief Phi_n, with Phi_n x = x |x x for every x in L_n */
inline logical_matrix power_reducing_matrix( std::size_t n )
{
  if ( n == 0u )
    throw invalid_argument( "power-reducing matrix of order 0" );
  std::vector<std::size_t> cols( n );
  for ( std::size_t j = 1u; j <= n; ++j )
    cols[j - 1u] = ( j - 1u ) * n + j;
  return logical_matrix( n * n, std::move( cols ) );
}

/* semi-tensor product */

/*! \brief delta_m^i |x delta_n^j = delta_{mn}^{(i-1)n+j} */
inline canonical_vector stp( const canonical_vector& a, const canonical_vector& b )
{
  return { a.dim() * b.dim(), ( a.index() - 1u ) * b.dim() + b.index() };
}

/*! \brief semi-tensor product of two logical matrices

  With l = lcm(n, p), A |x B = (A (x) I_{l/n}) (B (x) I_{l/p}). Both factors
  stay logical, so the product is evaluated column by column on indices.
*/
inline logical_matrix stp( const logical_matrix& a, const logical_matrix& b )
{
  const auto n = a.cols();
  const auto p = b.rows();
  if ( n == 0u || p == 0u || b.cols() == 0u )
    throw dimension_mismatch( "semi-tensor product of an empty matrix" );
  const auto l = std::lcm( n, p );
  const auto ta = l / n;
  const auto tb = l / p;
  std::vector<std::size_t> cols;
  cols.reserve( b.cols() * tb );
  for ( std::size_t jb = 1u; jb <= b.cols(); ++jb )
  {
    for ( std::size_t s = 1u; s <= tb; ++s )
    {
      /* column of B (x) I_tb, a position in [1, l] */
      const auto mid = ( b.index( jb ) - 1u ) * tb + s;
      const auto ra = ( mid - 1u ) / ta + 1u;
      const auto sa = ( mid - 1u ) % ta + 1u;
      cols.push_back( ( a.index( ra ) - 1u ) * ta + sa );
    }
  }
  return logical_matrix( a.rows() * ta, std::move( cols ) );
}

inline canonical_vector stp( const logical_matrix& a, const canonical_vector& x )
{
  auto r = stp( a, logical_matrix( x.dim(), { x.index() } ) );
  if ( r.cols() != 1u )
    throw dimension_mismatch( "logical matrix |x vector does not yield a vector" );
  return r.column( 1u );
}

/*! \brief small dense matrix used for real-valued semi-tensor products and cross-checks */
template<typename T>
class dense_matrix
{
public:
  dense_matrix() = default;
  dense_matrix( std::size_t rows, std::size_t cols, T value = T{} ) : rows_( rows ), cols_( cols ), data_( rows * cols, value ) {}

  static dense_matrix identity( std::size_t n )
  {
    dense_matrix m( n, n );
    for ( std::size_t i = 1u; i <= n; ++i )
      m( i, i ) = T{ 1 };
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()( std::size_t i, std::size_t j ) { return data_[( i - 1u ) * cols_ + ( j - 1u )]; }
  const T& operator()( std::size_t i, std::size_t j ) const { return data_[( i - 1u ) * cols_ + ( j - 1u )]; }

  bool operator==( const dense_matrix& ) const = default;

private:
  std::size_t rows_ = 0u;
  std::size_t cols_ = 0u;
  std::vector<T> data_;
};

template<typename T>
dense_matrix<T> operator*( const dense_matrix<T>& a, const dense_matrix<T>& b )
{
  if ( a.cols() != b.rows() )
    throw dimension_mismatch( "matrix product" );
  dense_matrix<T> r( a.rows(), b.cols() );
  for ( std::size_t i = 1u; i <= a.rows(); ++i )
    for ( std::size_t k = 1u; k <= a.cols(); ++k )
    {
      const T aik = a( i, k );
      if ( aik == T{} )
        continue;
      for ( std::size_t j = 1u; j <= b.cols(); ++j )
        r( i, j ) += aik * b( k, j );
    }
  return r;
}

template<typename T>
dense_matrix<T> kron( const dense_matrix<T>& a, const dense_matrix<T>& b )
{
  dense_matrix<T> r( a.rows() * b.rows(), a.cols() * b.cols() );
  for ( std::size_t i = 1u; i <= a.rows(); ++i )
    for ( std::size_t j = 1u; j <= a.cols(); ++j )
      for ( std::size_t k = 1u; k <= b.rows(); ++k )
        for ( std::size_t l = 1u; l <= b.cols(); ++l )
          r( ( i - 1u ) * b.rows() + k, ( j - 1u ) * b.cols() + l ) = a( i, j ) * b( k, l );
  return r;
}

/*! \brief left semi-tensor product (A (x) I_{l/n}) (B (x) I_{l/p}), l = lcm(n, p) */
template<typename T>
dense_matrix<T> stp( const dense_matrix<T>& a, const dense_matrix<T>& b )
{
  if ( a.rows() == 0u || a.cols() == 0u || b.rows() == 0u || b.cols() == 0u )
    throw dimension_mismatch( "semi-tensor product of an empty matrix" );
  const auto l = std::lcm( a.cols(), b.rows() );
  return kron( a, dense_matrix<T>::identity( l / a.cols() ) ) * kron( b, dense_matrix<T>::identity( l / b.rows() ) );
}

template<typename T = long long>
dense_matrix<T> to_dense( const logical_matrix& m )
{
  dense_matrix<T> r( m.rows(), m.cols() );
  for ( std::size_t j = 1u; j <= m.cols(); ++j )
    r( m.index( j ), j ) = T{ 1 };
  return r;
}

template<typename T = long long>
dense_matrix<T> to_dense( const boolean_matrix& m )
{
  dense_matrix<T> r( m.rows(), m.cols() );
  for ( std::size_t i = 1u; i <= m.rows(); ++i )
    for ( std::size_t j = 1u; j <= m.cols(); ++j )
      if ( m.get( i, j ) )
        r( i, j ) = T{ 1 };
  return r;
}

template<typename T = long long>
dense_matrix<T> to_dense( const canonical_vector& v )
{
  dense_matrix<T> r( v.dim(), 1u );
  r( v.index(), 1u ) = T{ 1 };
  return r;
}

/*! \brief directed graph of a square Boolean matrix: edge j -> l iff [L]_{lj} = 1 */
struct digraph
{
  std::size_t nodes = 0u;
  /*! successors[j - 1] lists the targets of the edges leaving node j */
  std::vector<std::vector<std::size_t>> successors;
};

inline digraph to_digraph( const boolean_matrix& l )
{
  if ( l.rows() != l.cols() )
    throw dimension_mismatch( "digraph of a non-square matrix" );
  digraph g{ l.rows(), std::vector<std::vector<std::size_t>>( l.rows() ) };
  for ( std::size_t j = 1u; j <= l.cols(); ++j )
    g.successors[j - 1u] = l.column_support( j );
  return g;
}

} // namespace ddbcn
