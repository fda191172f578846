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
  \file errors.hpp
  \brief exception types raised by the library
*/

#pragma once

#include <stdexcept>
#include <string>

namespace ddbcn
{

/*! \brief base class of every error raised by ddbcn */
class error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief operand shapes or dimensions do not agree */
class dimension_mismatch : public error
{
public:
  explicit dimension_mismatch( const std::string& what ) : error( "dimension mismatch: " + what ) {}
};

/*! \brief an index lies outside of [1, dim] */
class index_out_of_range : public error
{
public:
  explicit index_out_of_range( const std::string& what ) : error( "index out of range: " + what ) {}
};

/*! \brief the same (input, state) pair was observed with two successors, or a state with two outputs */
class inconsistent_data : public error
{
public:
  explicit inconsistent_data( const std::string& what ) : error( "inconsistent data: " + what ) {}
};

class not_informative : public error
{
public:
  explicit not_informative( const std::string& what ) : error( "data not informative: " + what ) {}
};

class missing_outputs : public error
{
public:
  missing_outputs() : error( "the data set carries no output measurements" ) {}
};

class empty_safe_set : public error
{
public:
  empty_safe_set() : error( "the unsafe set covers every state" ) {}
};

/*! \brief simple-cycle enumeration exceeded the configured cap */
class cap_exceeded : public error
{
public:
  explicit cap_exceeded( std::size_t cap ) : error( "cycle enumeration exceeded the cap of " + std::to_string( cap ) + " cycles" ) {}
};

class invalid_argument : public error
{
public:
  explicit invalid_argument( const std::string& what ) : error( "invalid argument: " + what ) {}
};

} // namespace ddbcn
