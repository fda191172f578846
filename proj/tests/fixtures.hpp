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

#pragma once

/* the two worked examples: a 7-state network observed without outputs and a
   6-state network with a binary output */

#include <cstddef>
#include <vector>

#include <ddbcn/ddbcn.hpp>

namespace ddbcn::test
{

inline const dimensions example1_dims{ 7u, 3u, 1u };

inline bcn example1_model()
{
  return bcn( example1_dims,
              logical_matrix( 7u, { 4, 2, 2, 5, 2, 7, 5, /* | */ 6, 1, 3, 2, 4, 5, 7, /* | */ 7, 6, 2, 3, 1, 6, 6 } ),
              logical_matrix( 1u, { 1, 1, 1, 1, 1, 1, 1 } ) );
}

inline const std::vector<std::size_t> example1_x{ 1, 7, 7, 6, 5, 1, 6, 5, 1, 4, 3, 3, 2, 2 };
inline const std::vector<std::size_t> example1_u{ 3, 2, 3, 2, 3, 2, 2, 3, 1, 3, 2, 1, 1 };

inline data_set example1_data()
{
  return assemble( example1_dims, { make_trace( example1_dims, example1_x, example1_u ) } );
}

inline const std::vector<std::size_t> example1_unsafe{ 3, 4, 7 };
inline const std::vector<std::size_t> example1_k{ 2, 1, 1, 3, 3, 2, 3 };

inline const dimensions example2_dims{ 6u, 3u, 2u };

inline bcn example2_model()
{
  return bcn( example2_dims,
              logical_matrix( 6u, { 2, 4, 3, 3, 6, 5, /* | */ 1, 5, 2, 2, 6, 1, /* | */ 5, 1, 4, 5, 4, 6 } ),
              logical_matrix( 2u, { 1, 2, 2, 2, 1, 1 } ) );
}

inline const std::vector<std::size_t> example2_x{ 6, 6, 1, 2, 5, 4, 2, 4, 3, 3 };
inline const std::vector<std::size_t> example2_u{ 3, 2, 1, 2, 3, 2, 1, 1, 1 };
inline const std::vector<std::size_t> example2_y{ 1, 1, 1, 2, 1, 2, 2, 2, 2 };

inline data_set example2_data()
{
  return assemble( example2_dims, { make_trace( example2_dims, example2_x, example2_u, example2_y ) } );
}

inline const std::vector<std::size_t> example2_k{ 1, 1, 1, 2, 3, 2 };

} // namespace ddbcn::test
