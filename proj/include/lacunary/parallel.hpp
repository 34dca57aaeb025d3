/*
   Copyright 2026 The lacunary authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LACUNARY_PARALLEL_HPP
#define LACUNARY_PARALLEL_HPP

#include <omp.h>

namespace lacunary {

/// Execution policy for the kernels that have both a serial reference and
/// an OpenMP version. Results never depend on the choice.
enum class Exec { Serial, Parallel };

/// Sets the OpenMP team size used by Exec::Parallel kernels; 0 keeps the
/// runtime default.
inline void set_thread_count(int n)
{
    if (n > 0) omp_set_num_threads(n);
}

inline int thread_count() { return omp_get_max_threads(); }

}  // namespace lacunary

#endif  // LACUNARY_PARALLEL_HPP
