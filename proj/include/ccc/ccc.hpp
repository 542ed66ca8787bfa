// Copyright 2026 The ccc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CCC_CCC_HPP_
#define CCC_CCC_HPP_

#include "ccc/aux_graph.hpp"
#include "ccc/common.hpp"
#include "ccc/covering_solver.hpp"
#include "ccc/dangerous.hpp"
#include "ccc/generate.hpp"
#include "ccc/heap_constraints.hpp"
#include "ccc/instance.hpp"
#include "ccc/lp.hpp"
#include "ccc/oracle.hpp"
#include "ccc/pivot.hpp"
#include "ccc/solve.hpp"
#include "ccc/union_find.hpp"

#endif  // CCC_CCC_HPP_
