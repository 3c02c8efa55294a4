// Copyright 2026 The pauli-tree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

// Everything except the command line (pauli_tree/cli.hpp).

#include "pauli_tree/algebra.hpp"
#include "pauli_tree/bench.hpp"
#include "pauli_tree/block_encoding.hpp"
#include "pauli_tree/decomposer.hpp"
#include "pauli_tree/decomposition.hpp"
#include "pauli_tree/io.hpp"
#include "pauli_tree/matrix_source.hpp"
#include "pauli_tree/parallel.hpp"
#include "pauli_tree/pauli.hpp"
#include "pauli_tree/structure.hpp"
#include "pauli_tree/tree_state.hpp"
