// Copyright 2026 The tabsynth authors
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

#pragma once

#include "tabsynth/bench.hpp"
#include "tabsynth/circuit.hpp"
#include "tabsynth/clifford_tableau.hpp"
#include "tabsynth/generators.hpp"
#include "tabsynth/pauli.hpp"
#include "tabsynth/pipeline.hpp"
#include "tabsynth/qasm.hpp"
#include "tabsynth/resynth.hpp"
#include "tabsynth/rotation_tableau.hpp"
#include "tabsynth/verify.hpp"
