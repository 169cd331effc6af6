// Copyright 2026 The clifford-climb Authors
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

#include "climb/error.hpp"
#include "climb/ring.hpp"
#include "climb/gf2.hpp"
#include "climb/pauli.hpp"
#include "climb/matrix.hpp"
#include "climb/symplectic.hpp"
#include "climb/clifford.hpp"
#include "climb/hierarchy.hpp"
#include "climb/circuit.hpp"
#include "climb/serialize.hpp"
#include "climb/verify.hpp"
