// Copyright 2026 the entlab developers
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

/// Umbrella header for the entlab toolkit: small-dimension state vectors and
/// operators, entangling gates and their diagnostics, the eight-element
/// dense-coding operator set, qutrit direction frames, prepare-and-measure
/// key distribution variants, density matrices, and reproducible experiment
/// reports.

#pragma once

#include "entlab/density.hpp"       // IWYU pragma: export
#include "entlab/entanglement.hpp"  // IWYU pragma: export
#include "entlab/frames.hpp"        // IWYU pragma: export
#include "entlab/gates.hpp"         // IWYU pragma: export
#include "entlab/group.hpp"         // IWYU pragma: export
#include "entlab/linalg.hpp"        // IWYU pragma: export
#include "entlab/qkd.hpp"           // IWYU pragma: export
#include "entlab/random.hpp"        // IWYU pragma: export
#include "entlab/report.hpp"        // IWYU pragma: export
#include "entlab/version.hpp"       // IWYU pragma: export
