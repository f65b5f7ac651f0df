#pragma once
//------------------------------------------------------------------------------
//
//   Copyright 2026 The extropy-measures Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "extropy/dataset.hpp"
#include "extropy/distribution.hpp"
#include "extropy/dynamic.hpp"
#include "extropy/error.hpp"
#include "extropy/families.hpp"
#include "extropy/kde.hpp"
#include "extropy/measures.hpp"
#include "extropy/quadrature.hpp"
#include "extropy/report.hpp"
#include "extropy/sample_batch.hpp"
#include "extropy/sampler.hpp"
#include "extropy/simulation.hpp"
