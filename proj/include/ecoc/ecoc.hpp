// Copyright 2026 The ecocnet Authors
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

#include "ecoc/codebook.hpp"
#include "ecoc/dataset.hpp"
#include "ecoc/decoder.hpp"
#include "ecoc/error.hpp"
#include "ecoc/evaluator.hpp"
#include "ecoc/features.hpp"
#include "ecoc/harness.hpp"
#include "ecoc/matrix.hpp"
#include "ecoc/network.hpp"
#include "ecoc/rng.hpp"
