// Copyright 2026 The merging-paths Authors
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

#include "merging/arrival.hpp"
#include "merging/bijections.hpp"
#include "merging/classes.hpp"
#include "merging/counting.hpp"
#include "merging/error.hpp"
#include "merging/expectation.hpp"
#include "merging/io.hpp"
#include "merging/numeric.hpp"
#include "merging/oracle.hpp"
#include "merging/output.hpp"
#include "merging/svg.hpp"
#include "merging/tables.hpp"
#include "merging/trails.hpp"
