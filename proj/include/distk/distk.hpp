// Copyright 2026 The distk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DISTK_DISTK_HPP
#define DISTK_DISTK_HPP

// Umbrella header: graphs, products, distance-k constructions, exact vacuum
// moments, Jacobi/Cauchy machinery, and the Bernoulli-limit scan harness.

#include "distk/baseline.hpp"
#include "distk/cauchy.hpp"
#include "distk/census.hpp"
#include "distk/decomposition.hpp"
#include "distk/distances.hpp"
#include "distk/errors.hpp"
#include "distk/graph.hpp"
#include "distk/graph_io.hpp"
#include "distk/hermite.hpp"
#include "distk/jacobi.hpp"
#include "distk/lanczos.hpp"
#include "distk/measure.hpp"
#include "distk/metric.hpp"
#include "distk/moments.hpp"
#include "distk/products.hpp"
#include "distk/scan.hpp"
#include "distk/serialize.hpp"
#include "distk/spectral.hpp"

#endif  // DISTK_DISTK_HPP
