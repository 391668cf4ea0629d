/*
   Copyright 2026 the rwps authors

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

#pragma once

#include "rwps/characterize.hpp"
#include "rwps/cheb_poly.hpp"
#include "rwps/cli.hpp"
#include "rwps/expansion.hpp"
#include "rwps/family.hpp"
#include "rwps/json_io.hpp"
#include "rwps/minpoly.hpp"
#include "rwps/number_field.hpp"
#include "rwps/operators.hpp"
#include "rwps/rational.hpp"
