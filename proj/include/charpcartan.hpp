/*
   Copyright 2026 The charpcartan Authors

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

// Umbrella header.
#ifndef CHARPCARTAN_HPP
#define CHARPCARTAN_HPP

#include "charpcartan/abstract_lie.hpp"
#include "charpcartan/cartier.hpp"
#include "charpcartan/classify.hpp"
#include "charpcartan/connection.hpp"
#include "charpcartan/counting.hpp"
#include "charpcartan/derivation.hpp"
#include "charpcartan/double_double.hpp"
#include "charpcartan/errors.hpp"
#include "charpcartan/expr.hpp"
#include "charpcartan/forms.hpp"
#include "charpcartan/fp.hpp"
#include "charpcartan/groups.hpp"
#include "charpcartan/lie.hpp"
#include "charpcartan/matrix.hpp"
#include "charpcartan/poly.hpp"
#include "charpcartan/random.hpp"
#include "charpcartan/selftest.hpp"

#endif  // CHARPCARTAN_HPP
