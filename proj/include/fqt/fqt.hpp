/*
   Copyright 2026 The fqt Authors

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

// Convenience header pulling in the whole library.

#ifndef FQT_FQT_HPP
#define FQT_FQT_HPP

#include "base_field.hpp"
#include "definability.hpp"
#include "errors.hpp"
#include "function_field.hpp"
#include "local_symbols.hpp"
#include "parse.hpp"
#include "pfister.hpp"
#include "pfister_form.hpp"
#include "poly.hpp"
#include "reciprocity.hpp"

#endif
