/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include "awgsen/address.hpp"
#include "awgsen/awg.hpp"
#include "awgsen/classical_shuffle.hpp"
#include "awgsen/io.hpp"
#include "awgsen/metrics.hpp"
#include "awgsen/modular_shuffle.hpp"
#include "awgsen/rwa.hpp"
#include "awgsen/sen.hpp"
#include "awgsen/table_render.hpp"
