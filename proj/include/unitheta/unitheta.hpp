/* Copyright (c) 2026 The unitheta authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef UNITHETA_UNITHETA_HPP
#define UNITHETA_UNITHETA_HPP

#include "unitheta/bounds.hpp"
#include "unitheta/cli.hpp"
#include "unitheta/forms.hpp"
#include "unitheta/io.hpp"
#include "unitheta/lattice.hpp"
#include "unitheta/polynomial.hpp"
#include "unitheta/qseries.hpp"
#include "unitheta/rational.hpp"
#include "unitheta/roots.hpp"
#include "unitheta/secrecy.hpp"
#include "unitheta/selftest.hpp"

#endif  // UNITHETA_UNITHETA_HPP
