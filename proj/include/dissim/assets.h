// Copyright 2026 The Dissim Authors.
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

#ifndef DISSIM_ASSETS_H_
#define DISSIM_ASSETS_H_

#include <string_view>

namespace dissim {

// Contents of data/rules.txt and data/cue_lexicon.tsv, compiled in.
std::string_view default_rules_document();
std::string_view default_lexicon_document();

}  // namespace dissim

#endif  // DISSIM_ASSETS_H_
