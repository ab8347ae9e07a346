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


// Loads a rule file and checks it against the expected family inventory.
// Exit status 1 on any problem, so it can gate a build.

#include <fstream>
#include <iostream>
#include <sstream>

#include "dissim/errors.h"
#include "dissim/rules.h"

int main(int argc, char **argv) {
  if (argc != 2) {
    std::cerr << "usage: check_rules RULES_FILE\n";
    return 2;
  }
  std::ifstream in(argv[1]);
  if (!in) {
    std::cerr << "check_rules: cannot read " << argv[1] << "\n";
    return 1;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    const auto rules = dissim::load_rules(ss.str());
    std::cout << "check_rules: " << rules.size() << " rules OK\n";
  } catch (const dissim::Error &e) {
    std::cerr << "check_rules: " << argv[1] << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}
