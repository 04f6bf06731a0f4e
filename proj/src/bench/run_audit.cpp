// Copyright 2026 The qkdpa Authors
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

#include <ostream>
#include <sstream>

#include "qkdpa/bench.hpp"

namespace qkdpa {

CollisionReport run_audit(const RunConfig& cfg, std::ostream& out) {
  const CollisionReport rep = audit_family(cfg.alpha, cfg.beta, cfg.audit);
  if (cfg.out_path) {
    std::ostringstream text;
    write_audit(text, rep, cfg.format);
    const std::string s = text.str();
    write_file_atomic(*cfg.out_path, std::vector<std::uint8_t>(s.begin(), s.end()));
  } else {
    write_audit(out, rep, cfg.format);
  }
  return rep;
}

}  // namespace qkdpa
