// Copyright 2026 The hambypass Authors.
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

#ifndef HAMBYPASS_IO_H_
#define HAMBYPASS_IO_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hambypass/digraph.h"

namespace hambypass {

// Arc-list text format:
//
//   # comment
//   digraph p=<p>
//   partition X=<i,j,...> Y=<k,l,...>     (optional)
//   <u> <v>                               (one arc per line, 0-based)
//
// Blank lines and '#' comments are ignored anywhere.
struct ArcListFile {
  Digraph digraph;
  std::optional<VertexMask> x_side;

  BipartiteDigraph bipartite() const;
};

ArcListFile read_arclist(std::istream& in);
ArcListFile read_arclist_file(const std::string& path);
ArcListFile parse_arclist(const std::string& text);

// `header` lines are written as '#' comments before the digraph line.
void write_arclist(std::ostream& out, const Digraph& d,
                   std::optional<VertexMask> x_side = std::nullopt,
                   const std::vector<std::string>& header = {});
void write_arclist(std::ostream& out, const BipartiteDigraph& b,
                   const std::vector<std::string>& header = {});
std::string to_arclist(const Digraph& d,
                       std::optional<VertexMask> x_side = std::nullopt);

// Graphviz export; both arcs of a 2-cycle are emitted.
void write_dot(std::ostream& out, const Digraph& d,
               const std::string& name = "D");
std::string to_dot(const Digraph& d, const std::string& name = "D");

}  // namespace hambypass

#endif  // HAMBYPASS_IO_H_
