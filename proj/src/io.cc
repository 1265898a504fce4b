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

#include "hambypass/io.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "hambypass/error.h"

namespace hambypass {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_int(std::string_view s, int line_no) {
  int value = 0;
  s = trim(s);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                       ": expected integer, got '" +
                                       std::string(s) + "'");
  }
  return value;
}

std::vector<int> parse_int_list(std::string_view s, int line_no) {
  std::vector<int> values;
  while (!s.empty()) {
    const auto comma = s.find(',');
    values.push_back(parse_int(s.substr(0, comma), line_no));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return values;
}

std::string join(VertexMask m) {
  std::string s;
  for_each_vertex(m, [&](int v) {
    if (!s.empty()) s += ',';
    s += std::to_string(v);
  });
  return s;
}

}  // namespace

BipartiteDigraph ArcListFile::bipartite() const {
  if (!x_side) {
    throw Error(ErrorCode::kNotBipartite, "input has no partition line");
  }
  return BipartiteDigraph::build(digraph, *x_side);
}

ArcListFile read_arclist(std::istream& in) {
  std::optional<int> order;
  std::optional<VertexMask> x_side;
  std::vector<Arc> arcs;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    if (!order) {
      constexpr std::string_view kPrefix = "digraph p=";
      if (line.substr(0, kPrefix.size()) != kPrefix) {
        throw Error(ErrorCode::kParse,
                    "line " + std::to_string(line_no) +
                        ": expected 'digraph p=<p>'");
      }
      order = parse_int(line.substr(kPrefix.size()), line_no);
      continue;
    }
    if (line.substr(0, 9) == "partition") {
      const auto xpos = line.find("X=");
      const auto ypos = line.find("Y=");
      if (xpos == std::string_view::npos || ypos == std::string_view::npos ||
          ypos < xpos) {
        throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                           ": malformed partition line");
      }
      const auto xs = parse_int_list(trim(line.substr(xpos + 2, ypos - xpos - 2)),
                                     line_no);
      const auto ys = parse_int_list(trim(line.substr(ypos + 2)), line_no);
      const VertexMask xm = mask_of(xs);
      const VertexMask ym = mask_of(ys);
      if ((xm & ym) != 0 || (xm | ym) != full_mask(*order)) {
        throw Error(ErrorCode::kNotBipartite,
                    "partition does not split V(D) into two disjoint sets");
      }
      x_side = xm;
      continue;
    }
    const auto space = line.find_first_of(" \t");
    if (space == std::string_view::npos) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                         ": expected '<u> <v>'");
    }
    arcs.push_back({parse_int(line.substr(0, space), line_no),
                    parse_int(line.substr(space + 1), line_no)});
  }
  if (!order) throw Error(ErrorCode::kParse, "missing 'digraph p=<p>' line");
  ArcListFile file{Digraph::build(*order, arcs), x_side};
  if (x_side) BipartiteDigraph::build(file.digraph, *x_side);
  return file;
}

ArcListFile read_arclist_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  return read_arclist(in);
}

ArcListFile parse_arclist(const std::string& text) {
  std::istringstream in(text);
  return read_arclist(in);
}

void write_arclist(std::ostream& out, const Digraph& d,
                   std::optional<VertexMask> x_side,
                   const std::vector<std::string>& header) {
  for (const auto& h : header) out << "# " << h << '\n';
  out << "digraph p=" << d.order() << '\n';
  if (x_side) {
    out << "partition X=" << join(*x_side)
        << " Y=" << join(d.vertices() & ~*x_side) << '\n';
  }
  for (const Arc& a : d.arcs()) out << a.from << ' ' << a.to << '\n';
}

void write_arclist(std::ostream& out, const BipartiteDigraph& b,
                   const std::vector<std::string>& header) {
  write_arclist(out, b.digraph(), b.x_side(), header);
}

std::string to_arclist(const Digraph& d, std::optional<VertexMask> x_side) {
  std::ostringstream os;
  write_arclist(os, d, x_side);
  return os.str();
}

void write_dot(std::ostream& out, const Digraph& d, const std::string& name) {
  out << "digraph " << name << " {\n";
  for (int v = 0; v < d.order(); ++v) {
    out << "  " << v << " [label=\"" << d.label(v) << "\"];\n";
  }
  for (const Arc& a : d.arcs()) {
    out << "  " << a.from << " -> " << a.to << ";\n";
  }
  out << "}\n";
}

std::string to_dot(const Digraph& d, const std::string& name) {
  std::ostringstream os;
  write_dot(os, d, name);
  return os.str();
}

}  // namespace hambypass
